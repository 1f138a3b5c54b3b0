// twgraph: construct and verify the twisted-wreath coset graphs built from
// P = q^2 : SL(2,q) and T = PSL(2,q).
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage error.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "twg/asl52.hpp"
#include "twg/verify.hpp"

namespace {

int write_output(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return 2;
  }
  os << payload;
  return 0;
}

int report_result(const twg::VerificationReport& rep, bool json,
                  const std::string& out_path) {
  std::string payload =
      json ? rep.to_json().dump(2) + "\n" : rep.to_text();
  int rc = write_output(payload, out_path);
  if (rc != 0) return rc;
  if (!rep.pass()) {
    const twg::CheckRecord* f = rep.first_failure();
    std::cerr << "failed check: " << (f ? f->name : "?") << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twisted-wreath coset graph construction and verification"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  int q = 4;
  std::string out_path;
  bool json = false;
  std::uint32_t seed = 0;
  int threads = 1;
  app.add_option("--out", out_path, "write output to this file")->capture_default_str();
  app.add_flag("--json", json, "emit machine-readable JSON");
  app.add_option("--seed", seed,
                 "seed for sampling-based checks (constructions are "
                 "seed-independent)");
  app.add_option("--threads", threads, "worker threads for ball expansion");

  auto* cmd_hyp = app.add_subcommand("hypothesis", "check hypothesis (i)-(iii)");
  cmd_hyp->add_option("--q", q, "prime power >= 4")->required();

  auto* cmd_cat = app.add_subcommand("catalog", "dump the ingredient groups");
  cmd_cat->add_option("--q", q, "prime power >= 4")->required();

  auto* cmd_r = app.add_subcommand("construct-r", "build the subgroup R");
  cmd_r->add_option("--q", q, "prime power >= 4")->required();

  auto* cmd_verify =
      app.add_subcommand("verify-graph", "run the full check battery");
  cmd_verify->add_option("--q", q, "prime power in {4,5,7,8,9}")->required();
  bool inject_fault = false, force = false;
  cmd_verify->add_flag("--inject-fault", inject_fault,
                       "corrupt the R basis to exercise the failure path");
  cmd_verify->add_flag("--force", force,
                       "allow q outside the supported verification set");

  auto* cmd_ball = app.add_subcommand("ball", "emit a BFS ball as JSONL");
  cmd_ball->add_option("--q", q, "prime power >= 4")->required();
  std::string side = "left";
  int radius = 1;
  bool dot = false;
  cmd_ball->add_option("--side", side, "left (center u) or right (center v)")
      ->check(CLI::IsMember({"left", "right"}));
  cmd_ball->add_option("--radius", radius, "ball radius (<= 3)");
  cmd_ball->add_flag("--dot", dot, "emit DOT instead of JSONL (radius <= 1)");

  auto* cmd_remark =
      app.add_subcommand("remark-asl52", "ASL(5,2) module computation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (cmd_hyp->parsed()) {
      return report_result(twg::run_hypothesis(q), json, out_path);
    }
    if (cmd_cat->parsed()) {
      twg::Catalog c = twg::Catalog::make_q(q);
      return write_output(twg::catalog_json(c).dump(2) + "\n", out_path);
    }
    if (cmd_r->parsed()) {
      twg::Catalog c = twg::Catalog::make_q(q);
      twg::RData r = twg::build_R(c);
      return write_output(twg::rdata_json(c, r).dump(2) + "\n", out_path);
    }
    if (cmd_verify->parsed()) {
      twg::VerifyOptions opts;
      opts.seed = seed;
      opts.threads = threads;
      opts.inject_fault = inject_fault;
      opts.force = force;
      return report_result(twg::run_verify(q, opts), json, out_path);
    }
    if (cmd_ball->parsed()) {
      twg::Catalog c = twg::Catalog::make_q(q);
      twg::RData r = twg::build_R(c);
      twg::CosetGraph graph(c, r);
      twg::VertexId center =
          side == "left" ? graph.u_vertex() : graph.v_vertex();
      twg::Ball ball = graph.bfs_ball(center, radius, threads);
      return write_output(dot ? twg::ball_dot(c, ball) : twg::ball_jsonl(c, ball),
                          out_path);
    }
    if (cmd_remark->parsed()) {
      twg::Asl52Report rep = twg::run_remark_asl52();
      twg::ordered_json j;
      j["group_order"] = rep.group_order;
      j["dim_w"] = rep.dim_w;
      j["hom_dim"] = rep.hom_dim;
      j["centre_trivial"] = rep.centre_trivial;
      j["stage"] = rep.stage;
      j["status"] = rep.pass() ? "pass" : "fail";
      int rc = write_output(j.dump(2) + "\n", out_path);
      if (rc != 0) return rc;
      return rep.pass() ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
