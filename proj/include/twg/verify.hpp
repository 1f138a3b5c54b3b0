// Orchestration of the full check battery and the JSON surfaces used by the
// command-line tool.
#pragma once

#include <cstdint>
#include <string>

#include "twg/catalog.hpp"
#include "twg/coset_graph.hpp"
#include "twg/r_subgroup.hpp"
#include "twg/report.hpp"

namespace twg {

inline constexpr const char* kArtifactVersion = "1.0.0";

struct VerifyOptions {
  std::uint32_t seed = 0;  // sampling-based checks only
  int threads = 1;
  bool inject_fault = false;  // corrupt the R basis to exercise failure paths
  bool force = false;         // allow q outside the supported verification set
};

bool q_supported_for_verification(int q);

// Deterministic metadata block (modulus, orderings, construction seed).
ordered_json metadata_json(const Catalog& c);

// hypothesis subcommand: checks (i)-(iii) only.
VerificationReport run_hypothesis(int q);

// verify-graph subcommand: hypothesis, R construction and its invariants,
// connectivity premise, balls, arc transitivity, star quotient, block action.
VerificationReport run_verify(int q, const VerifyOptions& opts);

// catalog subcommand payload.
ordered_json catalog_json(const Catalog& c);

// construct-r subcommand payload.
ordered_json rdata_json(const Catalog& c, const RData& r);

// ball subcommand payloads.
std::string ball_jsonl(const Catalog& c, const Ball& ball);
std::string ball_dot(const Catalog& c, const Ball& ball);

ordered_json perm_json(const Perm& p);
ordered_json fpmatrix_json(const FpMatrix& m);
ordered_json tw_element_json(const TwElement& g);

}  // namespace twg
