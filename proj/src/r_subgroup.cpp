#include "twg/r_subgroup.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace twg {

std::vector<int> v_coords(const Catalog& c, Vec2 v) {
  const int m = c.field().m();
  std::vector<int> out(static_cast<size_t>(2 * m));
  for (int j = 0; j < m; ++j) {
    out[static_cast<size_t>(j)] = c.field().digit(v.x, j);
    out[static_cast<size_t>(m + j)] = c.field().digit(v.y, j);
  }
  return out;
}

Vec2 v_from_coords(const Catalog& c, const std::vector<int>& coords) {
  const int m = c.field().m(), p = c.field().p();
  int x = 0, y = 0;
  for (int j = m - 1; j >= 0; --j) {
    x = x * p + coords[static_cast<size_t>(j)];
    y = y * p + coords[static_cast<size_t>(m + j)];
  }
  return {x, y};
}

ModuleAction natural_v_action(const Catalog& c) {
  const int m = c.field().m();
  ModuleAction act;
  act.p = c.field().p();
  act.dim = 2 * m;
  for (const AffineElement& g : c.Q_gens()) {
    FpMatrix mat(act.dim, act.dim, act.p);
    for (int i = 0; i < act.dim; ++i) {
      std::vector<int> e(static_cast<size_t>(act.dim), 0);
      e[static_cast<size_t>(i)] = 1;
      std::vector<int> img = v_coords(c, c.vecmat(v_from_coords(c, e), g.m));
      for (int j = 0; j < act.dim; ++j) mat.at(i, j) = img[static_cast<size_t>(j)];
    }
    act.gens.push_back(std::move(mat));
  }
  return act;
}

Perm find_u1(const Catalog& c) {
  // Q_1 = stab_Q(z_1); u must have order p and be fixed by phi(Q_1) under
  // conjugation. Scan phi(Q_1) first (where the centre mechanism lives), then
  // all of T, both in sorted enumeration order.
  const int p = c.field().p();
  PermGroup q1 = c.Q_perm().point_stabilizer(0);
  std::vector<Perm> phi_q1_gens;
  for (const Perm& g : q1.generators())
    phi_q1_gens.push_back(c.phi(c.matrix_from_vector_perm(g)));

  auto qualifies = [&](const Perm& u) {
    if (u.is_identity() || element_order(u) != p) return false;
    for (const Perm& s : phi_q1_gens)
      if (conjugate(u, s) != u) return false;
    return true;
  };

  for (const Perm& u :
       enumerate_elements(c.q() + 1, phi_q1_gens, 10'000))
    if (qualifies(u)) return u;
  for (const Perm& u : enumerate_elements(c.q() + 1, c.T_gens(), 10'000))
    if (qualifies(u)) return u;
  throw std::runtime_error(
      "find_u1: no element of order p centralizing phi(Q_1) in T");
}

std::vector<Perm> build_translates(const Catalog& c, const Perm& u1) {
  // BFS over the Q-action on nonzero vectors from z_1, recording a transversal
  // element g_x with z_1 g_x = x; u_x = u1^phi(g_x).
  const int kn = c.k() - 1;
  std::vector<std::optional<Mat2>> reach(static_cast<size_t>(kn));
  reach[0] = Mat2{};
  std::vector<int> queue{0};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int i = queue[qi];
    for (const AffineElement& g : c.Q_gens()) {
      int j = c.vec_index(c.vecmat(c.vec_at(i), g.m));
      if (!reach[static_cast<size_t>(j)]) {
        reach[static_cast<size_t>(j)] =
            c.matmul(*reach[static_cast<size_t>(i)], g.m);
        queue.push_back(j);
      }
    }
  }
  std::vector<Perm> u(static_cast<size_t>(kn));
  for (int i = 0; i < kn; ++i) {
    if (!reach[static_cast<size_t>(i)])
      throw std::runtime_error("build_translates: Q not transitive on V \\ {0}");
    u[static_cast<size_t>(i)] = conjugate(u1, c.phi(*reach[static_cast<size_t>(i)]));
  }
  // Well-definedness: any g with z_1 g = x conjugates u1 to the same u_x.
  std::mt19937 rng(0x5EED);
  for (int trial = 0; trial < 100; ++trial) {
    Mat2 g{};
    int len = static_cast<int>(rng() % 6) + 1;
    for (int s = 0; s < len; ++s)
      g = c.matmul(g, c.Q_gens()[rng() % c.Q_gens().size()].m);
    int x = c.vec_index(c.vecmat(c.vec_at(0), g));
    if (conjugate(u1, c.phi(g)) != u[static_cast<size_t>(x)])
      throw std::runtime_error("build_translates: translate not well-defined");
  }
  return u;
}

std::vector<Perm> w_element(const Catalog& c, const RData& r,
                            const std::vector<int>& exponents) {
  std::vector<Perm> f(static_cast<size_t>(c.k()), Perm::identity(c.q() + 1));
  for (int i = 0; i < c.k() - 1; ++i) {
    Perm pw = Perm::identity(c.q() + 1);
    for (int e = 0; e < exponents[static_cast<size_t>(i)]; ++e)
      pw = compose(pw, r.u[static_cast<size_t>(i)]);
    f[static_cast<size_t>(i)] = std::move(pw);
  }
  return f;
}

std::optional<std::vector<int>> w_exponents(const Catalog& c, const RData& r,
                                            const std::vector<Perm>& f) {
  const int p = c.field().p();
  if (!f[static_cast<size_t>(c.zero_index())].is_identity()) return std::nullopt;
  std::vector<int> e(static_cast<size_t>(c.k() - 1), 0);
  for (int i = 0; i < c.k() - 1; ++i) {
    Perm pw = Perm::identity(c.q() + 1);
    int exp = -1;
    for (int t = 0; t < p; ++t) {
      if (pw == f[static_cast<size_t>(i)]) {
        exp = t;
        break;
      }
      pw = compose(pw, r.u[static_cast<size_t>(i)]);
    }
    if (exp < 0) return std::nullopt;
    e[static_cast<size_t>(i)] = exp;
  }
  return e;
}

bool in_R(const Catalog& c, const RData& r, const std::vector<Perm>& f) {
  auto e = w_exponents(c, r, f);
  return e && in_row_space(r.psi_rref, *e);
}

std::vector<Perm> psi_of(const Catalog& c, const RData& r, Vec2 v) {
  return w_element(c, r, vecmat(v_coords(c, v), r.psi));
}

RData build_R(const Catalog& c) {
  RData r;
  r.u1 = find_u1(c);
  r.u = build_translates(c, r.u1);

  // W is the permutation module for Q on the nonzero vector indices.
  std::vector<Perm> q_on_nonzero;
  for (const AffineElement& g : c.Q_gens()) {
    std::vector<int> img(static_cast<size_t>(c.k() - 1));
    for (int i = 0; i < c.k() - 1; ++i)
      img[static_cast<size_t>(i)] = c.vec_index(c.vecmat(c.vec_at(i), g.m));
    q_on_nonzero.push_back(Perm(std::move(img)));
  }
  r.w_action = permutation_module(c.field().p(), q_on_nonzero);
  r.v_action = natural_v_action(c);

  std::optional<FpMatrix> emb = submodule_copy_of(r.v_action, r.w_action);
  if (!emb)
    throw std::runtime_error(
        "build_R: no injective equivariant embedding of V into W (dim Hom = " +
        std::to_string(equivariant_hom_space(r.v_action, r.w_action).size()) +
        ")");
  r.psi = *emb;
  r.psi_rref = rref(r.psi);

  // Materialize all q^2 elements in vector order of V.
  for (int i = 0; i < c.k(); ++i) {
    std::vector<int> e = vecmat(v_coords(c, c.vec_at(i)), r.psi);
    r.exponents.push_back(e);
    r.elements.push_back(w_element(c, r, e));
  }
  return r;
}

RQIsoReport verify_RQ_iso_P(const Catalog& c, const RData& r) {
  RQIsoReport rep;
  TwistedWreath tw(c);

  // psi additive: exhaustive for q = 4, otherwise 1000 seeded pairs.
  rep.psi_additive = true;
  std::mt19937 rng(0x5EED);
  auto check_pair = [&](Vec2 x, Vec2 y) {
    return psi_of(c, r, c.vadd(x, y)) ==
           tw.n_mul(psi_of(c, r, x), psi_of(c, r, y));
  };
  if (c.q() == 4) {
    for (int i = 0; i < c.k(); ++i)
      for (int j = 0; j < c.k(); ++j)
        if (!check_pair(c.vec_at(i), c.vec_at(j))) {
          rep.psi_additive = false;
          rep.first_failure = "psi_additive";
        }
  } else {
    for (int t = 0; t < 1000; ++t)
      if (!check_pair(c.vec_at(static_cast<int>(rng() % c.k())),
                      c.vec_at(static_cast<int>(rng() % c.k())))) {
        rep.psi_additive = false;
        rep.first_failure = "psi_additive";
      }
  }

  // psi equivariant: psi(x g) = psi(x)^g for every x and every Q generator.
  rep.psi_equivariant = true;
  for (int i = 0; i < c.k(); ++i)
    for (const AffineElement& g : c.Q_gens())
      if (psi_of(c, r, c.vecmat(c.vec_at(i), g.m)) !=
          tw.n_act(psi_of(c, r, c.vec_at(i)), g)) {
        rep.psi_equivariant = false;
        if (rep.first_failure.empty()) rep.first_failure = "psi_equivariant";
      }

  // theta(v q) = psi(v) q as TwElements, multiplicative on generator pairs
  // (and on a sample of random element pairs).
  auto theta = [&](const AffineElement& g) {
    return tw.mul(tw.embed_N(psi_of(c, r, g.v)), tw.embed_P({{0, 0}, g.m}));
  };
  rep.hom_on_generators = true;
  std::vector<AffineElement> sample = c.P_gens();
  for (int t = 0; t < 50; ++t) {
    AffineElement g{};
    int len = static_cast<int>(rng() % 8) + 1;
    for (int s = 0; s < len; ++s)
      g = c.affine_mul(g, c.P_gens()[rng() % c.P_gens().size()]);
    sample.push_back(g);
  }
  for (size_t ai = 0; ai < sample.size(); ++ai)
    for (size_t bi = 0; bi < sample.size(); ++bi)
      if (theta(c.affine_mul(sample[ai], sample[bi])) !=
          tw.mul(theta(sample[ai]), theta(sample[bi]))) {
        rep.hom_on_generators = false;
        if (rep.first_failure.empty())
          rep.first_failure = "hom_on_generators at pair (" +
                              std::to_string(ai) + ", " + std::to_string(bi) +
                              ")";
      }

  std::uint64_t r_order = 1;
  for (int i = 0; i < 2 * c.field().m(); ++i)
    r_order *= static_cast<std::uint64_t>(c.field().p());
  rep.order_match =
      rank(r.psi) == 2 * c.field().m() &&
      r_order * c.Q_perm().order() == c.P_perm().order();
  if (!rep.order_match && rep.first_failure.empty())
    rep.first_failure = "order_match";
  return rep;
}

}  // namespace twg
