// Construction of the subgroup R <= N_k with R isomorphic to V as a Q-module
// and RQ isomorphic to P:
//
//   * u_1: an element of T of order p centralizing phi(Q_1), Q_1 = stab_Q(z_1);
//   * translates u_x = u_1^phi(g_x) along a fixed transversal g_x with
//     z_1 g_x = x, one per nonzero vector;
//   * W = <u_x directions> <= N_k, elementary abelian of order p^(k-1), the
//     permutation module for Q on the nonzero vectors;
//   * R = image of an injective equivariant embedding of V into W.
//
// Exponent vectors over GF(p) of length k - 1 (one coordinate per nonzero
// vector, in the catalog ordering) describe W-elements; psi maps the GF(p)
// coordinates of v in V to the exponent vector of its R-element.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twg/catalog.hpp"
#include "twg/fp_linalg.hpp"
#include "twg/twisted.hpp"

namespace twg {

struct RData {
  Perm u1;
  std::vector<Perm> u;  // u_x for each nonzero vector index (size k - 1)
  FpMatrix psi;         // 2m x (k-1): GF(p)-coords of v -> exponent vector
  FpMatrix psi_rref;    // row-reduced psi, for membership tests
  ModuleAction w_action;  // permutation module of Q on nonzero vectors
  ModuleAction v_action;  // natural action of Q on V over GF(p)
  std::vector<std::vector<Perm>> elements;  // all q^2 R-elements as N-tuples
  std::vector<std::vector<int>> exponents;  // matching exponent vectors
};

struct RQIsoReport {
  bool psi_additive = false;       // psi(x + y) = psi(x) psi(y)
  bool psi_equivariant = false;    // psi(x g) = psi(x)^g for Q generators
  bool hom_on_generators = false;  // v q -> psi(v) q multiplicative on gen pairs
  bool order_match = false;        // |R| |Q| = |P|
  std::string first_failure;
  bool pass() const {
    return psi_additive && psi_equivariant && hom_on_generators && order_match;
  }
};

// GF(p)-coordinates of v (digits of both field components).
std::vector<int> v_coords(const Catalog& c, Vec2 v);
Vec2 v_from_coords(const Catalog& c, const std::vector<int>& coords);
// Natural module: 2m x 2m matrices of the Q generators over GF(p).
ModuleAction natural_v_action(const Catalog& c);

Perm find_u1(const Catalog& c);
std::vector<Perm> build_translates(const Catalog& c, const Perm& u1);
RData build_R(const Catalog& c);

// The N-tuple with u_x^(e_x) in each nonzero coordinate.
std::vector<Perm> w_element(const Catalog& c, const RData& r,
                            const std::vector<int>& exponents);
// Exponent vector of f if f lies in W, else nullopt.
std::optional<std::vector<int>> w_exponents(const Catalog& c, const RData& r,
                                            const std::vector<Perm>& f);
bool in_R(const Catalog& c, const RData& r, const std::vector<Perm>& f);
// psi as a map V -> N: the R-element of v.
std::vector<Perm> psi_of(const Catalog& c, const RData& r, Vec2 v);

RQIsoReport verify_RQ_iso_P(const Catalog& c, const RData& r);

}  // namespace twg
