// Element arithmetic of G = T twr_phi P.
//
// N = { f : P -> T | f(hq) = f(h)^phi(q) }, recorded by the k values
// f(z_1), ..., f(z_k) on the vector transversal. P acts by f^g(x) = f(gx),
// which on the transversal reads
//
//   f^g(z_i) = f(z_j)^phi(m)   where  g * z_i = z_j * m  in P,
//
// i.e. z_j = v + z_i m^-1 for g = (v, m). Elements of G are stored in the
// (f, p) normal form with the N part first; conjugation is x^y = y^-1 x y.
#pragma once

#include <vector>

#include "twg/catalog.hpp"
#include "twg/perm.hpp"

namespace twg {

struct TwElement {
  std::vector<Perm> f;  // k coordinates, permutations on q + 1 points
  AffineElement p;
  friend bool operator==(const TwElement&, const TwElement&) = default;
};

struct CHatReport {
  bool v_kernel_centralizes = false;  // (f_t)^g = f_t for g in V and ker(phi)
  bool q_twists = false;              // (f_t)^g = f_{t^phi(g)} for g in Q
  bool q_acts_nontrivially = false;   // some q, t with (f_t)^q != f_t
  bool pass() const {
    return v_kernel_centralizes && q_twists && q_acts_nontrivially;
  }
};

class TwistedWreath {
 public:
  explicit TwistedWreath(const Catalog& cat) : cat_(cat) {}

  const Catalog& catalog() const { return cat_; }
  int k() const { return cat_.k(); }

  std::vector<Perm> identity_tuple() const;
  TwElement identity() const { return {identity_tuple(), {}}; }

  TwElement mul(const TwElement& a, const TwElement& b) const;
  TwElement inv(const TwElement& a) const;
  TwElement conj(const TwElement& x, const TwElement& g) const;  // g^-1 x g

  // The twisting action f^g for g in P (used by mul and by canonical labels).
  std::vector<Perm> n_act(const std::vector<Perm>& f, const AffineElement& g) const;
  std::vector<Perm> n_mul(const std::vector<Perm>& a, const std::vector<Perm>& b) const;
  std::vector<Perm> n_inv(const std::vector<Perm>& a) const;

  // Checks every coordinate against T's stabilizer chain.
  TwElement embed_N(std::vector<Perm> f) const;
  TwElement embed_P(const AffineElement& p) const;
  // The stored pair (elements are kept in normal form at all times).
  std::pair<std::vector<Perm>, AffineElement> normal_form(const TwElement& g) const {
    return {g.f, g.p};
  }

  bool in_T_i(const std::vector<Perm>& f, int i) const;
  bool in_N_k(const std::vector<Perm>& f) const;

  // The diagonal f_t = (t, ..., t); these form C_N(V ker phi).
  std::vector<Perm> diagonal(const Perm& t) const;
  CHatReport verify_c_hat() const;

  // The permutation i -> j with (T_i)^g = T_j of the conjugation action of G
  // on the simple direct factors; for g = (v, m) this is z -> (z - v) m on
  // vector indices (the identity on N parts).
  Perm factors_permutation(const TwElement& g) const;

 private:
  const Catalog& cat_;
};

}  // namespace twg
