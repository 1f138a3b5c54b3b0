// The concrete ingredient groups for the q^2 : SL(2,q) family.
//
//   V = GF(q)^2, Q = SL(2,q), P = V x| Q, T = PSL(2,q) on the projective line.
//
// Affine elements are stored in the normal form g = (translation by v) * m,
// so act(g, x) = (x + v) * m with row vectors acted on from the right.
// phi(g) is the projective action of the matrix part on q + 1 points, ordered
// [1:0] first and then [x:1] in field element order.
//
// The vector ordering z_1, ..., z_k lists the nonzero vectors of V in
// lexicographic order (by encoded field values) followed by the zero vector,
// so z_k = 0 as index k - 1.
#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "twg/gf.hpp"
#include "twg/perm.hpp"
#include "twg/perm_group.hpp"

namespace twg {

struct Vec2 {
  int x = 0, y = 0;
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

struct Mat2 {
  // Row-major [[a, b], [c, d]].
  int a = 1, b = 0, c = 0, d = 1;
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

struct AffineElement {
  Vec2 v;  // translation part
  Mat2 m;  // SL(2,q) part
  friend bool operator==(const AffineElement&, const AffineElement&) = default;
};

struct HypothesisReport {
  bool two_transitive = false;
  bool centre_ok = false;
  bool phi_ok = false;
  std::uint64_t degree = 0;
  std::uint64_t stabilizer_order = 0;  // |Q_x| for x = z_1
  std::uint64_t centre_order = 0;      // |Z(Q_x)|
  std::uint64_t phi_image_order = 0;   // |phi(Q)|
  std::uint64_t phi_kernel_order = 0;
  std::uint64_t psl_order = 0;         // q(q^2-1)/gcd(2,q-1)
  bool pass() const { return two_transitive && centre_ok && phi_ok; }
};

class Catalog {
 public:
  // q = p^m must be a prime power >= 4 (and small enough to enumerate V).
  static Catalog make(int p, int m);
  // Convenience: factors q and delegates; throws on non-prime-powers.
  static Catalog make_q(int q);

  const Gf& field() const { return gf_; }
  int q() const { return gf_.q(); }
  int k() const { return k_; }  // |V| = q^2

  // Vector ordering z_1..z_k (0-based indices 0..k-1, zero vector last).
  const std::vector<Vec2>& vectors() const { return vectors_; }
  Vec2 vec_at(int i) const { return vectors_[static_cast<size_t>(i)]; }
  int vec_index(Vec2 v) const;
  int zero_index() const { return k_ - 1; }

  // Field/vector/matrix arithmetic.
  Vec2 vadd(Vec2 a, Vec2 b) const;
  Vec2 vsub(Vec2 a, Vec2 b) const;
  Vec2 vneg(Vec2 a) const;
  Vec2 vecmat(Vec2 v, const Mat2& m) const;
  Mat2 matmul(const Mat2& x, const Mat2& y) const;
  Mat2 matinv(const Mat2& x) const;  // valid for det = 1
  int det(const Mat2& x) const;

  // Affine group operations.
  AffineElement affine_identity() const { return {}; }
  AffineElement affine_mul(const AffineElement& g, const AffineElement& h) const;
  AffineElement affine_inv(const AffineElement& g) const;
  Vec2 affine_act(const AffineElement& g, Vec2 x) const;
  // g = (translation by v) * q; the stored fields are the decomposition.
  std::pair<Vec2, Mat2> decompose(const AffineElement& g) const {
    return {g.v, g.m};
  }

  // Generators: Q by the 2m transvections [[1,t],[0,1]], [[1,0],[t,1]] for t
  // in a GF(p)-basis of GF(q); P adds the 2m basis translations.
  const std::vector<AffineElement>& Q_gens() const { return q_gens_; }
  const std::vector<AffineElement>& P_gens() const { return p_gens_; }

  // phi: projective action of the matrix part on q + 1 points.
  Perm phi(const Mat2& m) const;
  Perm phi(const AffineElement& g) const { return phi(g.m); }
  const std::vector<Perm>& T_gens() const { return t_gens_; }
  const PermGroup& T() const { return *t_group_; }

  // Permutation realizations on the k vector indices.
  Perm perm_on_vectors(const AffineElement& g) const;
  const PermGroup& P_perm() const { return *p_perm_; }
  const PermGroup& Q_perm() const { return *q_perm_; }

  // Recover the matrix from its permutation on vector indices.
  Mat2 matrix_from_vector_perm(const Perm& g) const;

  std::uint64_t P_order_formula() const;  // q^3 (q^2 - 1)
  std::uint64_t T_order_formula() const;  // q (q^2 - 1) / gcd(2, q-1)

 private:
  explicit Catalog(Gf gf);

  Gf gf_;
  int k_ = 0;
  std::vector<Vec2> vectors_;
  std::vector<int> vec_index_;  // encoded (x * q + y) -> ordering index
  std::vector<AffineElement> q_gens_, p_gens_;
  std::vector<Perm> t_gens_;
  std::unique_ptr<PermGroup> t_group_, p_perm_, q_perm_;

 public:
  Catalog(Catalog&&) = default;
};

HypothesisReport check_hypothesis(const Catalog& c);

}  // namespace twg
