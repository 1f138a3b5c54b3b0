// Arithmetic of GF(p^m). Elements are encoded as integers in [0, q): the
// value sum c_j p^j encodes the polynomial sum c_j x^j over GF(p).
//
// Fixed moduli, recorded in all output metadata:
//   GF(4): x^2 + x + 1,  GF(8): x^3 + x + 1,  GF(9): x^2 + 1.
// For m = 1 the modulus is x; for other (p, m) the lexicographically smallest
// monic irreducible of degree m is used.
#pragma once

#include <vector>

namespace twg {

struct FieldSpec {
  int p = 0;                 // prime
  int m = 0;                 // extension degree
  int q = 0;                 // p^m
  std::vector<int> modulus;  // monic, degree m, coefficients low-to-high
};

class Gf {
 public:
  // Validates p prime and the modulus irreducible (trial factorization).
  static Gf make(int p, int m);

  const FieldSpec& spec() const { return spec_; }
  int p() const { return spec_.p; }
  int m() const { return spec_.m; }
  int q() const { return spec_.q; }

  int add(int a, int b) const { return add_[idx(a, b)]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int neg(int a) const { return neg_[static_cast<size_t>(a)]; }
  int mul(int a, int b) const { return mul_[idx(a, b)]; }
  int inv(int a) const;  // throws on a == 0
  int pow(int a, int e) const;

  // Coefficient of p^j in the encoding (the coefficient of x^j).
  int digit(int a, int j) const;

 private:
  explicit Gf(FieldSpec spec);
  size_t idx(int a, int b) const {
    return static_cast<size_t>(a) * static_cast<size_t>(spec_.q) +
           static_cast<size_t>(b);
  }

  FieldSpec spec_;
  std::vector<int> add_, mul_, neg_, inv_;
};

}  // namespace twg
