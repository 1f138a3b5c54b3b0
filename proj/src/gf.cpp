#include "twg/gf.hpp"

#include <stdexcept>

namespace twg {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Polynomials over GF(p), coefficients low-to-high, no trailing zeros.
using Poly = std::vector<int>;

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return trim(c);
}

Poly poly_mod(Poly a, const Poly& mod, int p) {
  a = trim(a);
  int inv_lead = 1;
  for (int t = 1; t < p; ++t)
    if (t * mod.back() % p == 1) inv_lead = t;
  while (a.size() >= mod.size()) {
    int coef = a.back() * inv_lead % p;
    size_t shift = a.size() - mod.size();
    for (size_t i = 0; i < mod.size(); ++i)
      a[shift + i] = ((a[shift + i] - coef * mod[i]) % p + p) % p;
    a = trim(a);
    if (a.empty()) break;
  }
  return a;
}

int encode(const Poly& a, int p) {
  int v = 0;
  for (size_t i = a.size(); i-- > 0;) v = v * p + a[i];
  return v;
}

Poly decode(int v, int p, int m) {
  Poly a(static_cast<size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    a[static_cast<size_t>(i)] = v % p;
    v /= p;
  }
  return a;
}

bool is_irreducible(const Poly& f, int p) {
  // Trial division by all monic polynomials of degree 1..deg(f)/2.
  int deg = static_cast<int>(f.size()) - 1;
  if (deg < 1) return false;
  for (int d = 1; 2 * d <= deg; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int v = 0; v < count; ++v) {
      Poly g = decode(v, p, d);
      g.push_back(1);  // monic of degree d
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Poly fixed_modulus(int p, int m) {
  if (m == 1) return {0, 1};                      // x
  if (p == 2 && m == 2) return {1, 1, 1};         // x^2+x+1
  if (p == 2 && m == 3) return {1, 1, 0, 1};      // x^3+x+1
  if (p == 3 && m == 2) return {1, 0, 1};         // x^2+1
  // Smallest monic irreducible of degree m, by encoded value.
  int count = 1;
  for (int i = 0; i < m; ++i) count *= p;
  for (int v = 0; v < count; ++v) {
    Poly f = decode(v, p, m);
    f.push_back(1);
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("fixed_modulus: no irreducible found");
}

}  // namespace

Gf Gf::make(int p, int m) {
  if (!is_prime(p)) throw std::invalid_argument("Gf: p must be prime");
  if (m < 1 || m > 20) throw std::invalid_argument("Gf: bad extension degree");
  FieldSpec spec;
  spec.p = p;
  spec.m = m;
  spec.q = 1;
  for (int i = 0; i < m; ++i) {
    spec.q *= p;
    if (spec.q > 1 << 20) throw std::invalid_argument("Gf: field too large");
  }
  spec.modulus = fixed_modulus(p, m);
  if (m > 1 && !is_irreducible(spec.modulus, p))
    throw std::invalid_argument("Gf: modulus not irreducible");
  return Gf(std::move(spec));
}

Gf::Gf(FieldSpec spec) : spec_(std::move(spec)) {
  const int q = spec_.q, p = spec_.p, m = spec_.m;
  add_.assign(static_cast<size_t>(q) * q, 0);
  mul_.assign(static_cast<size_t>(q) * q, 0);
  neg_.assign(static_cast<size_t>(q), 0);
  inv_.assign(static_cast<size_t>(q), 0);
  for (int a = 0; a < q; ++a) {
    Poly pa = decode(a, p, m);
    Poly na(pa.size());
    for (size_t i = 0; i < pa.size(); ++i) na[i] = (p - pa[i]) % p;
    neg_[static_cast<size_t>(a)] = encode(na, p);
    for (int b = 0; b < q; ++b) {
      Poly pb = decode(b, p, m);
      Poly s(pa.size());
      for (size_t i = 0; i < pa.size(); ++i) s[i] = (pa[i] + pb[i]) % p;
      add_[idx(a, b)] = encode(s, p);
      Poly r = poly_mod(poly_mul(trim(pa), trim(pb), p), spec_.modulus, p);
      r.resize(static_cast<size_t>(m), 0);
      mul_[idx(a, b)] = encode(r, p);
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (mul_[idx(a, b)] == 1) inv_[static_cast<size_t>(a)] = b;
}

int Gf::inv(int a) const {
  if (a == 0) throw std::invalid_argument("Gf: inversion of zero");
  return inv_[static_cast<size_t>(a)];
}

int Gf::pow(int a, int e) const {
  int r = 1;
  for (int i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

int Gf::digit(int a, int j) const {
  for (int i = 0; i < j; ++i) a /= spec_.p;
  return a % spec_.p;
}

}  // namespace twg
