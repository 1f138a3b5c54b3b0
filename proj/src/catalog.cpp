#include "twg/catalog.hpp"

#include <memory>
#include <numeric>
#include <stdexcept>

namespace twg {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Catalog Catalog::make(int p, int m) {
  if (!is_prime(p)) throw std::invalid_argument("make_catalog: p must be prime");
  Gf gf = Gf::make(p, m);
  if (gf.q() < 4)
    throw std::invalid_argument("make_catalog: q must be at least 4");
  if (gf.q() > 64)
    throw std::invalid_argument("make_catalog: q > 64 not supported");
  return Catalog(std::move(gf));
}

Catalog Catalog::make_q(int q) {
  if (q < 4) throw std::invalid_argument("make_catalog: q must be at least 4");
  for (int p = 2; p <= q; ++p) {
    if (!is_prime(p) || q % p != 0) continue;
    int m = 0, t = q;
    while (t % p == 0) {
      t /= p;
      ++m;
    }
    if (t != 1)
      throw std::invalid_argument("make_catalog: q is not a prime power");
    return make(p, m);
  }
  throw std::invalid_argument("make_catalog: q is not a prime power");
}

Catalog::Catalog(Gf gf) : gf_(std::move(gf)) {
  const int q = gf_.q();
  k_ = q * q;

  // z_1..z_{k-1}: nonzero vectors in lexicographic order; z_k = 0.
  vec_index_.assign(static_cast<size_t>(k_), -1);
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y) {
      if (x == 0 && y == 0) continue;
      vec_index_[static_cast<size_t>(x * q + y)] =
          static_cast<int>(vectors_.size());
      vectors_.push_back({x, y});
    }
  vec_index_[0] = static_cast<int>(vectors_.size());
  vectors_.push_back({0, 0});

  // Transvection generators over a GF(p)-basis {theta^j} of GF(q).
  for (int j = 0; j < gf_.m(); ++j) {
    int t = 1;
    for (int i = 0; i < j; ++i) t = gf_.mul(t, gf_.p());  // theta^j encodes as p^j
    q_gens_.push_back({{0, 0}, {1, t, 0, 1}});
    q_gens_.push_back({{0, 0}, {1, 0, t, 1}});
  }
  // P: the Q generators plus basis translations.
  p_gens_ = q_gens_;
  for (int j = 0; j < gf_.m(); ++j) {
    int t = 1;
    for (int i = 0; i < j; ++i) t = gf_.mul(t, gf_.p());
    p_gens_.push_back({{t, 0}, {1, 0, 0, 1}});
    p_gens_.push_back({{0, t}, {1, 0, 0, 1}});
  }

  for (const AffineElement& g : q_gens_) t_gens_.push_back(phi(g.m));
  t_group_ = std::make_unique<PermGroup>(q + 1, t_gens_);

  std::vector<Perm> p_perms, q_perms;
  for (const AffineElement& g : p_gens_) p_perms.push_back(perm_on_vectors(g));
  for (const AffineElement& g : q_gens_) q_perms.push_back(perm_on_vectors(g));
  p_perm_ = std::make_unique<PermGroup>(k_, std::move(p_perms));
  q_perm_ = std::make_unique<PermGroup>(k_, std::move(q_perms));
}

int Catalog::vec_index(Vec2 v) const {
  return vec_index_[static_cast<size_t>(v.x * gf_.q() + v.y)];
}

Vec2 Catalog::vadd(Vec2 a, Vec2 b) const {
  return {gf_.add(a.x, b.x), gf_.add(a.y, b.y)};
}

Vec2 Catalog::vsub(Vec2 a, Vec2 b) const {
  return {gf_.sub(a.x, b.x), gf_.sub(a.y, b.y)};
}

Vec2 Catalog::vneg(Vec2 a) const { return {gf_.neg(a.x), gf_.neg(a.y)}; }

Vec2 Catalog::vecmat(Vec2 v, const Mat2& m) const {
  return {gf_.add(gf_.mul(v.x, m.a), gf_.mul(v.y, m.c)),
          gf_.add(gf_.mul(v.x, m.b), gf_.mul(v.y, m.d))};
}

Mat2 Catalog::matmul(const Mat2& x, const Mat2& y) const {
  return {gf_.add(gf_.mul(x.a, y.a), gf_.mul(x.b, y.c)),
          gf_.add(gf_.mul(x.a, y.b), gf_.mul(x.b, y.d)),
          gf_.add(gf_.mul(x.c, y.a), gf_.mul(x.d, y.c)),
          gf_.add(gf_.mul(x.c, y.b), gf_.mul(x.d, y.d))};
}

int Catalog::det(const Mat2& x) const {
  return gf_.sub(gf_.mul(x.a, x.d), gf_.mul(x.b, x.c));
}

Mat2 Catalog::matinv(const Mat2& x) const {
  // Adjugate; exact inverse when det = 1.
  if (det(x) != 1) throw std::invalid_argument("matinv: determinant is not 1");
  return {x.d, gf_.neg(x.b), gf_.neg(x.c), x.a};
}

AffineElement Catalog::affine_mul(const AffineElement& g,
                                  const AffineElement& h) const {
  // (t_v a)(t_w b) = t_{v + w a^-1} (a b)
  return {vadd(g.v, vecmat(h.v, matinv(g.m))), matmul(g.m, h.m)};
}

AffineElement Catalog::affine_inv(const AffineElement& g) const {
  return {vneg(vecmat(g.v, g.m)), matinv(g.m)};
}

Vec2 Catalog::affine_act(const AffineElement& g, Vec2 x) const {
  return vecmat(vadd(x, g.v), g.m);
}

Perm Catalog::phi(const Mat2& m) const {
  // Projective points: index 0 = [1:0], index 1 + x = [x:1].
  const int q = gf_.q();
  std::vector<int> img(static_cast<size_t>(q + 1));
  auto point_index = [&](int u, int v) {
    if (v == 0) return 0;
    return 1 + gf_.mul(u, gf_.inv(v));
  };
  img[0] = point_index(m.a, m.b);  // [1:0] * m = (a, b)
  for (int x = 0; x < q; ++x) {
    // [x:1] * m = (x a + c, x b + d)
    int u = gf_.add(gf_.mul(x, m.a), m.c);
    int v = gf_.add(gf_.mul(x, m.b), m.d);
    img[static_cast<size_t>(1 + x)] = point_index(u, v);
  }
  return Perm(std::move(img));
}

Perm Catalog::perm_on_vectors(const AffineElement& g) const {
  std::vector<int> img(static_cast<size_t>(k_));
  for (int i = 0; i < k_; ++i)
    img[static_cast<size_t>(i)] = vec_index(affine_act(g, vec_at(i)));
  return Perm(std::move(img));
}

Mat2 Catalog::matrix_from_vector_perm(const Perm& g) const {
  // Rows are the images of the standard basis vectors.
  Vec2 r1 = vec_at(g(vec_index({1, 0})));
  Vec2 r2 = vec_at(g(vec_index({0, 1})));
  Mat2 m{r1.x, r1.y, r2.x, r2.y};
  if (det(m) != 1)
    throw std::invalid_argument("matrix_from_vector_perm: not an SL(2,q) action");
  return m;
}

std::uint64_t Catalog::P_order_formula() const {
  std::uint64_t q = static_cast<std::uint64_t>(gf_.q());
  return q * q * q * (q * q - 1);
}

std::uint64_t Catalog::T_order_formula() const {
  std::uint64_t q = static_cast<std::uint64_t>(gf_.q());
  return q * (q * q - 1) / std::gcd<std::uint64_t>(2, q - 1);
}

HypothesisReport check_hypothesis(const Catalog& c) {
  HypothesisReport rep;
  rep.degree = static_cast<std::uint64_t>(c.k());

  // (i) P affine 2-transitive of degree q^2.
  rep.two_transitive = c.P_perm().is_2_transitive();

  // (ii) Z(Q_x) for the stabilizer of the first nonzero vector, |Z| = 0 mod p.
  PermGroup qx = c.Q_perm().point_stabilizer(0);
  rep.stabilizer_order = qx.order();
  std::vector<Perm> elements =
      enumerate_elements(c.k(), qx.generators(), 100'000);
  std::uint64_t z = 0;
  for (const Perm& a : elements) {
    bool central = true;
    for (const Perm& g : qx.generators())
      if (compose(a, g) != compose(g, a)) {
        central = false;
        break;
      }
    if (central) ++z;
  }
  rep.centre_order = z;
  rep.centre_ok = z > 1 && z % static_cast<unsigned>(c.field().p()) == 0;

  // (iii) |phi(Q)| = |PSL(2,q)|; phi(Q) = Inn(T) in this realization.
  rep.phi_image_order = c.T().order();
  rep.psl_order = c.T_order_formula();
  rep.phi_ok = rep.phi_image_order == rep.psl_order;
  rep.phi_kernel_order = c.Q_perm().order() / rep.phi_image_order;
  return rep;
}

}  // namespace twg
