#include "twg/twisted.hpp"

#include <stdexcept>

namespace twg {

std::vector<Perm> TwistedWreath::identity_tuple() const {
  return std::vector<Perm>(static_cast<size_t>(cat_.k()),
                           Perm::identity(cat_.q() + 1));
}

std::vector<Perm> TwistedWreath::n_act(const std::vector<Perm>& f,
                                       const AffineElement& g) const {
  // f^g(z_i) = f(z_j)^phi(q) where g * z_i = z_j * q; the split is computed by
  // one affine multiplication and the stored decomposition, so the transversal
  // bookkeeping lives entirely here. The Q part equals g.m for every i (V is
  // normal), hence one precomputed twist.
  const int k = cat_.k();
  const Perm twist = cat_.phi(g.m);
  std::vector<Perm> out(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    auto [zj, q] =
        cat_.decompose(cat_.affine_mul(g, AffineElement{cat_.vec_at(i), {}}));
    out[static_cast<size_t>(i)] =
        conjugate(f[static_cast<size_t>(cat_.vec_index(zj))], twist);
  }
  return out;
}

std::vector<Perm> TwistedWreath::n_mul(const std::vector<Perm>& a,
                                       const std::vector<Perm>& b) const {
  std::vector<Perm> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = compose(a[i], b[i]);
  return out;
}

std::vector<Perm> TwistedWreath::n_inv(const std::vector<Perm>& a) const {
  std::vector<Perm> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = inverse(a[i]);
  return out;
}

TwElement TwistedWreath::mul(const TwElement& a, const TwElement& b) const {
  // (f1, p1)(f2, p2) = (f1 * f2^(p1^-1), p1 p2)
  return {n_mul(a.f, n_act(b.f, cat_.affine_inv(a.p))),
          cat_.affine_mul(a.p, b.p)};
}

TwElement TwistedWreath::inv(const TwElement& a) const {
  // (f, p)^-1 = ((f^-1)^p, p^-1)
  return {n_act(n_inv(a.f), a.p), cat_.affine_inv(a.p)};
}

TwElement TwistedWreath::conj(const TwElement& x, const TwElement& g) const {
  return mul(mul(inv(g), x), g);
}

TwElement TwistedWreath::embed_N(std::vector<Perm> f) const {
  if (static_cast<int>(f.size()) != cat_.k())
    throw std::invalid_argument("embed_N: tuple length must be k");
  for (const Perm& t : f)
    if (!cat_.T().contains(t))
      throw std::invalid_argument("embed_N: coordinate not in T");
  return {std::move(f), {}};
}

TwElement TwistedWreath::embed_P(const AffineElement& p) const {
  return {identity_tuple(), p};
}

bool TwistedWreath::in_T_i(const std::vector<Perm>& f, int i) const {
  for (int j = 0; j < cat_.k(); ++j)
    if (j != i && !f[static_cast<size_t>(j)].is_identity()) return false;
  return true;
}

bool TwistedWreath::in_N_k(const std::vector<Perm>& f) const {
  return f[static_cast<size_t>(cat_.zero_index())].is_identity();
}

std::vector<Perm> TwistedWreath::diagonal(const Perm& t) const {
  return std::vector<Perm>(static_cast<size_t>(cat_.k()), t);
}

CHatReport TwistedWreath::verify_c_hat() const {
  CHatReport rep;
  const bool odd = cat_.field().p() != 2;

  std::vector<Perm> ts = cat_.T_gens();
  ts.push_back(compose(cat_.T_gens()[0], cat_.T_gens()[1]));

  // (a) translations and ker(phi) centralize the diagonal.
  std::vector<AffineElement> centralizing;
  for (const AffineElement& g : cat_.P_gens())
    if (g.m == Mat2{}) centralizing.push_back(g);
  if (odd) {
    int neg = cat_.field().neg(1);
    centralizing.push_back({{0, 0}, {neg, 0, 0, neg}});  // -I spans ker(phi)
  }
  rep.v_kernel_centralizes = true;
  for (const Perm& t : ts)
    for (const AffineElement& g : centralizing)
      if (n_act(diagonal(t), g) != diagonal(t)) rep.v_kernel_centralizes = false;

  // (b) Q twists the diagonal by phi.
  rep.q_twists = true;
  for (const Perm& t : ts)
    for (const AffineElement& g : cat_.Q_gens())
      if (n_act(diagonal(t), g) != diagonal(conjugate(t, cat_.phi(g.m))))
        rep.q_twists = false;

  // (c) some q in Q moves some diagonal element.
  for (const Perm& t : ts)
    for (const AffineElement& g : cat_.Q_gens())
      if (n_act(diagonal(t), g) != diagonal(t)) rep.q_acts_nontrivially = true;

  return rep;
}

Perm TwistedWreath::factors_permutation(const TwElement& g) const {
  std::vector<int> img(static_cast<size_t>(cat_.k()));
  for (int i = 0; i < cat_.k(); ++i)
    img[static_cast<size_t>(i)] = cat_.vec_index(
        cat_.vecmat(cat_.vsub(cat_.vec_at(i), g.p.v), g.p.m));
  return Perm(std::move(img));
}

}  // namespace twg
