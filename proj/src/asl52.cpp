#include "twg/asl52.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "twg/fp_linalg.hpp"
#include "twg/perm_group.hpp"

namespace twg {

namespace {

// 5x5 matrices over GF(2); rows[i] bit j is the (i, j) entry, row vectors act
// from the right: (v M) = xor of rows at the set bits of v.
struct Mat5 {
  std::array<std::uint32_t, 5> rows{};
  friend bool operator==(const Mat5&, const Mat5&) = default;
};

Mat5 m5_identity() {
  Mat5 m;
  for (int i = 0; i < 5; ++i) m.rows[static_cast<size_t>(i)] = 1u << i;
  return m;
}

std::uint32_t m5_apply(std::uint32_t v, const Mat5& m) {
  std::uint32_t out = 0;
  for (int i = 0; i < 5; ++i)
    if (v & (1u << i)) out ^= m.rows[static_cast<size_t>(i)];
  return out;
}

Mat5 m5_mul(const Mat5& a, const Mat5& b) {
  Mat5 c;
  for (int i = 0; i < 5; ++i)
    c.rows[static_cast<size_t>(i)] = m5_apply(a.rows[static_cast<size_t>(i)], b);
  return c;
}

// Vectors 1..31 map to points 0..30.
int point_of(std::uint32_t v) { return static_cast<int>(v) - 1; }
std::uint32_t vec_of(int point) { return static_cast<std::uint32_t>(point) + 1; }

Perm perm_of(const Mat5& m) {
  std::vector<int> img(31);
  for (int pt = 0; pt < 31; ++pt)
    img[static_cast<size_t>(pt)] = point_of(m5_apply(vec_of(pt), m));
  return Perm(std::move(img));
}

Mat5 matrix_of(const Perm& g) {
  Mat5 m;
  for (int i = 0; i < 5; ++i)
    m.rows[static_cast<size_t>(i)] = vec_of(g(point_of(1u << i)));
  return m;
}

// Levi block of an e_1-stabilizing matrix: rows/cols 1..4.
FpMatrix levi_block(const Mat5& h) {
  if (h.rows[0] != 1u)
    throw std::logic_error("levi_block: matrix does not stabilize e_1");
  FpMatrix a(4, 4, 2);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      a.at(i, j) = (h.rows[static_cast<size_t>(i + 1)] >> (j + 1)) & 1u;
  return a;
}

// The Levi quotient acts on the natural 4-dimensional module in the dual
// orientation: with the direct block action the induced module picks up a
// copy of the natural 5-dimensional module (the lift of the quotient map is
// injective), so only the dual identification carries the claimed content.
FpMatrix levi_dual(const Mat5& h) {
  return transpose(fp_inverse(levi_block(h)));
}

}  // namespace

Asl52Report run_remark_asl52() {
  Asl52Report rep;
  rep.stage = "generators";

  // SL(5,2) = < transvection e_1 -> e_1 + e_2, basis 5-cycle >.
  Mat5 t = m5_identity();
  t.rows[0] = 0b00011;
  Mat5 cyc;
  for (int i = 0; i < 5; ++i) cyc.rows[static_cast<size_t>(i)] = 1u << ((i + 1) % 5);
  std::vector<Mat5> gens{t, cyc};
  std::vector<Perm> perm_gens;
  for (const Mat5& g : gens) perm_gens.push_back(perm_of(g));

  rep.stage = "stabilizer chain";
  const int x_point = point_of(1u);  // e_1
  StabChain chain(31, perm_gens, {x_point});
  rep.group_order = chain.order();

  rep.stage = "vector stabilizer";
  std::vector<Perm> qx_gens_raw = chain.stabilizer_gens(1);
  std::vector<Perm> qx_gens;
  for (const Perm& g : qx_gens_raw)
    if (!g.is_identity() &&
        std::find(qx_gens.begin(), qx_gens.end(), g) == qx_gens.end())
      qx_gens.push_back(g);

  // Z(Q_x): a centralizing element fixes x (the unique fixed point) and is
  // determined on each orbit by the image of one point; propagate every
  // candidate image and intersect with Q_x.
  rep.stage = "centre of Q_x";
  {
    std::vector<int> orbit;
    std::vector<char> in_orbit(31, 0);
    for (int pt = 0; pt < 31; ++pt)
      if (pt != x_point && !in_orbit[static_cast<size_t>(pt)]) {
        orbit = PermGroup::orbit_of(31, qx_gens, pt);
        break;
      }
    // Expect one orbit of size 30.
    if (orbit.size() != 30)
      throw std::runtime_error("asl52: unexpected orbit structure of Q_x");
    int base = orbit[0];
    std::uint64_t nontrivial_central = 0;
    for (int target : orbit) {
      std::vector<int> img(31, -1);
      img[static_cast<size_t>(x_point)] = x_point;
      img[static_cast<size_t>(base)] = target;
      std::vector<int> queue{base};
      bool consistent = true;
      for (size_t qi = 0; qi < queue.size() && consistent; ++qi) {
        int y = queue[qi];
        for (const Perm& s : qx_gens) {
          int ys = s(y);
          int want = s(img[static_cast<size_t>(y)]);
          int& slot = img[static_cast<size_t>(ys)];
          if (slot == -1) {
            slot = want;
            queue.push_back(ys);
          } else if (slot != want) {
            consistent = false;
            break;
          }
        }
      }
      if (!consistent) continue;
      bool total = true;
      for (int v : img) total = total && v != -1;
      if (!total) continue;
      Perm candidate(img);
      if (candidate.is_identity()) continue;
      if (chain.contains(candidate) && candidate(x_point) == x_point)
        ++nontrivial_central;
    }
    rep.centre_trivial = nontrivial_central == 0;
  }

  rep.stage = "coset transversal";
  std::vector<std::optional<Mat5>> reach(31);
  reach[static_cast<size_t>(x_point)] = m5_identity();
  std::vector<int> queue{x_point};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int i = queue[qi];
    for (const Mat5& g : gens) {
      int j = point_of(m5_apply(vec_of(i), g));
      if (!reach[static_cast<size_t>(j)]) {
        reach[static_cast<size_t>(j)] = m5_mul(*reach[static_cast<size_t>(i)], g);
        queue.push_back(j);
      }
    }
  }

  rep.stage = "induced module";
  // W = induced module, dim 4 * 31; basis index (i, a) -> 4 i + a.
  ModuleAction w_action;
  w_action.p = 2;
  w_action.dim = 124;
  for (const Mat5& g : gens) {
    FpMatrix wg(124, 124, 2);
    for (int i = 0; i < 31; ++i) {
      const Mat5& gi = *reach[static_cast<size_t>(i)];
      int j = point_of(m5_apply(vec_of(i), g));
      const Mat5& gj = *reach[static_cast<size_t>(j)];
      // h = g_i g g_j^-1 stabilizes e_1; invert g_j via permutation inverse.
      Mat5 gj_inv = matrix_of(inverse(perm_of(gj)));
      Mat5 h = m5_mul(m5_mul(gi, g), gj_inv);
      FpMatrix a = levi_dual(h);
      for (int r = 0; r < 4; ++r)
        for (int cidx = 0; cidx < 4; ++cidx)
          wg.at(4 * i + r, 4 * j + cidx) = a.at(r, cidx);
    }
    w_action.gens.push_back(std::move(wg));
  }
  rep.dim_w = w_action.dim;

  rep.stage = "natural module";
  ModuleAction v_action;
  v_action.p = 2;
  v_action.dim = 5;
  for (const Mat5& g : gens) {
    FpMatrix vg(5, 5, 2);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        vg.at(i, j) = (g.rows[static_cast<size_t>(i)] >> j) & 1u;
    v_action.gens.push_back(std::move(vg));
  }

  rep.stage = "equivariant hom space";
  rep.hom_dim = static_cast<int>(equivariant_hom_space(v_action, w_action).size());
  rep.stage = "done";
  return rep;
}

}  // namespace twg
