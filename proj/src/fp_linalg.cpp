#include "twg/fp_linalg.hpp"

#include <random>
#include <stdexcept>

namespace twg {

namespace {

int mod_inv(int a, int p) {
  for (int t = 1; t < p; ++t)
    if (t * a % p == 1) return t;
  throw std::logic_error("mod_inv: not invertible");
}

}  // namespace

FpMatrix::FpMatrix(int r, int c, int prime) : rows(r), cols(c), p(prime) {
  if (r < 0 || c < 0 || prime < 2)
    throw std::invalid_argument("FpMatrix: bad shape");
  a.assign(static_cast<size_t>(r) * c, 0);
}

FpMatrix FpMatrix::identity(int n, int prime) {
  FpMatrix m(n, n, prime);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<int> FpMatrix::row(int r) const {
  return {a.begin() + static_cast<size_t>(r) * cols,
          a.begin() + static_cast<size_t>(r + 1) * cols};
}

FpMatrix matmul(const FpMatrix& x, const FpMatrix& y) {
  if (x.cols != y.rows || x.p != y.p)
    throw std::invalid_argument("matmul: shape or prime mismatch");
  FpMatrix z(x.rows, y.cols, x.p);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      int v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        z.at(i, j) = (z.at(i, j) + v * y.at(k, j)) % x.p;
    }
  return z;
}

FpMatrix transpose(const FpMatrix& x) {
  FpMatrix z(x.cols, x.rows, x.p);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) z.at(j, i) = x.at(i, j);
  return z;
}

std::vector<int> vecmat(const std::vector<int>& v, const FpMatrix& m) {
  if (static_cast<int>(v.size()) != m.rows)
    throw std::invalid_argument("vecmat: size mismatch");
  std::vector<int> out(static_cast<size_t>(m.cols), 0);
  for (int i = 0; i < m.rows; ++i) {
    if (v[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j < m.cols; ++j)
      out[static_cast<size_t>(j)] =
          (out[static_cast<size_t>(j)] + v[static_cast<size_t>(i)] * m.at(i, j)) %
          m.p;
  }
  return out;
}

FpMatrix rref(const FpMatrix& x, int* rank_out) {
  FpMatrix m = x;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
    int inv = mod_inv(m.at(r, c), m.p);
    for (int j = 0; j < m.cols; ++j) m.at(r, j) = m.at(r, j) * inv % m.p;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      int f = m.at(i, c);
      for (int j = 0; j < m.cols; ++j)
        m.at(i, j) = ((m.at(i, j) - f * m.at(r, j)) % m.p + m.p) % m.p;
    }
    ++r;
  }
  if (rank_out) *rank_out = r;
  return m;
}

int rank(const FpMatrix& x) {
  int r = 0;
  rref(x, &r);
  return r;
}

FpMatrix fp_inverse(const FpMatrix& x) {
  if (x.rows != x.cols) throw std::invalid_argument("fp_inverse: not square");
  FpMatrix aug(x.rows, 2 * x.cols, x.p);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) aug.at(i, j) = x.at(i, j);
    aug.at(i, x.cols + i) = 1;
  }
  FpMatrix e = rref(aug);
  for (int i = 0; i < x.rows; ++i)
    if (e.at(i, i) != 1) throw std::invalid_argument("fp_inverse: singular");
  FpMatrix inv(x.rows, x.cols, x.p);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) inv.at(i, j) = e.at(i, x.cols + j);
  return inv;
}

std::vector<std::vector<int>> left_kernel(const FpMatrix& m) {
  // v * M = 0  <=>  M^T * v^T = 0; echelonize M^T and read off free columns.
  FpMatrix t = transpose(m);
  int r = 0;
  FpMatrix e = rref(t, &r);
  std::vector<int> pivot_col(static_cast<size_t>(r), -1);
  std::vector<char> is_pivot(static_cast<size_t>(t.cols), 0);
  for (int i = 0, c = 0; i < r; ++i) {
    while (c < t.cols && e.at(i, c) == 0) ++c;
    pivot_col[static_cast<size_t>(i)] = c;
    is_pivot[static_cast<size_t>(c)] = 1;
  }
  std::vector<std::vector<int>> basis;
  for (int free = 0; free < t.cols; ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    std::vector<int> v(static_cast<size_t>(t.cols), 0);
    v[static_cast<size_t>(free)] = 1;
    for (int i = 0; i < r; ++i) {
      int c = pivot_col[static_cast<size_t>(i)];
      v[static_cast<size_t>(c)] = (m.p - e.at(i, free)) % m.p;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<int>> solve_left(const FpMatrix& m,
                                           const std::vector<int>& target) {
  // x * M = t  <=>  M^T x^T = t^T: eliminate on [M^T | t^T].
  if (static_cast<int>(target.size()) != m.cols)
    throw std::invalid_argument("solve_left: target size mismatch");
  FpMatrix aug(m.cols, m.rows + 1, m.p);
  for (int i = 0; i < m.cols; ++i) {
    for (int j = 0; j < m.rows; ++j) aug.at(i, j) = m.at(j, i);
    aug.at(i, m.rows) = target[static_cast<size_t>(i)];
  }
  FpMatrix e = rref(aug);
  std::vector<int> x(static_cast<size_t>(m.rows), 0);
  for (int i = 0; i < e.rows; ++i) {
    int c = 0;
    while (c < m.rows && e.at(i, c) == 0) ++c;
    if (c == m.rows) {
      if (e.at(i, m.rows) != 0) return std::nullopt;  // inconsistent row
      continue;
    }
    // free variables stay zero; the pivot picks up the augmented entry
    x[static_cast<size_t>(c)] = e.at(i, m.rows);
  }
  return x;
}

bool in_row_space(const FpMatrix& m, const std::vector<int>& v) {
  return solve_left(m, v).has_value();
}

ModuleAction permutation_module(int p, const std::vector<Perm>& basis_perms) {
  ModuleAction act;
  act.p = p;
  act.dim = basis_perms.empty() ? 0 : basis_perms[0].degree();
  for (const Perm& g : basis_perms) {
    if (g.degree() != act.dim)
      throw std::invalid_argument("permutation_module: degree mismatch");
    FpMatrix m(act.dim, act.dim, p);
    for (int i = 0; i < act.dim; ++i) m.at(i, g(i)) = 1;
    act.gens.push_back(std::move(m));
  }
  return act;
}

std::vector<FpMatrix> equivariant_hom_space(const ModuleAction& A,
                                            const ModuleAction& B) {
  if (A.gens.size() != B.gens.size())
    throw std::invalid_argument("equivariant_hom_space: generator count mismatch");
  if (A.p != B.p)
    throw std::invalid_argument("equivariant_hom_space: prime mismatch");
  const int p = A.p, da = A.dim, db = B.dim;
  const int unknowns = da * db;  // X[l][j] at index l*db + j
  // Equations (A_g X - X B_g)[i][j] = 0, stacked for all generators.
  FpMatrix sys(static_cast<int>(A.gens.size()) * da * db, unknowns, p);
  int row = 0;
  for (size_t gi = 0; gi < A.gens.size(); ++gi) {
    const FpMatrix& ag = A.gens[gi];
    const FpMatrix& bg = B.gens[gi];
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < db; ++j) {
        for (int l = 0; l < da; ++l)
          sys.at(row, l * db + j) =
              (sys.at(row, l * db + j) + ag.at(i, l)) % p;
        for (int l = 0; l < db; ++l)
          sys.at(row, i * db + l) =
              ((sys.at(row, i * db + l) - bg.at(l, j)) % p + p) % p;
        ++row;
      }
  }
  // Solutions are the left kernel of sys^T, i.e. vectors v with sys * v = 0.
  std::vector<std::vector<int>> flat = left_kernel(transpose(sys));
  std::vector<FpMatrix> basis;
  for (const auto& v : flat) {
    FpMatrix x(da, db, p);
    x.a.assign(v.begin(), v.end());
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<FpMatrix> submodule_copy_of(const ModuleAction& V,
                                          const ModuleAction& W) {
  std::vector<FpMatrix> basis = equivariant_hom_space(V, W);
  if (basis.empty()) return std::nullopt;
  auto injective = [&](const FpMatrix& x) { return rank(x) == V.dim; };
  for (const FpMatrix& x : basis)
    if (injective(x)) return x;

  const int p = V.p;
  const size_t dim = basis.size();
  auto combine = [&](const std::vector<int>& coeffs) {
    FpMatrix x(V.dim, W.dim, p);
    for (size_t bi = 0; bi < dim; ++bi) {
      if (coeffs[bi] == 0) continue;
      for (size_t e = 0; e < x.a.size(); ++e)
        x.a[e] = (x.a[e] + coeffs[bi] * basis[bi].a[e]) % p;
    }
    return x;
  };

  double space_size = 1;
  for (size_t i = 0; i < dim; ++i) space_size *= p;
  if (space_size <= 65536.0) {
    std::vector<int> coeffs(dim, 0);
    for (;;) {
      size_t i = 0;
      while (i < dim && coeffs[i] == p - 1) coeffs[i++] = 0;
      if (i == dim) break;
      ++coeffs[i];
      FpMatrix x = combine(coeffs);
      if (injective(x)) return x;
    }
    return std::nullopt;  // exhausted
  }

  std::mt19937 rng(kSubmoduleSearchSeed);
  for (int trial = 0; trial < 10'000; ++trial) {
    std::vector<int> coeffs(dim);
    for (size_t i = 0; i < dim; ++i)
      coeffs[i] = static_cast<int>(rng() % static_cast<std::uint32_t>(p));
    FpMatrix x = combine(coeffs);
    if (injective(x)) return x;
  }
  return std::nullopt;
}

Orthocomplement orthocomplement(const std::vector<std::vector<int>>& s_basis,
                                int ambient_dim, int p) {
  Orthocomplement out;
  FpMatrix s(static_cast<int>(s_basis.size()), ambient_dim, p);
  for (size_t i = 0; i < s_basis.size(); ++i) {
    if (static_cast<int>(s_basis[i].size()) != ambient_dim)
      throw std::invalid_argument("orthocomplement: basis length mismatch");
    for (int j = 0; j < ambient_dim; ++j)
      s.at(static_cast<int>(i), j) = s_basis[i][static_cast<size_t>(j)];
  }
  if (rank(s) != s.rows)
    throw std::invalid_argument("orthocomplement: basis not independent");
  // Radical of the form on S: left kernel of the Gram matrix S S^T. The
  // complement basis is well-defined either way; the flag tells the caller
  // whether S + S^perp is actually a direct sum.
  FpMatrix gram = matmul(s, transpose(s));
  out.degenerate = !s_basis.empty() && !left_kernel(gram).empty();
  // { y : S y^T = 0 } = left kernel of S^T.
  out.basis = left_kernel(transpose(s));
  return out;
}

}  // namespace twg
