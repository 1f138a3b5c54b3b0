// Linear algebra over GF(p) and group-module computations.
//
// Vectors are rows; maps act on the right (x -> x * M). Gaussian elimination
// is deterministic, so kernels and hom-space bases are reproducible.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "twg/perm.hpp"

namespace twg {

struct FpMatrix {
  int rows = 0, cols = 0, p = 2;
  std::vector<int> a;  // row-major, entries in [0, p)

  FpMatrix() = default;
  FpMatrix(int r, int c, int prime);
  static FpMatrix identity(int n, int prime);

  int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  int at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
  std::vector<int> row(int r) const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;
};

FpMatrix matmul(const FpMatrix& x, const FpMatrix& y);
FpMatrix transpose(const FpMatrix& x);
std::vector<int> vecmat(const std::vector<int>& v, const FpMatrix& m);

// Reduced row echelon form (in place copy); returns rank.
FpMatrix rref(const FpMatrix& x, int* rank_out = nullptr);
int rank(const FpMatrix& x);
// Inverse of a square matrix; throws if singular.
FpMatrix fp_inverse(const FpMatrix& x);

// Basis of { v : v * M = 0 }, echelonized, deterministic.
std::vector<std::vector<int>> left_kernel(const FpMatrix& m);
// One solution of x * M = target, or nullopt.
std::optional<std::vector<int>> solve_left(const FpMatrix& m,
                                           const std::vector<int>& target);
// Is v in the row space of M?
bool in_row_space(const FpMatrix& m, const std::vector<int>& v);

// A group action on GF(p)^dim given by one matrix per generator.
struct ModuleAction {
  int dim = 0;
  int p = 2;
  std::vector<FpMatrix> gens;
};

// Permutation module: 0/1 matrices with e_i -> e_{perm(i)}.
ModuleAction permutation_module(int p, const std::vector<Perm>& basis_perms);

// Basis of { X : A_g X = X B_g for all generators g }, matrices dim(A) x dim(B),
// echelonized over the flattened coordinates, deterministic.
std::vector<FpMatrix> equivariant_hom_space(const ModuleAction& A,
                                            const ModuleAction& B);

// An injective equivariant map V -> W, or nullopt. Tries the hom-space basis
// in order, then exhaustively all combinations when the space has at most
// 2^16 elements, then seeded pseudo-random combinations (<= 10^4 trials).
inline constexpr std::uint32_t kSubmoduleSearchSeed = 0x5EED;
std::optional<FpMatrix> submodule_copy_of(const ModuleAction& V,
                                          const ModuleAction& W);

// Orthogonal complement under the standard dot product. `degenerate` reports
// a nonzero radical of the form restricted to S; the complement basis is
// returned either way (dim basis = ambient - dim S always).
struct Orthocomplement {
  bool degenerate = false;
  std::vector<std::vector<int>> basis;
};
Orthocomplement orthocomplement(const std::vector<std::vector<int>>& s_basis,
                                int ambient_dim, int p);

}  // namespace twg
