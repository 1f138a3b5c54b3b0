// Permutation group engine: stabilizer chains (Schreier-Sims), orbits,
// point stabilizers, transitivity and block tests, homomorphisms given on
// generators.
//
// Base points are selected deterministically (preferred points first, then the
// smallest moved point), so chains, transversals and everything derived from
// them are reproducible.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "twg/perm.hpp"

namespace twg {

// One level of a stabilizer chain: the basic orbit of `base` under `gens`
// together with a transversal (orbit representative permutations).
struct ChainLevel {
  int base = -1;
  std::vector<Perm> gens;                        // generators of this level's group
  std::vector<int> orbit;                        // basic orbit in BFS discovery order
  std::vector<std::optional<Perm>> transversal;  // point -> u with base^u = point
};

class StabChain {
 public:
  // Builds a BSGS for <gens>. Points listed in `preferred_base` are used as
  // the first base points (in order). If base_limit >= 0, every base point
  // must be < base_limit; construction throws std::domain_error if a
  // generator forces a base point >= base_limit.
  StabChain(int degree, const std::vector<Perm>& gens,
            const std::vector<int>& preferred_base = {}, int base_limit = -1);

  std::uint64_t order() const;
  bool contains(const Perm& g) const;
  // Residue of sifting g and the level at which sifting stopped
  // (identity residue means membership).
  std::pair<Perm, size_t> sift(const Perm& g) const;

  size_t size() const { return levels_.size(); }
  const ChainLevel& level(size_t i) const { return levels_[i]; }
  int degree() const { return degree_; }

  // Generators of the pointwise stabilizer of the first `nfixed` base points.
  std::vector<Perm> stabilizer_gens(size_t nfixed) const;

 private:
  // Sifts g from start_level and distributes the residue; returns the deepest
  // level that received it, or -1 if g sifted to the identity.
  int insert_generator(const Perm& g, size_t start_level);
  void rebuild_orbit(size_t level);

  int degree_;
  int base_limit_;
  std::vector<int> preferred_base_;
  std::vector<ChainLevel> levels_;
};

class PermGroup {
 public:
  PermGroup(int degree, std::vector<Perm> generators);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  std::uint64_t order() const;
  bool contains(const Perm& g) const;

  // Orbit of `point`, sorted ascending. Throws if point out of range.
  std::vector<int> orbit(int point) const;
  // Orbit of `point` under an explicit generator list.
  static std::vector<int> orbit_of(int degree, const std::vector<Perm>& gens,
                                   int point);

  PermGroup point_stabilizer(int point) const;

  bool is_transitive() const;
  // Decided as: transitive and the stabilizer of the first point is
  // transitive on the remaining points. Requires degree >= 2.
  bool is_2_transitive() const;

  // True iff every generator maps every cell of `partition` onto a cell.
  // Throws if the partition does not partition {0,...,degree-1}.
  bool is_block_system(const std::vector<std::vector<int>>& partition) const;

  const StabChain& chain() const;  // built on first use

 private:
  int degree_;
  std::vector<Perm> gens_;
  mutable std::optional<StabChain> chain_;
};

// All elements of <gens> by breadth-first closure, sorted lexicographically.
// Throws std::length_error if the group has more than `limit` elements.
std::vector<Perm> enumerate_elements(int degree, const std::vector<Perm>& gens,
                                     size_t limit);

// A homomorphism defined by images of generators, with exact evaluation on
// arbitrary group elements via a stabilizer chain over paired permutations.
// Construction throws if the generator images do not extend to a homomorphism.
class Homomorphism {
 public:
  Homomorphism(int domain_degree, const std::vector<Perm>& domain_gens,
               int image_degree, const std::vector<Perm>& image_gens);

  // Image of an arbitrary element of the domain group; throws if `g` is not
  // in the group generated by the domain generators.
  Perm operator()(const Perm& g) const;

  std::uint64_t domain_order() const;
  std::uint64_t image_order() const;
  std::uint64_t kernel_order() const { return domain_order() / image_order(); }

 private:
  int dom_deg_, img_deg_;
  std::vector<Perm> image_gens_;
  std::optional<StabChain> paired_;  // chain on degree dom_deg_ + img_deg_
};

}  // namespace twg
