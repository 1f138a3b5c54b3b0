// The bipartite coset graph Gamma = Cos(G, P, RQ), explored lazily.
//
// Left vertices are cosets Pg; since N is regular on them, the canonical
// label of P(f, p) is the N-tuple f^p. Right vertices are cosets RQg; the
// canonical label of RQ(f, (v, m)) is the pair (lex-min of { r * f^m : r in R },
// v * m): these are the N-parts and the common V-part of the elements of the
// coset whose Q-part is trivial, so the label is a complete coset invariant.
//
// Adjacency: Pg1 ~ RQg2 iff the N part of g2 * g1^-1 lies in R.
#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "twg/catalog.hpp"
#include "twg/r_subgroup.hpp"
#include "twg/twisted.hpp"

namespace twg {

struct VertexId {
  bool left = true;
  std::vector<int> flat;  // concatenated coordinate images of the label tuple
  int w = -1;             // right labels only: vector index of the V part

  friend bool operator==(const VertexId&, const VertexId&) = default;
  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

struct Ball {
  VertexId center;
  int radius = 0;
  std::map<VertexId, std::vector<VertexId>> adjacency;  // sorted neighbor lists
  std::map<VertexId, int> depth;
  bool is_frontier(const VertexId& v) const {
    return depth.at(v) == radius;
  }
};

struct ArcOrbitReport {
  std::uint64_t arc_count = 0;
  std::uint64_t orbit_count = 0;
};

struct StarQuotientReport {
  bool invariant_constant_on_samples = false;
  bool all_values_once = false;  // neighbors of u realize all k values once
  bool quotient_is_star = false;
  std::uint64_t value_count = 0;
  bool pass() const {
    return invariant_constant_on_samples && all_values_once && quotient_is_star;
  }
};

struct BlockActionReport {
  std::uint64_t block_size = 0;      // |T|
  std::uint64_t induced_order = 0;   // want |T|^2
  bool n_hat_regular = false;
  std::uint64_t point_stab_order = 0;  // want |T|
  std::uint64_t p_kernel_order = 0;    // want q^2 |ker phi|
  bool identity_fixed_by_stab = false;
  bool pass(std::uint64_t t, std::uint64_t expected_kernel) const {
    return induced_order == t * t && n_hat_regular && point_stab_order == t &&
           p_kernel_order == expected_kernel && identity_fixed_by_stab;
  }
};

struct PiBlockReport {
  bool u_cell_is_diagonal = false;  // the f_t labels all share u's cell key
  std::uint64_t u_cell_size = 0;    // want |T|
  bool blocks_preserved = false;    // sampled G-elements map cells into cells
  bool pass(std::uint64_t t) const {
    return u_cell_is_diagonal && u_cell_size == t && blocks_preserved;
  }
};

class CosetGraph {
 public:
  CosetGraph(const Catalog& cat, const RData& r);

  const TwistedWreath& tw() const { return tw_; }

  VertexId canonical_left(const TwElement& g) const;
  VertexId canonical_right(const TwElement& g) const;
  TwElement representative(const VertexId& v) const;

  VertexId u_vertex() const;  // coset P
  VertexId v_vertex() const;  // coset RQ

  // Membership oracle for RQ: trivial V part and N part in R.
  bool in_RQ(const TwElement& g) const;

  bool adjacent(const VertexId& left, const VertexId& right) const;
  // Exactly q^2 vertices, sorted; sides alternate.
  std::vector<VertexId> neighbors(const VertexId& v) const;

  // radius <= 3; throws when the vertex count would exceed 10^6.
  Ball bfs_ball(const VertexId& center, int radius, int threads = 1) const;

  // Image of a vertex under right multiplication by g.
  VertexId act(const VertexId& v, const TwElement& g) const;

  // Orbits of <stab_gens> on the s-arcs emanating from center (s = 1 or 2).
  // Every generator must fix center.
  ArcOrbitReport arc_orbit_check(const VertexId& center,
                                 const std::vector<TwElement>& stab_gens,
                                 int s) const;

  // The V-part invariant of a right vertex (constant on N-orbits).
  int n_orbit_invariant(const VertexId& right) const;
  StarQuotientReport star_quotient_check(std::uint32_t seed) const;

  // The induced action of G_pi = N-hat P on the block pi = { labels f_t }.
  BlockActionReport block_action_check() const;

  // Partition of the ball's left labels by the cell key
  // i |-> label(z_1)^-1 label(z_i) (constant exactly on right N-hat cosets).
  PiBlockReport pi_block_check(const Ball& ball, std::uint32_t seed) const;

  // Stabilizer generators of u (the P generators) and of v (R basis + Q).
  std::vector<TwElement> u_stabilizer_gens() const;
  std::vector<TwElement> v_stabilizer_gens() const;

  // Deterministic pseudo-random element of G from generator words.
  TwElement random_element(std::mt19937& rng, int word_len = 8) const;

 private:
  std::vector<int> cell_key(const std::vector<Perm>& label) const;

  const Catalog& cat_;
  const RData& r_;
  TwistedWreath tw_;
};

}  // namespace twg
