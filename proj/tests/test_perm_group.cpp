#include <algorithm>
#include <random>

#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "twg/perm_group.hpp"

using namespace twg;

namespace {

Perm cycle(int degree, const std::vector<int>& pts) {
  std::vector<int> img(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i) img[static_cast<size_t>(i)] = i;
  for (size_t i = 0; i < pts.size(); ++i)
    img[static_cast<size_t>(pts[i])] = pts[(i + 1) % pts.size()];
  return Perm(img);
}

PermGroup a5() {
  return PermGroup(5, {cycle(5, {0, 1, 2, 3, 4}), cycle(5, {2, 3, 4})});
}

}  // namespace

TEST_CASE("chain order of A5 matches brute-force closure") {
  PermGroup g = a5();
  CHECK(g.order() == 60);
  CHECK(test::closure_order(5, g.generators()) == 60);
}

TEST_CASE("empty generating set gives the trivial group") {
  PermGroup g(6, {});
  CHECK(g.order() == 1);
  CHECK(g.contains(Perm::identity(6)));
  CHECK_FALSE(g.contains(cycle(6, {0, 1})));
}

TEST_CASE("chain order equals closure on assorted small groups") {
  std::vector<PermGroup> groups;
  groups.push_back(PermGroup(4, {cycle(4, {0, 1, 2, 3})}));
  groups.push_back(PermGroup(6, {cycle(6, {0, 1, 2}), cycle(6, {3, 4, 5})}));
  groups.push_back(PermGroup(7, {cycle(7, {0, 1, 2, 3, 4, 5, 6}),
                                 cycle(7, {1, 2, 4})}));
  groups.push_back(PermGroup(8, {cycle(8, {0, 1, 2, 3, 4, 5, 6, 7}),
                                 cycle(8, {0, 1})}));  // S8
  for (const PermGroup& g : groups)
    CHECK(g.order() == test::closure_order(g.degree(), g.generators()));
}

TEST_CASE("membership holds for products of up to three generators") {
  PermGroup g = a5();
  std::mt19937 rng(7);
  for (int t = 0; t < 100; ++t) {
    Perm x = Perm::identity(5);
    int len = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < len; ++i)
      x = compose(x, g.generators()[rng() % g.generators().size()]);
    CHECK(g.contains(x));
  }
  CHECK_FALSE(g.contains(cycle(5, {0, 1})));  // odd permutation
}

TEST_CASE("orbit and point stabilizer satisfy orbit-stabilizer") {
  PermGroup g = a5();
  CHECK(g.orbit(0).size() == 5);
  PermGroup stab = g.point_stabilizer(0);
  CHECK(stab.order() == 12);
  CHECK(g.orbit(0).size() * stab.order() == g.order());
  for (const Perm& s : stab.generators()) CHECK(s(0) == 0);
  CHECK_THROWS_AS(g.orbit(9), std::invalid_argument);
  CHECK_THROWS_AS(g.point_stabilizer(-1), std::invalid_argument);
}

TEST_CASE("transitivity tests against the pair-orbit oracle") {
  PermGroup g = a5();
  CHECK(g.is_transitive());
  CHECK(g.is_2_transitive());
  CHECK(test::pair_orbit_count(5, g.generators()) == 1);

  PermGroup c4(4, {cycle(4, {0, 1, 2, 3})});
  CHECK(c4.is_transitive());
  CHECK_FALSE(c4.is_2_transitive());
  CHECK(test::pair_orbit_count(4, c4.generators()) > 1);

  PermGroup s8(8, {cycle(8, {0, 1, 2, 3, 4, 5, 6, 7}), cycle(8, {0, 1})});
  CHECK(s8.is_2_transitive());
  CHECK(test::pair_orbit_count(8, s8.generators()) == 1);
}

TEST_CASE("block system detection") {
  PermGroup g(6, {cycle(6, {0, 1, 2, 3, 4, 5})});
  std::vector<std::vector<int>> singletons{{0}, {1}, {2}, {3}, {4}, {5}};
  std::vector<std::vector<int>> whole{{0, 1, 2, 3, 4, 5}};
  std::vector<std::vector<int>> halves{{0, 2, 4}, {1, 3, 5}};
  std::vector<std::vector<int>> bad{{0, 1}, {2, 3, 4, 5}};
  CHECK(g.is_block_system(singletons));
  CHECK(g.is_block_system(whole));
  CHECK(g.is_block_system(halves));
  CHECK_FALSE(g.is_block_system(bad));
  CHECK_THROWS_AS(g.is_block_system({{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(g.is_block_system({{0, 0, 1, 2, 3, 4, 5}}),
                  std::invalid_argument);
}

TEST_CASE("enumerate_elements is sorted and complete") {
  std::vector<Perm> elems = enumerate_elements(5, a5().generators(), 100);
  CHECK(elems.size() == 60);
  CHECK(std::is_sorted(elems.begin(), elems.end()));
  CHECK_THROWS_AS(enumerate_elements(5, a5().generators(), 59),
                  std::length_error);
}

TEST_CASE("hom_by_images: identity map on A5") {
  PermGroup g = a5();
  Homomorphism h(5, g.generators(), 5, g.generators());
  for (const Perm& s : g.generators()) CHECK(h(s) == s);
  std::mt19937 rng(11);
  for (int t = 0; t < 20; ++t) {
    Perm x = Perm::identity(5);
    for (int i = 0; i < 4; ++i)
      x = compose(x, g.generators()[rng() % g.generators().size()]);
    CHECK(h(x) == x);
  }
  CHECK(h.kernel_order() == 1);
}

TEST_CASE("hom_by_images rejects non-homomorphisms") {
  // (0 1) has order 2; sending it to a 3-cycle cannot extend.
  CHECK_THROWS_AS(Homomorphism(3, {cycle(3, {0, 1})}, 3, {cycle(3, {0, 1, 2})}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Homomorphism(3, {cycle(3, {0, 1})}, 3, {}),
                  std::invalid_argument);
}

TEST_CASE("hom_by_images computes quotient maps") {
  // C4 -> C2 by reduction mod 2 is a homomorphism with kernel of order 2.
  Homomorphism h(4, {cycle(4, {0, 1, 2, 3})}, 2, {cycle(2, {0, 1})});
  CHECK(h.domain_order() == 4);
  CHECK(h.image_order() == 2);
  CHECK(h.kernel_order() == 2);
  CHECK(h(compose(cycle(4, {0, 1, 2, 3}), cycle(4, {0, 1, 2, 3})))
            .is_identity());
  CHECK_THROWS_AS(h(cycle(4, {0, 1})), std::invalid_argument);
}
