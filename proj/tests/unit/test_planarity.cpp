#include <doctest.h>

#include <random>

#include "kminor/cockade.hpp"
#include "kminor/error.hpp"
#include "kminor/isomorphism.hpp"
#include "kminor/minor_search.hpp"
#include "kminor/named_graphs.hpp"
#include "kminor/planarity.hpp"
#include "kminor/sampling.hpp"
#include "oracles.hpp"

using namespace kminor;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an exception");
  return ErrorKind::internal_failure;
}

}  // namespace

TEST_SUITE("planarity") {
  TEST_CASE("is_planar examples") {
    const PlanarityVerdict ico = is_planar(icosahedron());
    CHECK(ico.planar);
    REQUIRE(ico.embedding.has_value());
    CHECK(satisfies_euler(icosahedron(), *ico.embedding));
    CHECK_FALSE(is_planar(complete(5)).planar);
    CHECK_FALSE(is_planar(complete_multipartite({3, 3})).planar);
    CHECK_FALSE(is_planar(join(complete(1), icosahedron())).planar);
    CHECK(is_planar(Graph(0)).planar);
    CHECK(is_planar(disjoint_union(cycle(4), complete(4))).planar);
  }

  TEST_CASE("a scrambled rotation fails the Euler check") {
    const Graph k4 = complete(4);
    RotationSystem r = *is_planar(k4).embedding;
    CHECK(satisfies_euler(k4, r));
    RotationSystem bad{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
    // K4 has exactly two non-equivalent rotation choices per vertex; the
    // all-increasing one is not planar.
    CHECK_FALSE(satisfies_euler(k4, bad));
    r[0].pop_back();
    CHECK_FALSE(satisfies_euler(k4, r));
  }

  TEST_CASE("planar verdicts respect the edge bound and carry valid embeddings") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = 3 + trial % 12;
      const Graph g = oracle::random_graph(rng, n, 0.25);
      const PlanarityVerdict v = is_planar(g);
      if (!v.planar) continue;
      CHECK(g.size() <= 3 * n - 6);
      CHECK(satisfies_euler(g, *v.embedding));
    }
  }

  TEST_CASE("is_apex") {
    const Graph cone = join(complete(1), icosahedron());
    CHECK(is_apex(cone) == std::optional<int>(0));
    CHECK_FALSE(is_apex(complete(7)).has_value());
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 200; ++trial) {
      const Graph g = oracle::random_graph(rng, 9, 0.45);
      if (auto v = is_apex(g)) CHECK(is_planar(delete_vertex(g, *v)).planar);
    }
  }

  TEST_CASE("order-11 graphs with a degree-9 maximum are not apex") {
    // Size 34 with every degree at most 9: deleting any vertex leaves at
    // least 25 edges on 10 vertices, above the planar bound of 24.
    int seen = 0;
    for (const Graph& g : sample_constrained(11, 5, {34, 34}, 7, 400)) {
      if (max_degree(g) != 9) continue;
      ++seen;
      CHECK_FALSE(is_apex(g).has_value());
    }
    CHECK(seen > 0);
  }

  TEST_CASE("is_maximal_planar") {
    CHECK(is_maximal_planar(icosahedron()));
    CHECK_FALSE(is_maximal_planar(cycle(5)));
    CHECK(is_maximal_planar(octahedron()));
    CHECK(kind_of([] { is_maximal_planar(complete(2)); }) == ErrorKind::order_too_small);
    std::mt19937_64 rng(47);
    for (int n = 3; n <= 30; ++n) CHECK(is_maximal_planar(random_maximal_planar(rng, n)));
  }

  TEST_CASE("connectivity") {
    CHECK(connectivity(icosahedron()) == 5);
    CHECK(connectivity(complete(6)) == 5);
    const Graph glued = clique_sum(complete(5), complete(5), std::vector<int>{0, 1, 2, 3},
                                   std::vector<int>{0, 1, 2, 3});
    CHECK(connectivity(glued) == 4);
    CHECK(connectivity(octahedron()) == 4);
    CHECK(connectivity(petersen()) == 3);
    CHECK(connectivity(path(4)) == 1);
    CHECK(kind_of([] { connectivity(Graph(2)); }) == ErrorKind::disconnected_input);
    CHECK(kind_of([] { connectivity(Graph(0)); }) == ErrorKind::disconnected_input);
    // Above the enumeration limit the flow fallback takes over.
    CHECK(connectivity(complete_multipartite({6, 6})) == 6);
    CHECK(connectivity(complete_multipartite({2, 2, 2, 2, 2})) == 8);
    CHECK(is_k_connected(icosahedron(), 5));
    CHECK_FALSE(is_k_connected(icosahedron(), 6));
    CHECK_FALSE(is_k_connected(complete(4), 4));
  }

  TEST_CASE("clique sums of 4-connected graphs are exactly 4-connected") {
    const Graph ico = icosahedron();
    const Graph oct = octahedron();
    // Faces give K3s; cones over them give K4s.
    const Graph a = mp1_cone(ico);
    const Graph b = mp1_cone(oct);
    const Graph s = clique_sum(a, b, std::vector<int>{0, 1, 2, 3}, std::vector<int>{0, 1, 3, 5});
    CHECK(connectivity(a) >= 4);
    CHECK(connectivity(b) >= 4);
    CHECK(connectivity(s) == 4);
  }

  TEST_CASE("lemma_cone_check") {
    const Graph cone = join(complete(1), icosahedron());
    CHECK(cone.size() == 4 * 13 - 10);
    CHECK(lemma_cone_check(cone, 0));
    for (int v = 0; v < 5; ++v) CHECK(lemma_cone_check(complete(5), v));
    CHECK(kind_of([] { lemma_cone_check(complete(6), 0); }) == ErrorKind::precondition_violated);
    CHECK(kind_of([&] { lemma_cone_check(cone, 1); }) == ErrorKind::precondition_violated);
  }
}
