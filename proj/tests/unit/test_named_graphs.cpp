#include <doctest.h>

#include "kminor/error.hpp"
#include "kminor/isomorphism.hpp"
#include "kminor/minor_search.hpp"
#include "kminor/named_graphs.hpp"
#include "kminor/planarity.hpp"
#include "oracles.hpp"

using namespace kminor;

TEST_SUITE("named_graphs") {
  TEST_CASE("complete families") {
    CHECK(complete(6).size() == 15);
    const Graph k333 = complete_multipartite({3, 3, 3});
    CHECK(k333.size() == 27);
    CHECK(degree_sequence(k333).count(6) == 9);
    const Graph k2223 = complete_multipartite({2, 2, 2, 3});
    CHECK(k2223.order() == 9);
    CHECK(k2223.size() == oracle::binomial(9, 2) - 6);
    CHECK(complete_minus(5).size() == 9);
    CHECK_FALSE(complete_minus(5).has_edge(0, 1));
    CHECK_THROWS_AS(complete_multipartite({40, 30}), Error);
  }

  TEST_CASE("icosahedron") {
    const Graph ico = icosahedron();
    CHECK(degree_sequence(ico).count(5) == 12);
    CHECK(is_planar(ico).planar);
    CHECK(is_maximal_planar(ico));
    CHECK(connectivity(ico) == 5);
  }

  TEST_CASE("petersen complement") {
    const Graph pc = petersen_complement();
    CHECK(pc.order() == 10);
    CHECK(pc.size() == 30);
    CHECK(degree_sequence(pc).count(6) == 10);
    CHECK(degree_sequence(petersen()).count(3) == 10);
    CHECK(find_k6(pc).found());
    CHECK(neighborhood_3_regular_everywhere(pc));
  }

  TEST_CASE("other constructors") {
    CHECK(wheel(5).size() == 10);
    CHECK(bipyramid(4) == bipyramid(4));
    CHECK(is_isomorphic(bipyramid(4), octahedron()));
    for (int k = 4; k <= 10; ++k) {
      CHECK(is_maximal_planar(bipyramid(k)));
      CHECK(is_k_connected(bipyramid(k), 4));
    }
    CHECK_FALSE(is_k_connected(bipyramid(3), 4));
    CHECK(prism().size() == 9);
  }

  TEST_CASE("neighbourhood regularity") {
    CHECK(neighborhood_3_regular_everywhere(complete_multipartite({3, 3, 3})));
    CHECK_FALSE(neighborhood_3_regular_everywhere(complete(7)));
  }

  TEST_CASE("order-5 catalogues") {
    const auto fig_small = enumerate_order5(5, 6, 2);
    CHECK(fig_small.size() == 4);
    CHECK(enumerate_order5(8, 8, 2).size() == 2);
    CHECK(enumerate_order5(7, 7, 2, 1).size() == 1);
    CHECK(enumerate_order5(0, 10, 0).size() == 34);
    for (const auto& e : enumerate_order5(0, 10, 0)) {
      CHECK(e.size == e.graph.size());
      CHECK(e.degrees == degree_sequence(e.graph));
      CHECK(e.planar == is_planar(e.graph).planar);
    }
    // Independent count straight from all labelled graphs.
    std::vector<Graph> small;
    for (const Graph& g : oracle::all_labelled(5)) {
      if (g.size() >= 5 && g.size() <= 6 && min_degree(g) >= 2) small.push_back(g);
    }
    CHECK(oracle::count_classes(small) == 4);
    for (std::size_t i = 0; i < fig_small.size(); ++i) {
      for (std::size_t j = i + 1; j < fig_small.size(); ++j) {
        CHECK_FALSE(is_isomorphic(fig_small[i].graph, fig_small[j].graph));
      }
    }
  }

  TEST_CASE("locally cubic 6-regular graphs at orders 9 and 10") {
    const auto nine = locally_cubic_six_regular(9);
    REQUIRE(nine.size() == 1);
    CHECK(is_isomorphic(nine.front(), complete_multipartite({3, 3, 3})));
    const auto ten = locally_cubic_six_regular(10);
    REQUIRE(ten.size() == 1);
    CHECK(is_isomorphic(ten.front(), petersen_complement()));
    CHECK(locally_cubic_six_regular(7).empty());
    CHECK(locally_cubic_six_regular(8).empty());
    CHECK_THROWS_AS(locally_cubic_six_regular(11), Error);
  }
}
