#include <doctest.h>

#include <random>

#include "kminor/cockade.hpp"
#include "kminor/error.hpp"
#include "kminor/isomorphism.hpp"
#include "kminor/minor_search.hpp"
#include "kminor/named_graphs.hpp"
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

// Checks the answer both ways: a returned certificate must satisfy the
// independent witness check, and the verdict must match the oracle.
void agree(const Graph& g, const Graph& h) {
  const SearchResult r = find_minor(g, h);
  const bool expected = brute_force_minor(g, h);
  CHECK(r.found() == expected);
  if (r.found()) CHECK(oracle::minor_witness_ok(g, h, *r.certificate));
}

}  // namespace

TEST_SUITE("minor_search") {
  TEST_CASE("find_minor examples") {
    const SearchResult self = find_minor(complete(6), complete(6));
    REQUIRE(self.found());
    for (VertexSet s : self.certificate->branch_sets) CHECK(s.size() == 1);
    CHECK_FALSE(find_minor(icosahedron(), complete(5)).found());
    CHECK(find_minor(icosahedron(), complete(5)).outcome == SearchOutcome::absent);
    const SearchResult pc = find_minor(petersen_complement(), complete(6));
    REQUIRE(pc.found());
    CHECK(oracle::minor_witness_ok(petersen_complement(), complete(6), *pc.certificate));
    CHECK(find_minor(complete_multipartite({3, 3, 3}), complete(6)).found());
  }

  TEST_CASE("find_k6 examples") {
    CHECK(find_k6(complete(7)).found());
    CHECK_FALSE(find_k6(mp1_cone(icosahedron())).found());
    // Thirty edges on nine vertices is past the K6 bound but exactly at the K7 one.
    CHECK(find_k6(complete_multipartite({2, 2, 2, 3})).found());
    CHECK(find_complete_minor(complete_multipartite({2, 2, 2, 3}), 7).outcome ==
          SearchOutcome::absent);
  }

  TEST_CASE("verify_certificate") {
    const MinorCertificate identity{{VertexSet{0}, VertexSet{1}, VertexSet{2}, VertexSet{3},
                                     VertexSet{4}, VertexSet{5}}};
    CHECK(verify_certificate(complete(6), complete(6), identity));
    const MinorCertificate overlap{{VertexSet{0, 1}, VertexSet{1}, VertexSet{2}, VertexSet{3},
                                    VertexSet{4}, VertexSet{5}}};
    CHECK_FALSE(verify_certificate(complete(6), complete(6), overlap));
    const MinorCertificate disconnected{{VertexSet{0, 2}, VertexSet{1}}};
    CHECK_FALSE(verify_certificate(path(3), complete(2), disconnected));
    const MinorCertificate outside{{VertexSet{0}, VertexSet{5}}};
    CHECK_FALSE(verify_certificate(path(3), complete(2), outside));
    CHECK(kind_of([&] { verify_certificate(complete(6), complete(5), identity); }) ==
          ErrorKind::arity_mismatch);
  }

  TEST_CASE("certificate text round trip and pull back") {
    const SearchResult r = find_k6(petersen_complement());
    REQUIRE(r.found());
    CHECK(certificate_from_text(to_text(*r.certificate)) == *r.certificate);
    CHECK(kind_of([] { certificate_from_text("2\n0 1\n"); }) == ErrorKind::parse_error);

    const Graph g = complete(7);
    const MappedGraph m = contract_edge_mapped(g, 2, 5);
    const SearchResult small = find_k6(m.graph);
    REQUIRE(small.found());
    CHECK(verify_certificate(g, complete(6), pull_back(*small.certificate, m.index_map)));
  }

  TEST_CASE("mader edge bound") {
    CHECK(mader_edge_bound(6, 12) == 38);
    CHECK(mader_edge_bound(6, 5) == 10);
    CHECK(mader_edge_bound(7, 9) == 30);
    CHECK(mader_edge_bound(7, 9) == complete_multipartite({2, 2, 2, 3}).size());
    CHECK(kind_of([] { mader_edge_bound(8, 10); }) == ErrorKind::parameter_out_of_range);
    CHECK(kind_of([] { mader_edge_bound(6, 4); }) == ErrorKind::parameter_out_of_range);
    for (int t = 2; t <= 7; ++t) {
      for (int n = t - 1; n <= 20; ++n) {
        CHECK(mader_edge_bound(t, n) == (t - 2) * n - oracle::binomial(t - 1, 2));
      }
    }
    CHECK_FALSE(size_forces_kt(complete(5), 6));
    const Graph g39 = sample_constrained(12, 0, {39, 39}, 1, 1).front();
    CHECK(size_forces_kt(g39, 6));
    CHECK(find_k6(g39).found());
    const Graph g19 = sample_constrained(7, 0, {19, 19}, 1, 1).front();
    CHECK(size_forces_kt(g19, 6));
    CHECK(find_k6(g19).found());
  }

  TEST_CASE("brute force oracle examples") {
    CHECK(brute_force_minor(complete(6), complete(6)));
    CHECK(brute_force_minor(cycle(6), complete(3)));
    CHECK(brute_force_minor(complete_multipartite({3, 3}), complete(4)));
    CHECK_FALSE(brute_force_minor(complete_multipartite({3, 3}), complete(5)));
    CHECK(kind_of([] { brute_force_minor(complete(9), complete(3)); }) == ErrorKind::order_too_large);
  }

  TEST_CASE("agrees with the oracle on every graph of order <= 6 for every target of order <= 5") {
    std::vector<Graph> targets;
    for (int t = 1; t <= 5; ++t) {
      for (const Graph& h : enumerate_graphs(t)) targets.push_back(h);
    }
    for (int n = 1; n <= 6; ++n) {
      for (const Graph& g : enumerate_graphs(n)) {
        for (const Graph& h : targets) agree(g, h);
      }
    }
  }

  TEST_CASE("agrees with the oracle on random order-8 hosts") {
    std::mt19937_64 rng(17);
    const std::vector<Graph> targets{complete(4), complete(5), complete_multipartite({3, 3}),
                                     cycle(5), octahedron(), prism(), complete_minus(5)};
    for (int trial = 0; trial < 40; ++trial) {
      const Graph g = oracle::random_graph(rng, 8, 0.35 + 0.01 * trial);
      for (const Graph& h : targets) agree(g, h);
    }
  }

  TEST_CASE("reductions and heuristics do not change answers") {
    std::mt19937_64 rng(23);
    SearchOptions plain;
    plain.reduce = false;
    plain.heuristic = false;
    for (int trial = 0; trial < 150; ++trial) {
      const int n = 8 + trial % 6;
      const Graph g = oracle::random_graph(rng, n, 0.45);
      for (int t : {4, 5, 6}) {
        const SearchResult a = find_complete_minor(g, t);
        const SearchResult b = find_complete_minor(g, t, plain);
        CHECK(a.found() == b.found());
        if (a.found()) CHECK(oracle::minor_witness_ok(g, complete(t), *a.certificate));
      }
    }
  }

  TEST_CASE("monotone under edge addition") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 100; ++trial) {
      const Graph g = oracle::random_graph(rng, 9, 0.5);
      if (!find_k6(g).found()) continue;
      const Graph c = complement(g);
      const auto missing = c.edges();
      if (missing.empty()) continue;
      const auto [u, v] = missing[rng() % missing.size()];
      CHECK(find_k6(g.with_edge(u, v)).found());
    }
  }

  TEST_CASE("deterministic mode repeats certificates") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
      const Graph g = oracle::random_graph(rng, 11, 0.55);
      const SearchResult a = find_k6(g);
      const SearchResult b = find_k6(g);
      CHECK(a.outcome == b.outcome);
      CHECK(a.certificate == b.certificate);
    }
  }

  TEST_CASE("parallel mode agrees on the verdict") {
    std::mt19937_64 rng(37);
    SearchOptions parallel;
    parallel.deterministic = false;
    parallel.workers = 3;
    for (int trial = 0; trial < 30; ++trial) {
      const Graph g = oracle::random_graph(rng, 11, 0.5);
      const SearchResult a = find_k6(g);
      const SearchResult b = find_k6(g, parallel);
      CHECK(a.found() == b.found());
      if (b.found()) CHECK(oracle::minor_witness_ok(g, complete(6), *b.certificate));
    }
    CHECK_FALSE(find_k6(mp1_cone(icosahedron()), parallel).found());
  }

  TEST_CASE("budget exhaustion is distinct from absence") {
    SearchOptions tight;
    tight.node_budget = 5;
    tight.heuristic = false;
    const SearchResult r = find_k6(mp1_cone(icosahedron()), tight);
    CHECK(r.outcome == SearchOutcome::budget_exhausted);
    CHECK_FALSE(r.certificate.has_value());
  }

  TEST_CASE("disconnected hosts and targets") {
    const Graph two_k4 = disjoint_union(complete(4), complete(4));
    CHECK_FALSE(find_minor(two_k4, complete(5)).found());
    const Graph target = disjoint_union(complete(3), complete(3));
    const SearchResult r = find_minor(two_k4, target);
    REQUIRE(r.found());
    CHECK(oracle::minor_witness_ok(two_k4, target, *r.certificate));
    CHECK_FALSE(find_minor(complete(5), target).found());
    CHECK(kind_of([] { find_minor(complete(10), complete(9)); }) == ErrorKind::order_too_large);
  }

  TEST_CASE("blockwise search") {
    const Graph two = disjoint_union(complete(6), cycle(5)).with_edge(0, 6);
    const SearchResult r = find_complete_minor_blockwise(two, 6);
    REQUIRE(r.found());
    CHECK(oracle::minor_witness_ok(two, complete(6), *r.certificate));
    const Graph cones = disjoint_union(mp1_cone(icosahedron()), complete(5)).with_edge(1, 13);
    CHECK(find_complete_minor_blockwise(cones, 6).outcome == SearchOutcome::absent);
  }
}
