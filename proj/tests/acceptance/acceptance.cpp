// One PASS/FAIL line per acceptance criterion; exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "kminor/cockade.hpp"
#include "kminor/error.hpp"
#include "kminor/graph_io.hpp"
#include "kminor/isomorphism.hpp"
#include "kminor/minor_search.hpp"
#include "kminor/named_graphs.hpp"
#include "kminor/planarity.hpp"
#include "kminor/sampling.hpp"
#include "kminor/theorem.hpp"
#include "oracles.hpp"

using namespace kminor;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

bool certifies_k6(const Graph& g, const MinorCertificate& c) {
  return oracle::minor_witness_ok(g, complete(6), c);
}

Outcome order12_corpus() {
  const auto start = Clock::now();
  int total = 0;
  int certified = 0;
  const int per_size[] = {334, 333, 333};
  for (int i = 0; i < 3; ++i) {
    const int size = 36 + i;
    for (const Graph& g : sample_constrained(12, 6, {size, size}, 1000 + size, per_size[i])) {
      ++total;
      try {
        if (certifies_k6(g, check_main(g).certificate)) ++certified;
      } catch (const Error& e) {
        std::printf("  %s: %s\n", to_graph6(g).c_str(), e.what());
      }
    }
  }
  const double secs = seconds_since(start);
  return {total == 1000 && certified == total && secs <= 60.0,
          fmt("%d/%d certified in %.2f s (limit 60 s)", certified, total, secs)};
}

Outcome oracle_equivalence() {
  int compared = 0;
  int disagreements = 0;
  int bad_certificates = 0;
  std::size_t order7 = 0;
  for (int n = 1; n <= 7; ++n) {
    const std::vector<Graph> graphs = enumerate_graphs(n);
    if (n == 7) order7 = graphs.size();
    for (const Graph& g : graphs) {
      for (int t = 3; t <= 5; ++t) {
        const Graph h = complete(t);
        const SearchResult r = find_minor(g, h);
        ++compared;
        if (r.outcome == SearchOutcome::budget_exhausted || r.found() != brute_force_minor(g, h)) {
          ++disagreements;
        }
        if (r.found() && !oracle::minor_witness_ok(g, h, *r.certificate)) ++bad_certificates;
      }
    }
  }
  return {order7 == 1044 && disagreements == 0 && bad_certificates == 0,
          fmt("%d comparisons, %d disagreements, %d bad certificates, %zu graphs at order 7",
              compared, disagreements, bad_certificates, order7)};
}

Outcome edge_bound() {
  std::mt19937_64 rng(3);
  int dense_certified = 0;
  for (int i = 0; i < 10000; ++i) {
    const int n = std::uniform_int_distribution<int>(6, 12)(rng);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    const int m = std::uniform_int_distribution<int>(4 * n - 9, static_cast<int>(pairs.size()))(rng);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(m);
    const Graph g = Graph::from_edges(n, pairs);
    const SearchResult r = find_k6(g);
    if (r.found() && certifies_k6(g, *r.certificate)) ++dense_certified;
  }
  int sparse_clean = 0;
  for (int i = 0; i < 1000; ++i) {
    const int n = 5 + i % 8;
    const Graph g = realize(random_mp1_cockade(50000 + i, n));
    if (g.order() == n && g.size() == 4 * n - 10 && find_k6(g).outcome == SearchOutcome::absent) {
      ++sparse_clean;
    }
  }
  return {dense_certified == 10000 && sparse_clean == 1000,
          fmt("dense %d/10000 certified, cockades %d/1000 free of K6", dense_certified,
              sparse_clean)};
}

Outcome small_orders() {
  int certified = 0;
  int total = 0;
  for (int n = 7; n <= 11; ++n) {
    const int lo = 3 * n;
    const int hi = n * (n - 1) / 2;
    for (const Graph& g : sample_constrained(n, 6, {lo, hi}, 2000 + n, 500)) {
      ++total;
      try {
        if (certifies_k6(g, jorgensen_small(g))) ++certified;
      } catch (const Error& e) {
        std::printf("  %s: %s\n", to_graph6(g).c_str(), e.what());
      }
    }
  }
  return {total == 2500 && certified == total, fmt("%d/%d certified", certified, total)};
}

Outcome cone_assertion() {
  int held = 0;
  int total = 0;
  for (const ConeInstance& c : sample_cone_instances(4, 200)) {
    ++total;
    const Graph& g = c.graph;
    const int n = g.order();
    // Independent restatement: the vertex sees everything else.
    bool cones = g.size() == 4 * n - 10 && is_planar(delete_vertex(g, c.vertex)).planar;
    for (int w = 0; w < n; ++w) {
      if (w != c.vertex && !g.has_edge(c.vertex, w)) cones = false;
    }
    if (cones && lemma_cone_check(g, c.vertex)) ++held;
  }
  return {total == 200 && held == total, fmt("%d/%d cones", held, total)};
}

Outcome lemma_corpora() {
  int certified11 = 0;
  int certified10 = 0;
  int failures = 0;
  const auto run = [&](int order, auto lemma, int& certified) {
    for (const Graph& m : sample_lemma_instances(order, 5000 + order, 200)) {
      try {
        const LemmaReport r = lemma(m, SearchOptions{});
        if (r.certificate && certifies_k6(m, *r.certificate)) ++certified;
      } catch (const Error& e) {
        ++failures;
        std::printf("  %s: %s\n", to_graph6(m).c_str(), e.what());
      }
    }
  };
  run(11, lemma_11, certified11);
  run(10, lemma_10, certified10);
  return {certified11 == 200 && certified10 == 200 && failures == 0,
          fmt("order 11: %d/200, order 10: %d/200, %d internal failures", certified11,
              certified10, failures)};
}

Outcome catalogs() {
  const std::size_t a = enumerate_order5(5, 6, 2).size();
  const std::size_t b = enumerate_order5(8, 8, 2).size();
  const std::size_t c = enumerate_order5(7, 7, 2, 1).size();
  // Recount from all labelled order-5 graphs.
  std::vector<Graph> sa, sb, sc;
  for (const Graph& g : oracle::all_labelled(5)) {
    if (min_degree(g) < 2) continue;
    if (g.size() >= 5 && g.size() <= 6) sa.push_back(g);
    if (g.size() == 8) sb.push_back(g);
    if (g.size() == 7 && degree_sequence(g).count(2) == 1) sc.push_back(g);
  }
  const int oa = oracle::count_classes(sa);
  const int ob = oracle::count_classes(sb);
  const int oc = oracle::count_classes(sc);
  return {a == 4 && b == 2 && c == 1 && oa == 4 && ob == 2 && oc == 1,
          fmt("enumerated %zu/%zu/%zu, recounted %d/%d/%d", a, b, c, oa, ob, oc)};
}

Outcome order26() {
  const auto start = Clock::now();
  const Graph g = order26_example();
  const bool six = min_degree(g) == 6;
  const bool apex_free = !is_apex(g).has_value();
  const bool k6_free = find_complete_minor_blockwise(g, 6).outcome == SearchOutcome::absent;
  const double secs = seconds_since(start);
  return {g.order() == 26 && six && apex_free && k6_free && secs <= 10.0,
          fmt("min-degree-6=%d not-apex=%d no-K6=%d in %.2f s (limit 10 s)", six, apex_free,
              k6_free, secs)};
}

Outcome planarity_cross_check() {
  const Graph k5 = complete(5);
  const Graph k33 = complete_multipartite({3, 3});
  int checked = 0;
  int mismatches = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      ++checked;
      const bool kuratowski_free = !brute_force_minor(g, k5) && !brute_force_minor(g, k33);
      if (is_planar(g).planar != kuratowski_free) ++mismatches;
    }
  }
  const bool named = is_planar(icosahedron()).planar && !is_planar(k5).planar &&
                     !is_planar(k33).planar;
  return {mismatches == 0 && named,
          fmt("%d graphs, %d mismatches, named examples %s", checked, mismatches,
              named ? "ok" : "wrong")};
}

Outcome named_facts() {
  bool ok = true;
  for (const Graph& g : {complete_multipartite({3, 3, 3}), petersen_complement()}) {
    const DegreeSequence d = degree_sequence(g);
    ok = ok && d.count(6) == g.order();
    ok = ok && neighborhood_3_regular_everywhere(g);
    const SearchResult r = find_k6(g);
    ok = ok && r.found() && certifies_k6(g, *r.certificate);
  }
  return {ok, ok ? "K333 and Petersen complement: 6-regular, locally cubic, K6 minor"
                 : "a named-graph fact failed"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"order-12 corpus", order12_corpus},
      {"oracle equivalence", oracle_equivalence},
      {"edge bound", edge_bound},
      {"orders 7-11", small_orders},
      {"cone assertion", cone_assertion},
      {"order-11 and order-10 lemmas", lemma_corpora},
      {"order-5 catalogs", catalogs},
      {"order-26 example", order26},
      {"planarity cross-check", planarity_cross_check},
      {"named-graph facts", named_facts},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria pass\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
