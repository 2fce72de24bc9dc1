#include "kminor/theorem.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "kminor/cockade.hpp"
#include "kminor/error.hpp"
#include "kminor/graph_io.hpp"
#include "kminor/named_graphs.hpp"
#include "kminor/planarity.hpp"
#include "kminor/sampling.hpp"

namespace kminor {

std::string_view to_string(SizeCase c) {
  switch (c) {
    case SizeCase::e36: return "E36";
    case SizeCase::e37a: return "E37-a";
    case SizeCase::e37b: return "E37-b";
    case SizeCase::e38: return "E38";
    case SizeCase::e39plus: return "E39plus";
  }
  return "?";
}

namespace {

constexpr std::string_view kDelegated = "delegated-to-search";

const Graph& k6() {
  static const Graph g = complete(6);
  return g;
}

void require_main_hypotheses(const Graph& g) {
  if (g.order() != 12) {
    throw Error(ErrorKind::precondition_violated,
                "expected order 12, got " + std::to_string(g.order()));
  }
  if (min_degree(g) < 6) throw Error(ErrorKind::precondition_violated, "minimum degree below 6");
}

std::optional<MinorCertificate> certify(const Graph& g, std::vector<VertexSet> sets) {
  if (sets.size() != 6) return std::nullopt;
  MinorCertificate cert{std::move(sets)};
  if (verify_certificate(g, k6(), cert)) return cert;
  return std::nullopt;
}

struct Found {
  MinorCertificate cert;
  std::string recipe;
};
using Attempt = std::optional<Found>;

Attempt lifted(Attempt inner, const MappedGraph& image) {
  if (!inner) return std::nullopt;
  inner->cert = pull_back(inner->cert, image.index_map);
  return inner;
}

// Base vertex, its neighbourhood and the remaining vertices.
struct Split {
  int base;
  VertexSet near;
  VertexSet rest;
};

Split split_at(const Graph& g, int v) {
  const VertexSet near = g.neighbors(v);
  return {v, near, g.vertices() - near - VertexSet::single(v)};
}

int edges_within(const Graph& g, VertexSet s) {
  int twice = 0;
  for (int v : s) twice += (g.neighbors(v) & s).size();
  return twice / 2;
}

int degree_within(const Graph& g, int v, VertexSet s) { return (g.neighbors(v) & s).size(); }

std::vector<int> by_inner_degree(const Graph& g, VertexSet s, int max_degree) {
  std::vector<int> out;
  for (int v : s) {
    if (degree_within(g, v, s) <= max_degree) out.push_back(v);
  }
  std::stable_sort(out.begin(), out.end(), [&](int a, int b) {
    return degree_within(g, a, s) < degree_within(g, b, s);
  });
  return out;
}

std::vector<VertexSet> singletons(VertexSet s) {
  std::vector<VertexSet> out;
  for (int v : s) out.push_back(VertexSet::single(v));
  return out;
}

// Remainder is K5: the base absorbs its neighbourhood.
Attempt star(const Graph& g, const Split& s) {
  if (s.rest.size() != 5 || !is_clique(g, s.rest)) return std::nullopt;
  std::vector<VertexSet> sets{s.near.with(s.base)};
  for (VertexSet one : singletons(s.rest)) sets.push_back(one);
  if (auto c = certify(g, std::move(sets))) return Found{*c, "star"};
  return std::nullopt;
}

// Remainder is K5 minus an edge a--b: some neighbour x adjacent to both ends
// absorbs a, the base absorbs the other neighbours.
Attempt pivot(const Graph& g, const Split& s) {
  if (s.rest.size() != 5) return std::nullopt;
  for (int a : s.rest) {
    for (int x : s.near & g.neighbors(a)) {
      std::vector<VertexSet> sets{s.near.without(x).with(s.base), VertexSet{x, a}};
      for (VertexSet one : singletons(s.rest.without(a))) sets.push_back(one);
      if (auto c = certify(g, std::move(sets))) return Found{*c, "pivot"};
    }
  }
  return std::nullopt;
}

// Base kept alone; each neighbour may absorb remainder vertices. Covers the
// labelled recipes that contract remainder vertices onto neighbours.
Attempt neighbourhood_extension(const Graph& g, const Split& s) {
  const std::vector<int> near = s.near.to_vector();
  const std::vector<int> rest = s.rest.to_vector();
  if (near.size() != 5) return std::nullopt;
  // owner[i] in 0..4 assigns rest[i] to near[owner[i]]; 5 leaves it unused.
  std::vector<int> owner(rest.size(), 0);
  while (true) {
    std::vector<VertexSet> sets{VertexSet::single(s.base)};
    for (int x : near) sets.push_back(VertexSet::single(x));
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (owner[i] < 5) sets[1 + owner[i]] = sets[1 + owner[i]].with(rest[i]);
    }
    bool connected = true;
    for (VertexSet part : sets) {
      if (reach_within(g, part.first(), part) != part) {
        connected = false;
        break;
      }
    }
    if (connected) {
      if (auto c = certify(g, std::move(sets))) return Found{*c, "neighbourhood-extension"};
    }
    std::size_t i = 0;
    while (i < owner.size() && owner[i] == 5) owner[i++] = 0;
    if (i == owner.size()) return std::nullopt;
    ++owner[i];
  }
}

// The base with all but one neighbour and one remainder vertex as a single
// branch set; the spare neighbour and the other remainder vertices stay alone.
Attempt star_absorb(const Graph& g, const Split& s) {
  if (s.rest.size() != 5) return std::nullopt;
  for (int x : s.near) {
    for (int h : s.rest) {
      std::vector<VertexSet> sets{s.near.without(x).with(s.base).with(h), VertexSet::single(x)};
      for (VertexSet one : singletons(s.rest.without(h))) sets.push_back(one);
      if (auto c = certify(g, std::move(sets))) return Found{*c, "star-absorb"};
    }
  }
  return std::nullopt;
}

Attempt search(const Graph& g, const SearchOptions& options, std::string recipe) {
  SearchResult r = find_k6(g, options);
  if (r.found()) return Found{*r.certificate, std::move(recipe)};
  return std::nullopt;
}

std::vector<VertexSet> separating_k4s(const Graph& g) {
  std::vector<VertexSet> out;
  for (int a = 0; a < g.order(); ++a) {
    for (int b : g.neighbors(a)) {
      if (b < a) continue;
      for (int c : g.neighbors(a) & g.neighbors(b)) {
        if (c < b) continue;
        for (int d : g.neighbors(a) & g.neighbors(b) & g.neighbors(c)) {
          if (d < c) continue;
          const VertexSet sep{a, b, c, d};
          const VertexSet outside = g.vertices() - sep;
          if (!outside.empty() && reach_within(g, outside.first(), outside) != outside) {
            out.push_back(sep);
          }
        }
      }
    }
  }
  return out;
}

// A separating K4 together with one small side already holds a K6 minor.
Attempt separator_side(const Graph& g, const SearchOptions& options) {
  for (VertexSet sep : separating_k4s(g)) {
    const InducedSubgraph rest = induced(g, g.vertices() - sep);
    for (VertexSet comp : components(rest.graph)) {
      if (comp.size() > 4) continue;
      VertexSet side = sep;
      for (int v : comp) side = side.with(rest.host_vertex[v]);
      const InducedSubgraph local = induced(g, side);
      SearchResult r = find_k6(local.graph, options);
      if (!r.found()) continue;
      std::vector<VertexSet> sets;
      for (VertexSet s : r.certificate->branch_sets) {
        VertexSet host;
        for (int v : s) host = host.with(local.host_vertex[v]);
        sets.push_back(host);
      }
      if (auto c = certify(g, std::move(sets))) return Found{*c, "separator-side"};
    }
  }
  return std::nullopt;
}

using Hypotheses = std::vector<std::pair<std::string, bool>>;

Hypotheses lemma_hypotheses(const Graph& m, int order, int size, int max_degree5) {
  Hypotheses h;
  h.emplace_back("order", m.order() == order);
  h.emplace_back("size", m.size() == size);
  const bool degree_ok = m.order() > 0 && min_degree(m) >= 5;
  h.emplace_back("min-degree", degree_ok);
  h.emplace_back("degree5-count", degree_sequence(m).count(5) <= max_degree5);
  h.emplace_back("not-apex", m.order() > 0 && !is_apex(m).has_value());
  return h;
}

LemmaReport evaluate_lemma(const Graph& m, std::string name, int order, int size, int max5,
                           const SearchOptions& options) {
  LemmaReport report{std::move(name), lemma_hypotheses(m, order, size, max5), std::nullopt, ""};
  if (!report.hypotheses_hold()) return report;
  Attempt found = separator_side(m, options);
  if (!found) found = search(m, options, std::string(kDelegated));
  if (!found) {
    throw Error(ErrorKind::internal_failure,
                report.lemma + " lemma instance without a K6 minor: " + to_graph6(m));
  }
  report.certificate = found->cert;
  report.method = found->recipe;
  return report;
}

class Replay {
 public:
  Replay(const SearchOptions& options, CaseTrace& trace) : options_(options), trace_(trace) {}

  // Minimum-degree base with a six-vertex neighbourhood and five-vertex remainder.
  Attempt order12(const Graph& g, int base) {
    const Split s = split_at(g, base);
    const int rest_edges = edges_within(g, s.rest);
    if (rest_edges == 10) {
      branch("remainder-k5");
      if (auto f = star(g, s)) return f;
    }
    if (rest_edges == 9) {
      branch("remainder-k5-minus");
      if (auto f = pivot(g, s)) return f;
    }
    for (int x : by_inner_degree(g, s.near, 2)) {
      const MappedGraph m = contract_edge_mapped(g, base, x);
      const int d = degree_within(g, x, s.near);
      branch("contract-inner-degree-" + std::to_string(d));
      note("contracted " + std::to_string(base) + "--" + std::to_string(x));
      if (m.graph.size() > mader_edge_bound(6, m.graph.order())) {
        branch("size-forces-k6");
        if (auto f = search(m.graph, options_, "edge-bound")) return lifted(f, m);
        fatal(m.graph, "contraction above the edge bound has no K6 minor");
      }
      if (m.graph.size() == 34) {
        LemmaReport report = evaluate_lemma_11(m.graph, options_);
        if (report.certificate) {
          branch("order11-lemma");
          return lifted(Found{*report.certificate, "order11-lemma/" + report.method}, m);
        }
        note("order-11 contraction fails " + report.first_failure());
        continue;
      }
      if (m.graph.size() == 33) {
        const VertexSet inner = g.neighbors(x) & s.near;
        const std::vector<int> pair = inner.to_vector();
        branch(pair.size() == 2 && g.has_edge(pair[0], pair[1]) ? "inner-neighbours-adjacent"
                                                                  : "inner-neighbours-apart");
        if (auto f = order11(m.graph)) return lifted(f, m);
      }
    }
    return std::nullopt;
  }

 private:
  // Order 11, size 33; bases are the degree-5 vertices.
  Attempt order11(const Graph& m) {
    for (int u = 0; u < m.order(); ++u) {
      if (m.degree(u) != 5) continue;
      const Split s = split_at(m, u);
      const int rest_edges = edges_within(m, s.rest);
      if (rest_edges == 10) {
        branch("order11-remainder-k5");
        if (auto f = star(m, s)) return f;
      }
      if (rest_edges == 9) {
        branch("order11-remainder-k5-minus");
        if (auto f = pivot(m, s)) return f;
      }
      for (int y : by_inner_degree(m, s.near, 1)) {
        const MappedGraph p = contract_edge_mapped(m, u, y);
        if (p.graph.size() > mader_edge_bound(6, p.graph.order())) {
          branch("order11-size-forces-k6");
          if (auto f = search(p.graph, options_, "edge-bound")) return lifted(f, p);
          fatal(p.graph, "contraction above the edge bound has no K6 minor");
        }
      }
      std::vector<MappedGraph> deferred;
      for (int y : by_inner_degree(m, s.near, 2)) {
        if (degree_within(m, y, s.near) != 2) continue;
        MappedGraph p = contract_edge_mapped(m, u, y);
        if (p.graph.size() != 30) continue;
        LemmaReport report = evaluate_lemma_10(p.graph, options_);
        if (report.certificate) {
          branch("order10-lemma");
          return lifted(Found{*report.certificate, "order10-lemma/" + report.method}, p);
        }
        deferred.push_back(std::move(p));
      }
      if (auto f = neighbourhood_extension(m, s)) {
        branch("labelled-contraction");
        return f;
      }
      if (auto f = star_absorb(m, s)) {
        branch("labelled-contraction");
        return f;
      }
      // Size-30 contractions outside the lemma's hypotheses: the cockade
      // structure theorem still yields a minor, found here by search.
      for (const MappedGraph& p : deferred) {
        branch("order10-cockade-structure");
        if (auto f = search(p.graph, options_, "order10-cockade-structure")) return lifted(f, p);
      }
    }
    return std::nullopt;
  }

  void branch(std::string label) { trace_.branches.push_back(std::move(label)); }
  void note(std::string text) { trace_.notes.push_back(std::move(text)); }

  [[noreturn]] static void fatal(const Graph& g, const std::string& what) {
    throw Error(ErrorKind::internal_failure, what + ": " + to_graph6(g));
  }

  const SearchOptions& options_;
  CaseTrace& trace_;
};

}  // namespace

CaseTrace classify_case(const Graph& g) {
  require_main_hypotheses(g);
  CaseTrace trace;
  trace.degrees = degree_sequence(g);
  const int m = g.size();
  if (m >= 39) {
    trace.size_case = SizeCase::e39plus;
  } else if (m == 38) {
    trace.size_case = SizeCase::e38;
  } else if (m == 37) {
    trace.size_case = trace.degrees.count(8) == 1 ? SizeCase::e37a : SizeCase::e37b;
  } else {
    trace.size_case = SizeCase::e36;
  }
  const int low = min_degree(g);
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == low) {
      trace.base_vertex = v;
      break;
    }
  }
  const NhlPartition split = nhl_partition(g, trace.base_vertex);
  trace.neighborhood_edges = split.n_graph.size();
  trace.remainder_edges = split.h_graph.size();
  trace.cross_edges = split.cross_edges;
  trace.neighborhood_identity = split.n_identity;
  trace.remainder_identity = split.h_identity;

  if (trace.size_case == SizeCase::e37b) {
    std::vector<int> sevens;
    for (int v = 0; v < g.order(); ++v) {
      if (g.degree(v) == 7) sevens.push_back(v);
    }
    if (g.has_edge(sevens[0], sevens[1])) {
      trace.notes.push_back("degree-7 vertices " + std::to_string(sevens[0]) + " and " +
                            std::to_string(sevens[1]) +
                            " are adjacent; deleting their edge leaves a 6-regular graph");
    } else {
      trace.notes.push_back("degree-7 vertices " + std::to_string(sevens[0]) + " and " +
                            std::to_string(sevens[1]) + " are not adjacent");
    }
  }
  return trace;
}

MainCheck check_main(const Graph& g, const SearchOptions& options) {
  CaseTrace trace = classify_case(g);
  auto done = [&](Found f) {
    trace.resolution = f.recipe;
    if (!verify_certificate(g, k6(), f.cert)) {
      throw Error(ErrorKind::internal_failure, "recipe certificate failed to verify: " + to_graph6(g));
    }
    return MainCheck{std::move(f.cert), std::move(trace)};
  };

  Graph work = g;
  switch (trace.size_case) {
    case SizeCase::e39plus:
      trace.branches.push_back("size-forces-k6");
      break;
    case SizeCase::e38:
      trace.branches.push_back("separating-k4");
      if (auto f = separator_side(g, options)) return done(std::move(*f));
      break;
    case SizeCase::e37b: {
      std::vector<int> sevens;
      for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 7) sevens.push_back(v);
      }
      if (g.has_edge(sevens[0], sevens[1])) {
        trace.branches.push_back("drop-edge-to-regular");
        work = delete_edge(g, sevens[0], sevens[1]);
      }
      [[fallthrough]];
    }
    case SizeCase::e37a:
    case SizeCase::e36: {
      // Every minimum-degree vertex qualifies as a base; the designated one
      // is tried first and the one that succeeds is recorded.
      Replay replay(options, trace);
      const int low = min_degree(work);
      std::vector<int> bases{trace.base_vertex};
      for (int v = 0; v < work.order(); ++v) {
        if (work.degree(v) == low && v != trace.base_vertex) bases.push_back(v);
      }
      for (int base : bases) {
        if (work.degree(base) != low) continue;
        trace.notes.push_back("base " + std::to_string(base));
        if (auto f = replay.order12(work, base)) return done(std::move(*f));
      }
      break;
    }
  }
  if (auto f = search(g, options, std::string(kDelegated))) return done(std::move(*f));
  throw Error(ErrorKind::internal_failure,
              "no K6 minor found for order-12 graph with minimum degree 6: " + to_graph6(g));
}

bool LemmaReport::hypotheses_hold() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(), [](const auto& h) { return h.second; });
}

std::string LemmaReport::first_failure() const {
  for (const auto& [name, ok] : hypotheses) {
    if (!ok) return name;
  }
  return {};
}

LemmaReport evaluate_lemma_11(const Graph& m, const SearchOptions& options) {
  return evaluate_lemma(m, "order-11", 11, 34, 4, options);
}

LemmaReport evaluate_lemma_10(const Graph& m, const SearchOptions& options) {
  return evaluate_lemma(m, "order-10", 10, 30, 5, options);
}

namespace {

LemmaReport require_hypotheses(LemmaReport report) {
  if (!report.hypotheses_hold()) {
    throw Error(ErrorKind::hypothesis_violated, report.lemma + ": " + report.first_failure());
  }
  return report;
}

}  // namespace

LemmaReport lemma_11(const Graph& m, const SearchOptions& options) {
  return require_hypotheses(evaluate_lemma_11(m, options));
}

LemmaReport lemma_10(const Graph& m, const SearchOptions& options) {
  return require_hypotheses(evaluate_lemma_10(m, options));
}

MinorCertificate jorgensen_small(const Graph& g, const SearchOptions& options) {
  if (g.order() == 0 || g.order() > 11 || min_degree(g) < 6) {
    throw Error(ErrorKind::precondition_violated, "expected order <= 11 and minimum degree >= 6");
  }
  SearchResult r = find_k6(g, options);
  if (!r.found()) {
    throw Error(ErrorKind::internal_failure,
                "small graph with minimum degree 6 has no K6 minor: " + to_graph6(g));
  }
  return *r.certificate;
}

Graph order26_example() {
  const Graph half = join(complete(1), icosahedron());
  return disjoint_union(half, half).with_edge(1, 14);
}

std::vector<PropertyCheck> order26_properties(const Graph& g) {
  std::vector<PropertyCheck> checks;
  checks.push_back({"min-degree-6", min_degree(g) == 6});
  checks.push_back({"not-apex", !is_apex(g).has_value()});
  const SearchResult r = find_complete_minor_blockwise(g, 6);
  checks.push_back({"no-k6-minor", r.outcome == SearchOutcome::absent});
  return checks;
}

std::vector<Graph> sample_lemma_instances(int order, std::uint64_t seed, int count) {
  int size = 0;
  int max5 = 0;
  if (order == 11) {
    size = 34;
    max5 = 4;
  } else if (order == 10) {
    size = 30;
    max5 = 5;
  } else {
    throw Error(ErrorKind::parameter_out_of_range, "lemma instances exist for order 10 or 11");
  }
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  while (static_cast<int>(out.size()) < count) {
    for (Graph& g : sample_constrained(order, 5, {size, size}, rng(), 32)) {
      const Hypotheses h = lemma_hypotheses(g, order, size, max5);
      if (std::all_of(h.begin(), h.end(), [](const auto& p) { return p.second; })) {
        out.push_back(std::move(g));
        if (static_cast<int>(out.size()) == count) break;
      }
    }
  }
  return out;
}

std::vector<ConeInstance> sample_cone_instances(std::uint64_t seed, int count, int min_order,
                                                int max_order) {
  if (min_order < 5 || max_order < min_order || max_order > kMaxOrder) {
    throw Error(ErrorKind::parameter_out_of_range, "cone instance orders must satisfy 5 <= min <= max");
  }
  std::mt19937_64 rng(seed);
  std::vector<ConeInstance> out;
  while (static_cast<int>(out.size()) < count) {
    const int n = std::uniform_int_distribution<int>(min_order, max_order)(rng);
    Graph g;
    if (out.size() % 2 == 0) {
      // Cone over a random triangulation, placed at a random position.
      g = join(complete(1), random_maximal_planar(rng, n - 1));
    } else {
      g = realize(random_mp1_cockade(rng(), n));
    }
    g = shuffle_vertices(rng, g);
    for (int v = 0; v < g.order(); ++v) {
      if (is_planar(delete_vertex(g, v)).planar) {
        out.push_back({g, v});
        break;
      }
    }
  }
  return out;
}

}  // namespace kminor
