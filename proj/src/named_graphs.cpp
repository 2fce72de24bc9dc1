#include "kminor/named_graphs.hpp"

#include <set>
#include <sstream>

#include "kminor/error.hpp"
#include "kminor/isomorphism.hpp"
#include "kminor/planarity.hpp"

namespace kminor {

Graph empty_graph(int n) { return Graph(n); }

Graph complete(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::from_edges(n, edges);
}

Graph complete_minus(int n) {
  if (n < 2) throw Error(ErrorKind::order_too_small, "K_n^- needs n >= 2");
  return delete_edge(complete(n), 0, 1);
}

Graph complete_multipartite(const std::vector<int>& parts) {
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p] < 0) throw Error(ErrorKind::parameter_out_of_range, "negative part size");
    part_of.insert(part_of.end(), parts[p], static_cast<int>(p));
  }
  const int n = static_cast<int>(part_of.size());
  if (n > kMaxOrder) throw Error(ErrorKind::capacity_exceeded, "multipartite order exceeds 64");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (part_of[i] != part_of[j]) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph cycle(int n) {
  if (n < 3) throw Error(ErrorKind::order_too_small, "cycles need n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph wheel(int n) { return join(complete(1), cycle(n)); }

Graph bipyramid(int k) {
  std::vector<Edge> edges = cycle(k).edges();
  for (int i = 0; i < k; ++i) {
    edges.emplace_back(i, k);
    edges.emplace_back(i, k + 1);
  }
  return Graph::from_edges(k + 2, edges);
}

Graph octahedron() { return complete_multipartite({2, 2, 2}); }

Graph prism() {
  return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph icosahedron() {
  std::vector<Edge> edges;
  for (int i = 1; i <= 5; ++i) {
    const int next = i % 5 + 1;
    edges.emplace_back(0, i);
    edges.emplace_back(i, next);
    edges.emplace_back(5 + i, 5 + next);
    edges.emplace_back(5 + i, 11);
    edges.emplace_back(i, 5 + i);
    edges.emplace_back(next, 5 + i);
  }
  return Graph::from_edges(12, edges);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, i + 5);
  }
  return Graph::from_edges(10, edges);
}

Graph petersen_complement() { return complement(petersen()); }

std::vector<CatalogEntry> enumerate_order5(int size_min, int size_max, int min_degree,
                                           std::optional<int> degree2_count) {
  std::vector<CatalogEntry> out;
  for (const Graph& g : enumerate_graphs(5)) {
    const int m = g.size();
    if (m < size_min || m > size_max || kminor::min_degree(g) < min_degree) continue;
    DegreeSequence degrees = degree_sequence(g);
    if (degree2_count && degrees.count(2) != *degree2_count) continue;
    std::ostringstream name;
    name << "order5-size" << m << "-deg";
    for (int d : degrees.values) name << d;
    out.push_back({name.str(), g, std::move(degrees), m, is_planar(g).planar});
  }
  return out;
}

bool neighborhood_3_regular_everywhere(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    const Graph around = induced(g, g.neighbors(v)).graph;
    for (int u = 0; u < around.order(); ++u) {
      if (around.degree(u) != 3) return false;
    }
  }
  return true;
}

namespace {

// Completes a 6-regular graph whose vertex 0 has neighbours 1..6 inducing a
// fixed cubic graph; only edges touching vertices 7.. remain undecided.
class LocallyCubicCompleter {
 public:
  LocallyCubicCompleter(int order, const Graph& cubic6) : n_(order) {
    std::vector<Edge> base;
    for (int i = 1; i <= 6; ++i) base.emplace_back(0, i);
    for (auto [a, b] : cubic6.edges()) base.emplace_back(a + 1, b + 1);
    graph_ = Graph::from_edges(order, base);
    for (int a = 1; a < order; ++a) {
      for (int b = std::max(a + 1, 7); b < order; ++b) candidates_.emplace_back(a, b);
    }
  }

  void run(std::set<CanonicalForm>& found) { step(0, found); }

 private:
  void step(std::size_t k, std::set<CanonicalForm>& found) {
    if (k == candidates_.size()) {
      for (int v = 0; v < n_; ++v) {
        if (graph_.degree(v) != 6) return;
      }
      if (is_connected(graph_) && neighborhood_3_regular_everywhere(graph_)) {
        found.insert(canonical_form(graph_));
      }
      return;
    }
    auto [a, b] = candidates_[k];
    if (graph_.degree(a) < 6 && graph_.degree(b) < 6) {
      const Graph saved = graph_;
      graph_ = graph_.with_edge(a, b);
      step(k + 1, found);
      graph_ = saved;
    }
    // Skipping is only possible if a can still reach degree 6 later.
    int later_a = 0;
    for (std::size_t r = k + 1; r < candidates_.size(); ++r) {
      if (candidates_[r].first == a || candidates_[r].second == a) ++later_a;
    }
    if (graph_.degree(a) + later_a >= 6) step(k + 1, found);
  }

  int n_;
  Graph graph_;
  std::vector<Edge> candidates_;
};

}  // namespace

std::vector<Graph> locally_cubic_six_regular(int order) {
  if (order < 7 || order > kMaxIsomorphismOrder) {
    throw Error(ErrorKind::parameter_out_of_range, "locally cubic search supports order 7..10");
  }
  std::set<CanonicalForm> found;
  for (const Graph& cubic6 : {complete_multipartite({3, 3}), prism()}) {
    LocallyCubicCompleter(order, cubic6).run(found);
  }
  std::vector<Graph> out;
  for (const auto& form : found) out.push_back(form.graph());
  return out;
}

}  // namespace kminor
