#include "kminor/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "kminor/error.hpp"

namespace kminor {

namespace {

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

void require_capacity(int order) {
  if (order < 0 || order > kMaxOrder) {
    throw Error(ErrorKind::capacity_exceeded, "order " + std::to_string(order) + " outside 0..64");
  }
}

void add_edge(std::array<std::uint64_t, kMaxOrder>& rows, int u, int v) {
  rows[u] |= bit(v);
  rows[v] |= bit(u);
}

}  // namespace

Graph::Graph(int order) : order_(order) { require_capacity(order); }

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
  Graph g(order);
  for (auto [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw Error(ErrorKind::loop_edge, "loop at vertex " + std::to_string(u));
    add_edge(g.rows_, u, v);
  }
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order_) {
    throw Error(ErrorKind::index_out_of_range,
                "vertex " + std::to_string(v) + " not in graph of order " + std::to_string(order_));
  }
}

int Graph::size() const {
  int twice = 0;
  for (int v = 0; v < order_; ++v) twice += std::popcount(rows_[v]);
  return twice / 2;
}

int Graph::degree(int v) const { return std::popcount(rows_[v]); }

VertexSet Graph::neighbors_of(VertexSet s) const {
  std::uint64_t out = 0;
  for (int v : s) out |= rows_[v];
  return VertexSet(out);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order_; ++u) {
    for (int v : VertexSet(rows_[u] & ~((bit(u) << 1) - 1))) out.emplace_back(u, v);
  }
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(ErrorKind::loop_edge, "loop at vertex " + std::to_string(u));
  Graph g = *this;
  add_edge(g.rows_, u, v);
  return g;
}

int DegreeSequence::count(int degree) const {
  return static_cast<int>(std::count(values.begin(), values.end(), degree));
}

MappedGraph contract_edge_mapped(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.has_edge(u, v)) {
    throw Error(ErrorKind::not_an_edge,
                "(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  }
  const int keep = std::min(u, v);
  const int gone = std::max(u, v);
  const int last = g.order() - 1;
  std::vector<int> map(g.order());
  for (int i = 0; i < g.order(); ++i) map[i] = i;
  map[gone] = keep;
  if (gone != last) map[last] = gone;

  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) {
    if (map[a] != map[b]) edges.emplace_back(map[a], map[b]);
  }
  return {Graph::from_edges(g.order() - 1, edges), std::move(map)};
}

Graph contract_edge(const Graph& g, int u, int v) { return contract_edge_mapped(g, u, v).graph; }

MappedGraph delete_vertex_mapped(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw Error(ErrorKind::index_out_of_range, "vertex " + std::to_string(v));
  }
  std::vector<int> map(g.order());
  for (int i = 0; i < g.order(); ++i) map[i] = i < v ? i : (i == v ? -1 : i - 1);
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) {
    if (a != v && b != v) edges.emplace_back(map[a], map[b]);
  }
  return {Graph::from_edges(g.order() - 1, edges), std::move(map)};
}

Graph delete_vertex(const Graph& g, int v) { return delete_vertex_mapped(g, v).graph; }

Graph delete_edge(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.has_edge(u, v)) {
    throw Error(ErrorKind::not_an_edge,
                "(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  }
  std::vector<Edge> edges;
  for (auto e : g.edges()) {
    if (e != Edge{std::min(u, v), std::max(u, v)}) edges.push_back(e);
  }
  return Graph::from_edges(g.order(), edges);
}

InducedSubgraph induced(const Graph& g, VertexSet s) {
  if (!s.is_subset_of(g.vertices())) {
    throw Error(ErrorKind::index_out_of_range, "vertex set exceeds graph order");
  }
  std::vector<int> host = s.to_vector();
  std::vector<int> local(g.order(), -1);
  for (std::size_t i = 0; i < host.size(); ++i) local[host[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) {
    if (local[a] >= 0 && local[b] >= 0) edges.emplace_back(local[a], local[b]);
  }
  return {Graph::from_edges(static_cast<int>(host.size()), edges), std::move(host)};
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  require_capacity(g1.order() + g2.order());
  std::vector<Edge> edges = g1.edges();
  const int shift = g1.order();
  for (auto [a, b] : g2.edges()) edges.emplace_back(a + shift, b + shift);
  return Graph::from_edges(g1.order() + g2.order(), edges);
}

Graph join(const Graph& g1, const Graph& g2) {
  require_capacity(g1.order() + g2.order());
  std::vector<Edge> edges = disjoint_union(g1, g2).edges();
  for (int a = 0; a < g1.order(); ++a) {
    for (int b = 0; b < g2.order(); ++b) edges.emplace_back(a, g1.order() + b);
  }
  return Graph::from_edges(g1.order() + g2.order(), edges);
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(g.order(), edges);
}

bool is_clique(const Graph& g, VertexSet s) {
  for (int v : s) {
    if (!(s.without(v)).is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

MappedGraph clique_sum_mapped(const Graph& g1, const Graph& g2, std::span<const int> x,
                              std::span<const int> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorKind::not_a_clique, "identified vertex lists differ in length");
  }
  VertexSet xs;
  VertexSet ys;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] < 0 || x[j] >= g1.order() || y[j] < 0 || y[j] >= g2.order()) {
      throw Error(ErrorKind::index_out_of_range, "clique vertex outside graph");
    }
    xs = xs.with(x[j]);
    ys = ys.with(y[j]);
  }
  if (xs.size() != static_cast<int>(x.size()) || ys.size() != static_cast<int>(y.size()) ||
      !is_clique(g1, xs) || !is_clique(g2, ys)) {
    throw Error(ErrorKind::not_a_clique, "identified vertices must induce equal-order cliques");
  }
  const int p = static_cast<int>(x.size());
  require_capacity(g1.order() + g2.order() - p);

  std::vector<int> map(g2.order(), -1);
  for (std::size_t j = 0; j < y.size(); ++j) map[y[j]] = x[j];
  int next = g1.order();
  for (int v = 0; v < g2.order(); ++v) {
    if (map[v] < 0) map[v] = next++;
  }
  std::vector<Edge> edges = g1.edges();
  for (auto [a, b] : g2.edges()) edges.emplace_back(map[a], map[b]);
  return {Graph::from_edges(next, edges), std::move(map)};
}

Graph clique_sum(const Graph& g1, const Graph& g2, std::span<const int> x, std::span<const int> y) {
  return clique_sum_mapped(g1, g2, x, y).graph;
}

Graph permuted(const Graph& g, std::span<const int> perm) {
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) edges.emplace_back(perm[a], perm[b]);
  return Graph::from_edges(g.order(), edges);
}

DegreeSequence degree_sequence(const Graph& g) {
  DegreeSequence seq;
  seq.values.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) seq.values.push_back(g.degree(v));
  std::sort(seq.values.begin(), seq.values.end());
  return seq;
}

int min_degree(const Graph& g) {
  if (g.order() == 0) throw Error(ErrorKind::empty_graph, "minimum degree of the empty graph");
  int best = g.degree(0);
  for (int v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

int max_degree(const Graph& g) {
  if (g.order() == 0) throw Error(ErrorKind::empty_graph, "maximum degree of the empty graph");
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

NhlPartition nhl_partition(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw Error(ErrorKind::index_out_of_range, "base vertex");
  if (g.degree(v) == 0) {
    throw Error(ErrorKind::precondition_violated, "base vertex has no neighbours");
  }
  NhlPartition part;
  part.base = v;
  part.n_vertices = g.neighbors(v);
  part.h_vertices = g.vertices() - part.n_vertices.with(v);
  if (part.h_vertices.empty()) {
    throw Error(ErrorKind::trivial_partition, "no vertex outside the closed neighbourhood");
  }
  part.n_graph = induced(g, part.n_vertices).graph;
  part.h_graph = induced(g, part.h_vertices).graph;
  for (int u : part.n_vertices) {
    part.cross_edges += (g.neighbors(u) & part.h_vertices).size();
    part.n_identity += g.degree(u) - 1;
  }
  for (int w : part.h_vertices) part.h_identity += g.degree(w);
  return part;
}

VertexSet reach_within(const Graph& g, int start, VertexSet allowed) {
  VertexSet seen = VertexSet::single(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next = (g.neighbors_of(frontier) & allowed) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices();
  while (!left.empty()) {
    VertexSet comp = reach_within(g, left.first(), left);
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return g.order() == 0 || components(g).size() == 1; }

namespace {

struct BlockFinder {
  const Graph& g;
  std::vector<int> disc;
  std::vector<int> low;
  std::vector<Edge> stack;
  std::vector<VertexSet> out;
  int timer = 0;

  void visit(int u, int parent) {
    disc[u] = low[u] = timer++;
    for (int w : g.neighbors(u)) {
      if (disc[w] < 0) {
        stack.emplace_back(u, w);
        visit(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          VertexSet block;
          while (true) {
            Edge e = stack.back();
            stack.pop_back();
            block = block.with(e.first).with(e.second);
            if (e == Edge{u, w}) break;
          }
          out.push_back(block);
        }
      } else if (w != parent && disc[w] < disc[u]) {
        stack.emplace_back(u, w);
        low[u] = std::min(low[u], disc[w]);
      }
    }
  }
};

}  // namespace

std::vector<VertexSet> blocks(const Graph& g) {
  BlockFinder finder{g, std::vector<int>(g.order(), -1), std::vector<int>(g.order(), 0), {}, {}};
  for (int v = 0; v < g.order(); ++v) {
    if (finder.disc[v] >= 0) continue;
    if (g.degree(v) == 0) {
      finder.out.push_back(VertexSet::single(v));
      finder.disc[v] = finder.timer++;
      continue;
    }
    finder.visit(v, -1);
  }
  return finder.out;
}

}  // namespace kminor
