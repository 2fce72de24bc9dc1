#include "kminor/planarity.hpp"

#include <algorithm>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "kminor/error.hpp"

namespace kminor {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

}  // namespace

PlanarityVerdict is_planar(const Graph& g) {
  const int n = g.order();
  // Cheap rejection; the embedding test would agree.
  if (n >= 3 && g.size() > 3 * n - 6) return {false, std::nullopt};

  BoostGraph bg(n);
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
  auto edge_index = boost::get(boost::edge_index, bg);
  int next = 0;
  for (auto [it, end] = boost::edges(bg); it != end; ++it) boost::put(edge_index, *it, next++);

  std::vector<std::vector<BoostEdge>> embedding(n);
  const bool planar = n == 0 || boost::boyer_myrvold_planarity_test(
                                    boost::boyer_myrvold_params::graph = bg,
                                    boost::boyer_myrvold_params::embedding = &embedding[0]);
  if (!planar) return {false, std::nullopt};

  RotationSystem rotation(n);
  for (int v = 0; v < n; ++v) {
    for (const BoostEdge& e : embedding[v]) {
      const int a = static_cast<int>(boost::source(e, bg));
      const int b = static_cast<int>(boost::target(e, bg));
      rotation[v].push_back(a == v ? b : a);
    }
  }
  if (!satisfies_euler(g, rotation)) {
    throw Error(ErrorKind::internal_failure, "planar embedding failed the Euler check");
  }
  return {true, std::move(rotation)};
}

bool satisfies_euler(const Graph& g, const RotationSystem& rotation) {
  const int n = g.order();
  if (static_cast<int>(rotation.size()) != n) return false;
  std::vector<std::vector<int>> position(n, std::vector<int>(n, -1));
  for (int v = 0; v < n; ++v) {
    VertexSet seen;
    for (std::size_t k = 0; k < rotation[v].size(); ++k) {
      const int w = rotation[v][k];
      if (w < 0 || w >= n || !g.has_edge(v, w) || seen.contains(w)) return false;
      seen = seen.with(w);
      position[v][w] = static_cast<int>(k);
    }
    if (seen != g.neighbors(v)) return false;
  }

  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  std::vector<int> faces_at(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v : g.neighbors(u)) {
      if (used[u][v]) continue;
      int a = u;
      int b = v;
      while (!used[a][b]) {
        used[a][b] = true;
        const auto& around = rotation[b];
        const int c = around[(position[b][a] + 1) % around.size()];
        a = b;
        b = c;
      }
      ++faces_at[u];
    }
  }
  for (VertexSet comp : components(g)) {
    int vertices = comp.size();
    int twice_edges = 0;
    int faces = 0;
    for (int v : comp) {
      twice_edges += g.degree(v);
      faces += faces_at[v];
    }
    if (twice_edges == 0) continue;
    if (vertices - twice_edges / 2 + faces != 2) return false;
  }
  return true;
}

std::optional<int> is_apex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (is_planar(delete_vertex(g, v)).planar) return v;
  }
  return std::nullopt;
}

bool is_maximal_planar(const Graph& g) {
  if (g.order() < 3) throw Error(ErrorKind::order_too_small, "maximal planarity needs order >= 3");
  return g.size() == 3 * g.order() - 6 && is_planar(g).planar;
}

namespace {

bool connected_without(const Graph& g, VertexSet removed) {
  const VertexSet rest = g.vertices() - removed;
  if (rest.empty()) return true;
  return reach_within(g, rest.first(), rest) == rest;
}

// Max number of internally vertex-disjoint s-t paths, via unit vertex
// capacities on the split graph (v_in = 2v, v_out = 2v + 1).
int local_connectivity(const Graph& g, int s, int t) {
  const int n = g.order();
  const int nodes = 2 * n;
  const int inf = n + 1;
  std::vector<std::vector<int>> cap(nodes, std::vector<int>(nodes, 0));
  for (int v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? inf : 1;
  for (auto [u, v] : g.edges()) {
    cap[2 * u + 1][2 * v] = inf;
    cap[2 * v + 1][2 * u] = inf;
  }
  const int source = 2 * s + 1;
  const int sink = 2 * t;
  int flow = 0;
  while (true) {
    std::vector<int> parent(nodes, -1);
    parent[source] = source;
    std::vector<int> queue{source};
    for (std::size_t head = 0; head < queue.size() && parent[sink] < 0; ++head) {
      const int x = queue[head];
      for (int y = 0; y < nodes; ++y) {
        if (parent[y] < 0 && cap[x][y] > 0) {
          parent[y] = x;
          queue.push_back(y);
        }
      }
    }
    if (parent[sink] < 0) return flow;
    for (int y = sink; y != source; y = parent[y]) {
      --cap[parent[y]][y];
      ++cap[y][parent[y]];
    }
    ++flow;
  }
}

// Smallest vertex cut of size at most `up_to`, found by enumeration.
std::optional<int> small_cut(const Graph& g, int up_to) {
  const int n = g.order();
  for (int k = 1; k <= std::min(up_to, n - 2); ++k) {
    // Gosper's hack over k-subsets of n vertices.
    std::uint64_t set = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = n == 64 ? 0 : std::uint64_t{1} << n;
    while (limit == 0 ? set != 0 : set < limit) {
      if (!connected_without(g, VertexSet(set))) return k;
      const std::uint64_t low = set & (~set + 1);
      const std::uint64_t ripple = set + low;
      if (ripple == 0) break;
      set = (((ripple ^ set) >> 2) / low) | ripple;
    }
  }
  return std::nullopt;
}

}  // namespace

int connectivity(const Graph& g) {
  const int n = g.order();
  if (n == 0 || !is_connected(g)) {
    throw Error(ErrorKind::disconnected_input, "connectivity needs a connected graph");
  }
  if (g.size() == n * (n - 1) / 2) return n - 1;
  if (auto k = small_cut(g, kCutEnumerationLimit)) return *k;
  int best = n - 1;
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (!g.has_edge(s, t)) best = std::min(best, local_connectivity(g, s, t));
    }
  }
  return best;
}

bool is_k_connected(const Graph& g, int k) {
  if (g.order() < k + 1) return false;
  if (k <= 0) return true;
  if (!is_connected(g)) return false;
  if (g.size() == g.order() * (g.order() - 1) / 2) return true;
  if (k - 1 <= kCutEnumerationLimit) return !small_cut(g, k - 1).has_value();
  return connectivity(g) >= k;
}

bool lemma_cone_check(const Graph& g, int v) {
  const int n = g.order();
  if (v < 0 || v >= n) throw Error(ErrorKind::index_out_of_range, "cone vertex");
  if (g.size() != 4 * n - 10) {
    throw Error(ErrorKind::precondition_violated,
                "size " + std::to_string(g.size()) + " differs from 4n - 10 = " +
                    std::to_string(4 * n - 10));
  }
  if (!is_planar(delete_vertex(g, v)).planar) {
    throw Error(ErrorKind::precondition_violated, "g - v is not planar");
  }
  return g.degree(v) == n - 1;
}

}  // namespace kminor
