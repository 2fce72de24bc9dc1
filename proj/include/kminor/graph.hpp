#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "kminor/vertex_set.hpp"

namespace kminor {

inline constexpr int kMaxOrder = 64;

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on at most 64 vertices.
///
/// Row `v` is the adjacency bitmask of vertex `v`. The representation keeps
/// three invariants: rows are symmetric, no vertex lists itself, and no bit at
/// or above `order()` is set. All operations below return fresh values.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph of the given order.
  explicit Graph(int order);

  /// Builds a graph from an edge list; duplicate pairs collapse.
  static Graph from_edges(int order, std::span<const Edge> edges);
  static Graph from_edges(int order, std::initializer_list<Edge> edges) {
    return from_edges(order, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return order_; }
  int size() const;

  std::uint64_t row(int v) const { return rows_[v]; }
  VertexSet neighbors(int v) const { return VertexSet(rows_[v]); }
  VertexSet vertices() const { return VertexSet::first_n(order_); }
  bool has_edge(int u, int v) const { return (rows_[u] >> v) & 1U; }
  int degree(int v) const;

  /// Union of the neighbourhoods of `s`, including members of `s` adjacent to each other.
  VertexSet neighbors_of(VertexSet s) const;

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  Graph with_edge(int u, int v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  int order_ = 0;
  std::array<std::uint64_t, kMaxOrder> rows_{};
};

struct DegreeSequence {
  std::vector<int> values;  // non-decreasing

  int count(int degree) const;
  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
};

/// A graph together with the position of every old vertex in it (-1 when removed).
struct MappedGraph {
  Graph graph;
  std::vector<int> index_map;
};

/// An induced subgraph plus, for each new vertex, its index in the host.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> host_vertex;
};

/// Simple contraction of edge uv. The merged vertex keeps min(u, v); the last
/// vertex moves into the slot freed by max(u, v).
Graph contract_edge(const Graph& g, int u, int v);
MappedGraph contract_edge_mapped(const Graph& g, int u, int v);

/// Removes v and shifts every higher index down by one.
Graph delete_vertex(const Graph& g, int v);
MappedGraph delete_vertex_mapped(const Graph& g, int v);
Graph delete_edge(const Graph& g, int u, int v);

InducedSubgraph induced(const Graph& g, VertexSet s);

/// G1 * G2: vertices of g1 first, then g2, plus every cross edge.
Graph join(const Graph& g1, const Graph& g2);
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph complement(const Graph& g);

/// Clique sum identifying x[j] with y[j]. The result lists g1's vertices first,
/// then g2's vertices outside y in increasing index order.
Graph clique_sum(const Graph& g1, const Graph& g2, std::span<const int> x, std::span<const int> y);
MappedGraph clique_sum_mapped(const Graph& g1, const Graph& g2, std::span<const int> x,
                              std::span<const int> y);

/// Relabels vertex i as perm[i].
Graph permuted(const Graph& g, std::span<const int> perm);

bool is_clique(const Graph& g, VertexSet s);

DegreeSequence degree_sequence(const Graph& g);
int min_degree(const Graph& g);
int max_degree(const Graph& g);

/// Open-neighbourhood partition around a base vertex: N = G[N(v)],
/// H = G - N[v], L = edges between them.
struct NhlPartition {
  int base = 0;
  VertexSet n_vertices;
  VertexSet h_vertices;
  Graph n_graph;
  Graph h_graph;
  int cross_edges = 0;
  /// sum over u in N of (deg(u) - 1); equals 2|E(N)| + |L|.
  int n_identity = 0;
  /// sum over w in H of deg(w); equals 2|E(H)| + |L|.
  int h_identity = 0;
};
NhlPartition nhl_partition(const Graph& g, int v);

std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
/// Biconnected components: maximal 2-connected vertex sets, bridges as
/// two-element sets, isolated vertices as singletons.
std::vector<VertexSet> blocks(const Graph& g);

/// Connected component of `start` inside the subgraph induced by `allowed`.
VertexSet reach_within(const Graph& g, int start, VertexSet allowed);

}  // namespace kminor
