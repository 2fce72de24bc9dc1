#pragma once

#include <compare>
#include <vector>

#include "kminor/graph.hpp"

namespace kminor {

inline constexpr int kMaxIsomorphismOrder = 10;

/// Canonical edge list: equal for two graphs iff they are isomorphic.
struct CanonicalForm {
  int order = 0;
  std::vector<Edge> edges;

  Graph graph() const { return Graph::from_edges(order, edges); }
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// perm[v] is the canonical position of v. Order must be at most 10.
std::vector<int> canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);

/// Degree-sequence prefilter, then canonical comparison. Orders above 10 throw.
bool is_isomorphic(const Graph& a, const Graph& b);

/// One representative per isomorphism class of graphs on `order` vertices
/// (order at most 8), sorted by canonical form.
std::vector<Graph> enumerate_graphs(int order);

}  // namespace kminor
