#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kminor/graph.hpp"

namespace kminor {

/// Branch sets realising a target graph H inside a host G: entry i is the set
/// of host vertices contracted onto vertex i of H.
struct MinorCertificate {
  std::vector<VertexSet> branch_sets;

  friend bool operator==(const MinorCertificate&, const MinorCertificate&) = default;
};

/// Independent checker: branch sets are non-empty, inside the host, pairwise
/// disjoint, each induces a connected subgraph, and every edge of h is
/// realised by some host edge. Throws arity-mismatch when the number of
/// branch sets differs from the order of h.
bool verify_certificate(const Graph& g, const Graph& h, const MinorCertificate& cert);

/// Text form: first line the target order, then one line per branch set
/// with space-separated host vertex indices.
std::string to_text(const MinorCertificate& cert);
MinorCertificate certificate_from_text(std::string_view text);

/// Maps a certificate on an image graph back to the source graph, where
/// index_map[v] is the image of source vertex v (or -1 if v was deleted).
MinorCertificate pull_back(const MinorCertificate& cert, std::span<const int> index_map);

}  // namespace kminor
