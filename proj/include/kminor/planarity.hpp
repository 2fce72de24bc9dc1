#pragma once

#include <optional>
#include <vector>

#include "kminor/graph.hpp"

namespace kminor {

/// Cyclic order of neighbours around each vertex.
using RotationSystem = std::vector<std::vector<int>>;

struct PlanarityVerdict {
  bool planar = false;
  /// Present when planar; validated against Euler's formula before return.
  std::optional<RotationSystem> embedding;
};

PlanarityVerdict is_planar(const Graph& g);

/// Traces the faces of a rotation system and checks V - E + F = 2 on every
/// connected component with at least one edge.
bool satisfies_euler(const Graph& g, const RotationSystem& rotation);

/// Some vertex whose deletion leaves a planar graph.
std::optional<int> is_apex(const Graph& g);

/// Planar with exactly 3n - 6 edges. Order below 3 throws.
bool is_maximal_planar(const Graph& g);

/// Vertex cuts up to this size are found by direct enumeration; larger
/// connectivity values fall back to max-flow.
inline constexpr int kCutEnumerationLimit = 5;

/// Minimum vertex cut size (n - 1 for complete graphs). Disconnected input throws.
int connectivity(const Graph& g);
bool is_k_connected(const Graph& g, int k);

/// For |E| = 4n - 10 with g - v planar, checks that v is adjacent to every
/// other vertex. Throws precondition-violated when the hypotheses fail.
bool lemma_cone_check(const Graph& g, int v);

}  // namespace kminor
