#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "kminor/graph.hpp"

namespace kminor {

struct SizeRange {
  int min = 0;
  int max = 0;
};

/// Reproducible stream of `count` simple graphs of the given order with
/// minimum degree >= min_degree and size in `sizes`. Each graph starts as a
/// random edge set, is repaired until the degree bound holds, then mixed by
/// size-preserving edge moves and degree-preserving swaps. Throws
/// infeasible-constraints when no such graph exists.
std::vector<Graph> sample_constrained(int order, int min_degree, SizeRange sizes,
                                      std::uint64_t seed, int count);

/// Random triangulation of the sphere on `order` (>= 3) vertices: stacked
/// face insertions followed by random edge flips.
Graph random_maximal_planar(std::mt19937_64& rng, int order);

/// Uniformly random relabelling.
Graph shuffle_vertices(std::mt19937_64& rng, const Graph& g);

}  // namespace kminor
