#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kminor/graph.hpp"

namespace kminor {

Graph empty_graph(int n);
Graph complete(int n);
/// K_n with the edge {0, 1} removed.
Graph complete_minus(int n);
/// Parts are laid out consecutively: part 0 first, then part 1, ...
Graph complete_multipartite(const std::vector<int>& parts);
Graph cycle(int n);
Graph path(int n);
/// Hub 0 joined to the cycle 1..n.
Graph wheel(int n);
/// Cycle 0..k-1 plus two poles k and k+1 adjacent to every cycle vertex.
Graph bipyramid(int k);
Graph octahedron();
/// Triangular prism K3 x K2: triangles {0,1,2} and {3,4,5}, rungs i -- i+3.
Graph prism();

/// Labelling: 0 is the north pole, 1..5 the upper ring, 6..10 the lower ring
/// (lower vertex 5+i sits below upper vertices i and i%5+1), 11 the south pole.
Graph icosahedron();

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
Graph petersen();
Graph petersen_complement();

struct CatalogEntry {
  std::string name;
  Graph graph;
  DegreeSequence degrees;
  int size = 0;
  bool planar = false;
};

/// All order-5 graphs with size in [size_min, size_max] and minimum degree at
/// least min_degree, optionally with exactly `degree2_count` vertices of
/// degree 2; one per isomorphism class, in canonical order.
std::vector<CatalogEntry> enumerate_order5(int size_min, int size_max, int min_degree,
                                           std::optional<int> degree2_count = std::nullopt);

/// True iff every vertex's open neighbourhood induces a 3-regular graph.
bool neighborhood_3_regular_everywhere(const Graph& g);

/// Connected 6-regular graphs of the given order (9 or 10) whose open
/// neighbourhoods are all 3-regular, one per isomorphism class.
std::vector<Graph> locally_cubic_six_regular(int order);

}  // namespace kminor
