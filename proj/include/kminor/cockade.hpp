#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kminor/graph.hpp"

namespace kminor {

/// Decomposition witness for an MP1-cockade: a K5 leaf, a cone over a
/// 4-connected maximal planar graph, or a clique sum over K4 of two smaller
/// cockades. Trees are immutable; children are shared.
class CockadeTree {
 public:
  enum class Kind { k5_leaf, cone_leaf, sum };

  static CockadeTree k5();
  /// Throws precondition-violated unless `planar_part` is 4-connected maximal planar.
  static CockadeTree cone(const Graph& planar_part);

  Kind kind() const { return kind_; }
  int order() const { return realized_.order(); }
  /// The realised cockade (see realize()).
  const Graph& graph() const { return realized_; }

  const Graph& planar_part() const { return planar_; }
  const CockadeTree& left() const { return *left_; }
  const CockadeTree& right() const { return *right_; }
  const std::array<int, 4>& left_clique() const { return x_; }
  const std::array<int, 4>& right_clique() const { return y_; }

  friend CockadeTree mp1_glue(const CockadeTree& t1, const CockadeTree& t2,
                              const std::array<int, 4>& x, const std::array<int, 4>& y);

 private:
  CockadeTree() = default;

  Kind kind_ = Kind::k5_leaf;
  Graph realized_;
  Graph planar_;
  std::shared_ptr<const CockadeTree> left_;
  std::shared_ptr<const CockadeTree> right_;
  std::array<int, 4> x_{};
  std::array<int, 4> y_{};
};

/// K1 * h with the cone vertex at index 0. h must be 4-connected maximal planar.
Graph mp1_cone(const Graph& h);

/// Clique sum over K4 identifying x[j] (in t1's graph) with y[j] (in t2's).
/// Throws not-a-k4 if either list fails to induce K4.
CockadeTree mp1_glue(const CockadeTree& t1, const CockadeTree& t2, const std::array<int, 4>& x,
                     const std::array<int, 4>& y);

/// Leaves realise as K5 and K1 * H; a sum realises as clique_sum of its
/// children, so the left child's vertices keep their indices.
Graph realize(const CockadeTree& tree);

struct CockadeRecognition {
  CockadeTree tree;
  /// host_vertex[i] is the vertex of the input graph playing realised vertex i.
  std::vector<int> host_vertex;
};

/// Recognises MP1-cockades: checks |E| = 4n - 10, then the leaf cases, then
/// splits along separating K4s in lexicographic order, first success wins.
std::optional<CockadeRecognition> is_mp1_cockade(const Graph& g);

/// Reproducible random cockade of exactly `target_order` vertices (>= 5).
/// Planar parts come from a fixed catalogue: bipyramids over C_k (k >= 4,
/// the octahedron being k = 4) and the icosahedron. Not a uniform sampler.
CockadeTree random_mp1_cockade(std::uint64_t seed, int target_order);

/// Nested text: `K5`, `CONE(<graph6>)`, `SUM(<t1>,<t2>,[x...],[y...])`.
std::string to_text(const CockadeTree& tree);
CockadeTree cockade_from_text(std::string_view text);

}  // namespace kminor
