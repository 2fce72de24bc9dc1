#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "kminor/certificate.hpp"
#include "kminor/graph.hpp"

namespace kminor {

inline constexpr int kMaxTargetOrder = 8;

struct SearchOptions {
  /// Sequential search with (degree, index) ordering; same input, same certificate.
  bool deterministic = true;
  /// Maximum number of search-tree nodes; 0 means unlimited.
  std::uint64_t node_budget = 0;
  /// Worker threads in non-deterministic mode; 0 picks hardware concurrency.
  int workers = 0;
  /// Degree-<=2, simplicial and universal-vertex reductions for complete targets.
  bool reduce = true;
  /// Greedy contraction attempt before the exhaustive search (complete targets).
  bool heuristic = true;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t connectivity_prunes = 0;
  std::uint64_t adjacency_prunes = 0;
  std::uint64_t count_prunes = 0;
  int reduced_vertices = 0;
  bool heuristic_hit = false;
  std::chrono::nanoseconds elapsed{0};
};

enum class SearchOutcome { found, absent, budget_exhausted };

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::absent;
  std::optional<MinorCertificate> certificate;
  SearchStats stats;

  bool found() const { return outcome == SearchOutcome::found; }
};

/// Exhaustive H-minor search. A returned certificate always verifies; an
/// `absent` outcome means g has no h minor. Targets of order above 8 throw.
SearchResult find_minor(const Graph& g, const Graph& h, const SearchOptions& options = {});

/// K_t minor search with the complete-target reductions.
SearchResult find_complete_minor(const Graph& g, int t, const SearchOptions& options = {});
SearchResult find_k6(const Graph& g, const SearchOptions& options = {});

/// Runs the complete-target search block by block. A K_t minor with t >= 3
/// is 2-connected, so it lives inside a single block.
SearchResult find_complete_minor_blockwise(const Graph& g, int t, const SearchOptions& options = {});

/// Largest size of a K_t-minor-free graph of order n, 2 <= t <= 7, n >= t-1.
int mader_edge_bound(int t, int n);
/// True when |E(g)| exceeds the bound, so g must have a K_t minor.
bool size_forces_kt(const Graph& g, int t);

/// Ground-truth minor test by exhaustive vertex deletions and edge
/// contractions with memoisation on canonical forms. Host order at most 8.
bool brute_force_minor(const Graph& g, const Graph& h);

}  // namespace kminor
