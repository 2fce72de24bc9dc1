#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kminor/certificate.hpp"
#include "kminor/graph.hpp"
#include "kminor/minor_search.hpp"

namespace kminor {

/// Size classes of order-12 graphs with minimum degree 6. The two 37-edge
/// classes have degree sequences (6^11, 8) and (6^10, 7, 7).
enum class SizeCase { e36, e37a, e37b, e38, e39plus };
std::string_view to_string(SizeCase c);

struct CaseTrace {
  SizeCase size_case = SizeCase::e36;
  DegreeSequence degrees;
  /// Minimum-degree vertex of smallest index.
  int base_vertex = -1;
  // Statistics for the split of the other vertices into the base's
  // neighbourhood and the remainder.
  int neighborhood_edges = 0;
  int remainder_edges = 0;
  int cross_edges = 0;
  /// Degree sum over the neighbourhood minus the base's degree; equals
  /// 2 * neighborhood_edges + cross_edges.
  int neighborhood_identity = 0;
  /// Degree sum over the remainder; equals 2 * remainder_edges + cross_edges.
  int remainder_identity = 0;
  std::vector<std::string> branches;
  /// Name of the recipe that produced the certificate, or "delegated-to-search".
  std::string resolution;
  std::vector<std::string> notes;
};

/// Classification only. Order must be 12 with minimum degree >= 6.
CaseTrace classify_case(const Graph& g);

struct MainCheck {
  MinorCertificate certificate;
  CaseTrace trace;
};

/// Produces a verified K6 certificate for an order-12 graph with minimum
/// degree >= 6, replaying the case analysis and its contraction recipes
/// before falling back to general search. Throws internal-failure (with the
/// graph6 string in the message) if no certificate is found.
MainCheck check_main(const Graph& g, const SearchOptions& options = {});

struct LemmaReport {
  std::string lemma;
  std::vector<std::pair<std::string, bool>> hypotheses;
  std::optional<MinorCertificate> certificate;
  std::string method;

  bool hypotheses_hold() const;
  /// Name of the first failing hypothesis, empty if all hold.
  std::string first_failure() const;
};

/// Order 11, size 34, min degree >= 5, not apex, at most four degree-5
/// vertices. The report carries a certificate whenever all hypotheses hold.
LemmaReport evaluate_lemma_11(const Graph& m, const SearchOptions& options = {});
/// Order 10, size 30, min degree >= 5, not apex, at most five degree-5 vertices.
LemmaReport evaluate_lemma_10(const Graph& m, const SearchOptions& options = {});

/// As above, but a failing hypothesis throws hypothesis-violated naming it.
LemmaReport lemma_11(const Graph& m, const SearchOptions& options = {});
LemmaReport lemma_10(const Graph& m, const SearchOptions& options = {});

/// K6 certificate for a graph of order <= 11 with minimum degree >= 6.
MinorCertificate jorgensen_small(const Graph& g, const SearchOptions& options = {});

/// Two copies of K1 * icosahedron (vertices 0..12 and 13..25, cone vertices
/// 0 and 13) joined by the edge 1 -- 14 between icosahedral vertices.
Graph order26_example();

struct PropertyCheck {
  std::string name;
  bool passed = false;
};
/// Minimum degree 6, not apex, and no K6 minor (searched block by block).
std::vector<PropertyCheck> order26_properties(const Graph& g);

/// Rejection-sampled instances meeting every hypothesis of the order-11
/// (order = 11) or order-10 (order = 10) lemma.
std::vector<Graph> sample_lemma_instances(int order, std::uint64_t seed, int count);

struct ConeInstance {
  Graph graph;
  int vertex = -1;
};
/// Graphs of size 4n - 10 with a vertex whose deletion is planar, drawn from
/// cones over random triangulations and from apex cockades.
std::vector<ConeInstance> sample_cone_instances(std::uint64_t seed, int count, int min_order = 6,
                                                int max_order = 20);

}  // namespace kminor
