#include "kminor/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>

#include "kminor/error.hpp"

namespace kminor {

namespace {

void require_small(const Graph& g) {
  if (g.order() > kMaxIsomorphismOrder) {
    throw Error(ErrorKind::order_too_large,
                "isomorphism supports order <= 10, got " + std::to_string(g.order()));
  }
}

// Stable colour refinement seeded by degree; colours are ranks of sorted
// signatures, so the final colouring is invariant under relabelling.
std::vector<int> refine_colours(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(n);
  for (int v = 0; v < n; ++v) colour[v] = g.degree(v);
  int classes = -1;
  while (true) {
    std::vector<std::vector<int>> signature(n);
    for (int v = 0; v < n; ++v) {
      signature[v].push_back(colour[v]);
      std::vector<int> around;
      for (int w : g.neighbors(v)) around.push_back(colour[w]);
      std::sort(around.begin(), around.end());
      signature[v].insert(signature[v].end(), around.begin(), around.end());
    }
    std::vector<std::vector<int>> distinct = signature;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v) {
      colour[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), signature[v]) -
                                   distinct.begin());
    }
    if (static_cast<int>(distinct.size()) == classes) break;
    classes = static_cast<int>(distinct.size());
  }
  return colour;
}

// Branch and bound over colour-respecting placements, maximising the graph6
// bit string (columns j = 1..n-1, rows i < j).
class Canonicaliser {
 public:
  explicit Canonicaliser(const Graph& g) : g_(g), n_(g.order()) {
    std::vector<int> colour = refine_colours(g);
    std::vector<int> byColour(n_);
    for (int v = 0; v < n_; ++v) byColour[v] = v;
    std::stable_sort(byColour.begin(), byColour.end(),
                     [&](int a, int b) { return colour[a] < colour[b]; });
    for (int p = 0; p < n_; ++p) slot_colour_[p] = colour[byColour[p]];
    for (int v = 0; v < n_; ++v) colour_[v] = colour[v];
  }

  std::vector<int> run() {
    place(0, false);
    std::vector<int> perm(n_);
    for (int p = 0; p < n_; ++p) perm[best_at_[p]] = p;
    return perm;
  }

 private:
  // Column j as a string comparison key: bit i of the column is x(i, j).
  static int compare_columns(std::uint64_t a, std::uint64_t b) {
    if (a == b) return 0;
    const int i = std::countr_zero(a ^ b);
    return ((a >> i) & 1U) ? 1 : -1;
  }

  void place(int pos, bool ahead) {
    if (pos == n_) {
      if (!have_best_ || ahead) {
        have_best_ = true;
        ++updates_;
        best_at_ = at_;
        best_col_ = col_;
      }
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (used_ & (std::uint64_t{1} << v) || colour_[v] != slot_colour_[pos]) continue;
      std::uint64_t column = 0;
      for (int i = 0; i < pos; ++i) {
        if (g_.has_edge(at_[i], v)) column |= std::uint64_t{1} << i;
      }
      bool next_ahead = ahead;
      if (have_best_ && !ahead) {
        const int c = compare_columns(column, best_col_[pos]);
        if (c < 0) continue;
        next_ahead = c > 0;
      }
      at_[pos] = v;
      col_[pos] = column;
      used_ |= std::uint64_t{1} << v;
      const std::uint64_t before = updates_;
      place(pos + 1, next_ahead);
      used_ &= ~(std::uint64_t{1} << v);
      // The best leaf now shares this prefix; later siblings must beat it.
      if (updates_ != before) ahead = false;
    }
  }

  const Graph& g_;
  int n_;
  std::array<int, kMaxIsomorphismOrder> slot_colour_{};
  std::array<int, kMaxIsomorphismOrder> colour_{};
  std::array<int, kMaxIsomorphismOrder> at_{};
  std::array<std::uint64_t, kMaxIsomorphismOrder> col_{};
  std::array<int, kMaxIsomorphismOrder> best_at_{};
  std::array<std::uint64_t, kMaxIsomorphismOrder> best_col_{};
  std::uint64_t used_ = 0;
  std::uint64_t updates_ = 0;
  bool have_best_ = false;
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  require_small(g);
  if (g.order() == 0) return {};
  return Canonicaliser(g).run();
}

CanonicalForm canonical_form(const Graph& g) {
  std::vector<int> perm = canonical_labeling(g);
  return {g.order(), permuted(g, perm).edges()};
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  require_small(a);
  require_small(b);
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<Graph> enumerate_graphs(int order) {
  if (order < 0 || order > 8) {
    throw Error(ErrorKind::order_too_large, "graph enumeration supports order 0..8");
  }
  std::set<CanonicalForm> level{CanonicalForm{0, {}}};
  for (int k = 1; k <= order; ++k) {
    std::set<CanonicalForm> next;
    for (const CanonicalForm& base : level) {
      const Graph smaller = base.graph();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
        std::vector<Edge> edges = smaller.edges();
        for (int v : VertexSet(mask)) edges.emplace_back(v, k - 1);
        next.insert(canonical_form(Graph::from_edges(k, edges)));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (const CanonicalForm& form : level) out.push_back(form.graph());
  return out;
}

}  // namespace kminor
