#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "kminor/error.hpp"
#include "kminor/isomorphism.hpp"
#include "kminor/minor_search.hpp"

namespace kminor {

namespace {

// Explores every sequence of vertex deletions and edge contractions down to
// the order of the target, then asks whether the target embeds as a spanning
// subgraph. Edge deletions are implicit in that final subgraph test.
class MinorOracle {
 public:
  explicit MinorOracle(const Graph& h) : h_(h) {}

  bool contains(const Graph& g) {
    if (g.order() < h_.order() || g.size() < h_.size()) return false;
    CanonicalForm key = canonical_form(g);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool result = false;
    if (g.order() == h_.order()) {
      result = spanning_embedding(g);
    } else {
      for (int v = 0; v < g.order() && !result; ++v) result = contains(delete_vertex(g, v));
      for (auto [u, v] : g.edges()) {
        if (result) break;
        result = contains(contract_edge(g, u, v));
      }
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  bool spanning_embedding(const Graph& g) const {
    std::vector<int> image(h_.order(), -1);
    std::vector<bool> used(g.order(), false);
    return place(g, 0, image, used);
  }

  bool place(const Graph& g, int hv, std::vector<int>& image, std::vector<bool>& used) const {
    if (hv == h_.order()) return true;
    for (int gv = 0; gv < g.order(); ++gv) {
      if (used[gv] || g.degree(gv) < h_.degree(hv)) continue;
      bool ok = true;
      for (int prev = 0; prev < hv && ok; ++prev) {
        if (h_.has_edge(prev, hv) && !g.has_edge(image[prev], gv)) ok = false;
      }
      if (!ok) continue;
      image[hv] = gv;
      used[gv] = true;
      if (place(g, hv + 1, image, used)) return true;
      used[gv] = false;
    }
    return false;
  }

  const Graph& h_;
  std::map<CanonicalForm, bool> memo_;
};

}  // namespace

bool brute_force_minor(const Graph& g, const Graph& h) {
  if (g.order() > 8) {
    throw Error(ErrorKind::order_too_large,
                "brute-force oracle supports host order <= 8, got " + std::to_string(g.order()));
  }
  if (h.order() == 0) return true;
  return MinorOracle(h).contains(g);
}

}  // namespace kminor
