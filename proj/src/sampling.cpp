#include "kminor/sampling.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <iterator>
#include <numeric>
#include <string>

#include "kminor/error.hpp"

namespace kminor {

namespace {

// Mutable adjacency used only while generating.
class Builder {
 public:
  explicit Builder(int n) : n_(n), rows_(n, 0) {}

  bool has(int u, int v) const { return (rows_[u] >> v) & 1U; }
  int degree(int v) const { return std::popcount(rows_[v]); }
  void add(int u, int v) {
    rows_[u] |= std::uint64_t{1} << v;
    rows_[v] |= std::uint64_t{1} << u;
  }
  void remove(int u, int v) {
    rows_[u] &= ~(std::uint64_t{1} << v);
    rows_[v] &= ~(std::uint64_t{1} << u);
  }
  std::vector<int> neighbors(int v) const { return VertexSet(rows_[v]).to_vector(); }

  Graph graph() const {
    std::vector<Edge> edges;
    for (int u = 0; u < n_; ++u) {
      for (int v : VertexSet(rows_[u])) {
        if (u < v) edges.emplace_back(u, v);
      }
    }
    return Graph::from_edges(n_, edges);
  }

 private:
  int n_;
  std::vector<std::uint64_t> rows_;
};

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  return pairs;
}

// Moves edges x--y onto deficient vertices as v--y until every degree
// reaches the bound. Returns false if stuck.
bool repair(std::mt19937_64& rng, Builder& b, int n, int min_degree) {
  for (int round = 0; round < 50 * n * n; ++round) {
    std::vector<int> low;
    std::vector<int> high;
    for (int v = 0; v < n; ++v) {
      if (b.degree(v) < min_degree) low.push_back(v);
      if (b.degree(v) > min_degree) high.push_back(v);
    }
    if (low.empty()) return true;
    if (high.empty()) return false;
    const int v = low[uniform(rng, 0, static_cast<int>(low.size()) - 1)];
    const int x = high[uniform(rng, 0, static_cast<int>(high.size()) - 1)];
    std::vector<int> options;
    for (int y : b.neighbors(x)) {
      if (y != v && !b.has(v, y)) options.push_back(y);
    }
    if (options.empty()) continue;
    const int y = options[uniform(rng, 0, static_cast<int>(options.size()) - 1)];
    b.remove(x, y);
    b.add(v, y);
  }
  return false;
}

// Size-preserving moves that never push a degree below the bound.
void mix(std::mt19937_64& rng, Builder& b, int n, int min_degree, int steps) {
  for (int s = 0; s < steps; ++s) {
    const int a = uniform(rng, 0, n - 1);
    const auto na = b.neighbors(a);
    if (na.empty()) continue;
    const int c = na[uniform(rng, 0, static_cast<int>(na.size()) - 1)];
    if (uniform(rng, 0, 1) == 0) {
      // Double edge swap a-c, d-e  ->  a-d, c-e.
      const int d = uniform(rng, 0, n - 1);
      const auto nd = b.neighbors(d);
      if (nd.empty()) continue;
      const int e = nd[uniform(rng, 0, static_cast<int>(nd.size()) - 1)];
      if (d == a || d == c || e == a || e == c || b.has(a, d) || b.has(c, e)) continue;
      b.remove(a, c);
      b.remove(d, e);
      b.add(a, d);
      b.add(c, e);
    } else {
      // Move the edge a-c to a random non-edge.
      if (b.degree(a) <= min_degree || b.degree(c) <= min_degree) continue;
      const int u = uniform(rng, 0, n - 1);
      const int v = uniform(rng, 0, n - 1);
      if (u == v || b.has(u, v)) continue;
      b.remove(a, c);
      b.add(u, v);
    }
  }
}

}  // namespace

std::vector<Graph> sample_constrained(int order, int min_degree, SizeRange sizes,
                                      std::uint64_t seed, int count) {
  if (order < 1 || order > kMaxOrder) {
    throw Error(ErrorKind::parameter_out_of_range, "sample order must be in 1..64");
  }
  if (count < 0) throw Error(ErrorKind::parameter_out_of_range, "negative sample count");
  const int pairs = order * (order - 1) / 2;
  const int lo = std::max(sizes.min, (std::max(min_degree, 0) * order + 1) / 2);
  const int hi = std::min(sizes.max, pairs);
  if (min_degree > order - 1 || lo > hi) {
    throw Error(ErrorKind::infeasible_constraints,
                "no graph of order " + std::to_string(order) + " has minimum degree " +
                    std::to_string(min_degree) + " and size in [" + std::to_string(sizes.min) +
                    ", " + std::to_string(sizes.max) + "]");
  }

  std::mt19937_64 rng(seed);
  const std::vector<Edge> all = all_pairs(order);
  std::vector<Graph> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    const int m = uniform(rng, lo, hi);
    std::vector<Edge> chosen;
    std::sample(all.begin(), all.end(), std::back_inserter(chosen), m, rng);
    std::shuffle(chosen.begin(), chosen.end(), rng);
    Builder b(order);
    for (auto [u, v] : chosen) b.add(u, v);
    if (!repair(rng, b, order, min_degree)) continue;
    mix(rng, b, order, min_degree, 20 * m);
    Graph g = b.graph();
    if (g.size() != m || (order > 0 && kminor::min_degree(g) < min_degree)) {
      throw Error(ErrorKind::internal_failure, "sampler emitted a graph outside its constraints");
    }
    out.push_back(std::move(g));
  }
  return out;
}

Graph random_maximal_planar(std::mt19937_64& rng, int order) {
  if (order < 3) throw Error(ErrorKind::order_too_small, "triangulations need order >= 3");
  if (order > kMaxOrder) throw Error(ErrorKind::capacity_exceeded, "order exceeds 64");
  Builder b(order);
  b.add(0, 1);
  b.add(1, 2);
  b.add(0, 2);
  // Both sides of the initial triangle are faces.
  std::vector<std::array<int, 3>> faces{{0, 1, 2}, {0, 1, 2}};
  for (int x = 3; x < order; ++x) {
    const std::size_t f = uniform(rng, 0, static_cast<int>(faces.size()) - 1);
    const auto [a, c, d] = faces[f];
    b.add(x, a);
    b.add(x, c);
    b.add(x, d);
    faces[f] = {a, c, x};
    faces.push_back({c, d, x});
    faces.push_back({d, a, x});
  }
  if (order < 5) return b.graph();

  auto shares = [](const std::array<int, 3>& f, int u, int v) {
    return std::count(f.begin(), f.end(), u) + std::count(f.begin(), f.end(), v) == 2;
  };
  auto third = [](const std::array<int, 3>& f, int u, int v) {
    for (int w : f) {
      if (w != u && w != v) return w;
    }
    return -1;
  };
  const int flips = 10 * order;
  for (int s = 0; s < flips; ++s) {
    const int u = uniform(rng, 0, order - 1);
    const auto nu = b.neighbors(u);
    const int v = nu[uniform(rng, 0, static_cast<int>(nu.size()) - 1)];
    if (b.degree(u) <= 3 || b.degree(v) <= 3) continue;
    std::vector<std::size_t> around;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (shares(faces[f], u, v)) around.push_back(f);
    }
    if (around.size() != 2) continue;
    const int c = third(faces[around[0]], u, v);
    const int d = third(faces[around[1]], u, v);
    if (c == d || b.has(c, d)) continue;
    b.remove(u, v);
    b.add(c, d);
    faces[around[0]] = {c, d, u};
    faces[around[1]] = {c, d, v};
  }
  return b.graph();
}

Graph shuffle_vertices(std::mt19937_64& rng, const Graph& g) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return permuted(g, perm);
}

}  // namespace kminor
