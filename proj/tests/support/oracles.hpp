#pragma once

// Deliberately naive reference implementations for cross-checking the
// library. Nothing here calls the code under test beyond Graph accessors.

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <vector>

#include "kminor/certificate.hpp"
#include "kminor/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix_of(const kminor::Graph& g) {
  Matrix m(g.order(), std::vector<bool>(g.order(), false));
  for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = true;
  return m;
}

inline int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<int>(r);
}

// Branch-set check written against an adjacency matrix and plain vectors.
inline bool minor_witness_ok(const kminor::Graph& g, const kminor::Graph& h,
                             const kminor::MinorCertificate& cert) {
  const Matrix a = matrix_of(g);
  const int n = g.order();
  if (static_cast<int>(cert.branch_sets.size()) != h.order()) return false;
  std::vector<int> owner(n, -1);
  for (int i = 0; i < h.order(); ++i) {
    std::vector<int> members;
    for (int v = 0; v < 64; ++v) {
      if ((cert.branch_sets[i].bits() >> v) & 1U) members.push_back(v);
    }
    if (members.empty()) return false;
    for (int v : members) {
      if (v >= n || owner[v] != -1) return false;
      owner[v] = i;
    }
    std::vector<bool> seen(n, false);
    std::queue<int> q;
    q.push(members[0]);
    seen[members[0]] = true;
    int reached = 0;
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      ++reached;
      for (int y = 0; y < n; ++y) {
        if (a[x][y] && !seen[y] && owner[y] == i) {
          seen[y] = true;
          q.push(y);
        }
      }
    }
    if (reached != static_cast<int>(members.size())) return false;
  }
  for (auto [p, q] : h.edges()) {
    bool joined = false;
    for (int x = 0; x < n && !joined; ++x) {
      for (int y = 0; y < n && !joined; ++y) {
        joined = a[x][y] && owner[x] == p && owner[y] == q;
      }
    }
    if (!joined) return false;
  }
  return true;
}

inline bool isomorphic_by_permutation(const kminor::Graph& g, const kminor::Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  const Matrix a = matrix_of(g);
  const Matrix b = matrix_of(h);
  std::vector<int> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool same = true;
    for (int u = 0; u < g.order() && same; ++u) {
      for (int v = u + 1; v < g.order() && same; ++v) same = a[u][v] == b[p[u]][p[v]];
    }
    if (same) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline int count_classes(const std::vector<kminor::Graph>& graphs) {
  std::vector<kminor::Graph> reps;
  for (const auto& g : graphs) {
    bool fresh = true;
    for (const auto& r : reps) {
      if (isomorphic_by_permutation(g, r)) {
        fresh = false;
        break;
      }
    }
    if (fresh) reps.push_back(g);
  }
  return static_cast<int>(reps.size());
}

// Every labelled graph on n vertices (n <= 6).
inline std::vector<kminor::Graph> all_labelled(int n) {
  std::vector<kminor::Edge> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::vector<kminor::Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<kminor::Edge> chosen;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((mask >> i) & 1U) chosen.push_back(pairs[i]);
    }
    out.push_back(kminor::Graph::from_edges(n, chosen));
  }
  return out;
}

inline kminor::Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<kminor::Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return kminor::Graph::from_edges(n, edges);
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline int degree_sum(const kminor::Graph& g) {
  int s = 0;
  for (int v = 0; v < g.order(); ++v) s += g.degree(v);
  return s;
}

}  // namespace oracle
