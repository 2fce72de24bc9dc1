#include "kminor/minor_search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <mutex>
#include <string>
#include <thread>

#include "kminor/error.hpp"
#include "kminor/graph_io.hpp"

namespace kminor {

namespace {

using Clock = std::chrono::steady_clock;
using Bits = std::uint64_t;

constexpr Bits bit(int v) { return Bits{1} << v; }

// Target graph over branch-set labels 0..t-1.
struct Target {
  int t = 0;
  std::array<std::uint8_t, kMaxTargetOrder> adj{};
  // Complete targets: labels are interchangeable, so new parts open in order.
  bool interchangeable = false;
  // Disconnected targets: host vertices may stay outside every branch set.
  bool allow_discard = false;
};

Target target_of(const Graph& h) {
  Target target;
  target.t = h.order();
  for (int i = 0; i < h.order(); ++i) target.adj[i] = static_cast<std::uint8_t>(h.row(i));
  return target;
}

Target complete_target(int t) {
  Target target;
  target.t = t;
  target.interchangeable = true;
  for (int i = 0; i < t; ++i) {
    target.adj[i] = static_cast<std::uint8_t>(((1U << t) - 1) & ~(1U << i));
  }
  return target;
}

struct SharedControl {
  Bits limit = 0;
  std::atomic<Bits> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> exhausted{false};
};

struct SearchState {
  std::array<Bits, kMaxTargetOrder> parts{};
  unsigned opened = 0;  // label mask
  int opened_count = 0;
  int pos = 0;
};

void merge_stats(SearchStats& into, const SearchStats& from) {
  into.nodes += from.nodes;
  into.connectivity_prunes += from.connectivity_prunes;
  into.adjacency_prunes += from.adjacency_prunes;
  into.count_prunes += from.count_prunes;
}

// Partitions the active vertices into t connected, suitably adjacent parts
// (plus an unconstrained discard pile when allowed). Vertices are decided in
// a fixed BFS order; each decision is followed by feasibility pruning over the
// undecided suffix.
class PartitionSearch {
 public:
  PartitionSearch(const Graph& g, VertexSet active, const Target& target, SharedControl& control)
      : g_(g), target_(target), control_(control) {
    build_order(active);
  }

  bool run_from(const SearchState& state) {
    s_ = state;
    return descend();
  }

  /// Explores to `depth` and stores the frontier instead of descending
  /// further. Returns true if a model is completed above the frontier.
  bool collect(int depth, std::vector<SearchState>& out) {
    collect_depth_ = depth;
    collected_ = &out;
    s_ = SearchState{};
    const bool found = descend();
    collected_ = nullptr;
    collect_depth_ = -1;
    return found;
  }

  std::vector<VertexSet> solution() const {
    std::vector<VertexSet> out;
    for (int i = 0; i < target_.t; ++i) out.emplace_back(s_.parts[i]);
    return out;
  }

  const SearchStats& stats() const { return stats_; }
  bool aborted() const { return aborted_; }

 private:
  void build_order(VertexSet active) {
    VertexSet left = active;
    while (!left.empty()) {
      int start = left.first();
      for (int v : left) {
        if (g_.degree(v) > g_.degree(start)) start = v;
      }
      std::vector<int> queue{start};
      left = left.without(start);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        std::vector<int> next = (g_.neighbors(queue[head]) & left).to_vector();
        std::stable_sort(next.begin(), next.end(),
                         [&](int a, int b) { return g_.degree(a) > g_.degree(b); });
        for (int w : next) {
          queue.push_back(w);
          left = left.without(w);
        }
      }
      order_.insert(order_.end(), queue.begin(), queue.end());
    }
    suffix_.assign(order_.size() + 1, 0);
    for (int p = static_cast<int>(order_.size()) - 1; p >= 0; --p) {
      suffix_[p] = suffix_[p + 1] | bit(order_[p]);
    }
  }

  bool tick() {
    ++stats_.nodes;
    if (control_.stop.load(std::memory_order_relaxed)) {
      aborted_ = true;
      return false;
    }
    if (control_.limit != 0 &&
        control_.nodes.fetch_add(1, std::memory_order_relaxed) + 1 > control_.limit) {
      control_.exhausted.store(true, std::memory_order_relaxed);
      aborted_ = true;
      return false;
    }
    return true;
  }

  Bits neighbours(Bits set) const {
    Bits out = 0;
    for (; set != 0; set &= set - 1) out |= g_.row(std::countr_zero(set));
    return out;
  }

  Bits reach(Bits seed, Bits allowed) const {
    Bits seen = seed & (~seed + 1);
    Bits frontier = seen;
    while (frontier != 0) {
      const Bits next = neighbours(frontier) & allowed & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  bool feasible() {
    const Bits undecided = suffix_[s_.pos];
    const int remaining = std::popcount(undecided);
    const int need_new = target_.t - s_.opened_count;
    if (remaining < need_new) {
      ++stats_.count_prunes;
      return false;
    }
    std::array<Bits, kMaxTargetOrder> region{};
    std::array<Bits, kMaxTargetOrder> region_nb{};
    std::array<Bits, kMaxTargetOrder> part_nb{};
    for (unsigned rest = s_.opened; rest != 0; rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      const Bits part = s_.parts[i];
      region[i] = reach(part, part | undecided);
      if ((part & ~region[i]) != 0) {
        ++stats_.connectivity_prunes;
        return false;
      }
      region_nb[i] = neighbours(region[i]);
      part_nb[i] = neighbours(part);
    }
    // Missing adjacencies between opened parts; each needs one endpoint to grow.
    std::array<std::pair<int, int>, kMaxTargetOrder * kMaxTargetOrder / 2> missing{};
    int missing_count = 0;
    for (unsigned rest = s_.opened; rest != 0; rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      for (unsigned others = target_.adj[i]; others != 0; others &= others - 1) {
        const int j = std::countr_zero(others);
        if ((s_.opened >> j) & 1U) {
          if (j < i || (part_nb[i] & s_.parts[j]) != 0) continue;
          if ((region_nb[i] & region[j]) == 0) {
            ++stats_.adjacency_prunes;
            return false;
          }
          missing[missing_count++] = {i, j};
        } else if (((region[i] | region_nb[i]) & undecided) == 0) {
          ++stats_.adjacency_prunes;
          return false;
        }
      }
    }
    if (missing_count > 0) {
      unsigned matched = 0;
      int matching = 0;
      for (int k = 0; k < missing_count; ++k) {
        const unsigned pair = (1U << missing[k].first) | (1U << missing[k].second);
        if ((matched & pair) == 0) {
          matched |= pair;
          ++matching;
        }
      }
      if (remaining < matching + need_new) {
        ++stats_.count_prunes;
        return false;
      }
    }
    return true;
  }

  bool try_descend() {
    if (!feasible()) return false;
    return descend();
  }

  bool descend() {
    if (!tick()) return false;
    if (s_.pos == static_cast<int>(order_.size())) {
      return s_.opened_count == target_.t && feasible();
    }
    if (collected_ != nullptr && s_.pos == collect_depth_) {
      collected_->push_back(s_);
      return false;
    }
    const int v = order_[s_.pos];
    const Bits vbit = bit(v);
    const Bits vrow = g_.row(v);
    ++s_.pos;

    auto join = [&](bool adjacent) {
      for (unsigned rest = s_.opened; rest != 0; rest &= rest - 1) {
        const int i = std::countr_zero(rest);
        if (((s_.parts[i] & vrow) != 0) != adjacent) continue;
        s_.parts[i] |= vbit;
        if (try_descend()) return true;
        s_.parts[i] &= ~vbit;
        if (aborted_) return false;
      }
      return false;
    };
    auto open = [&](int label) {
      s_.parts[label] = vbit;
      s_.opened |= 1U << label;
      ++s_.opened_count;
      if (try_descend()) return true;
      s_.parts[label] = 0;
      s_.opened &= ~(1U << label);
      --s_.opened_count;
      return false;
    };

    if (join(true)) return true;
    if (!aborted_ && s_.opened_count < target_.t) {
      if (target_.interchangeable) {
        if (open(s_.opened_count)) return true;
      } else {
        for (int label = 0; label < target_.t && !aborted_; ++label) {
          if (((s_.opened >> label) & 1U) == 0 && open(label)) return true;
        }
      }
    }
    if (!aborted_ && join(false)) return true;
    if (!aborted_ && target_.allow_discard && try_descend()) return true;
    --s_.pos;
    return false;
  }

  const Graph& g_;
  Target target_;
  SharedControl& control_;
  std::vector<int> order_;
  std::vector<Bits> suffix_;
  SearchState s_;
  SearchStats stats_;
  bool aborted_ = false;
  int collect_depth_ = -1;
  std::vector<SearchState>* collected_ = nullptr;
};

int resolve_workers(const SearchOptions& options) {
  if (options.deterministic) return 1;
  if (options.workers > 0) return options.workers;
  return std::max(1U, std::thread::hardware_concurrency());
}

// Runs one partition search, fanning out over a shallow frontier in
// non-deterministic mode. First certificate found wins.
std::optional<std::vector<VertexSet>> run_partition(const Graph& g, VertexSet active,
                                                    const Target& target,
                                                    const SearchOptions& options,
                                                    SharedControl& control, SearchStats& stats) {
  const int workers = resolve_workers(options);
  if (workers <= 1) {
    PartitionSearch search(g, active, target, control);
    const bool found = search.run_from(SearchState{});
    merge_stats(stats, search.stats());
    if (found) return search.solution();
    return std::nullopt;
  }

  std::vector<SearchState> frontier;
  PartitionSearch seed(g, active, target, control);
  if (seed.collect(std::min(active.size(), 6), frontier)) {
    merge_stats(stats, seed.stats());
    return seed.solution();
  }
  merge_stats(stats, seed.stats());

  std::atomic<std::size_t> next{0};
  std::mutex mutex;
  std::optional<std::vector<VertexSet>> winner;
  std::vector<SearchStats> per_worker(workers);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      while (!control.stop.load() && !control.exhausted.load()) {
        const std::size_t k = next.fetch_add(1);
        if (k >= frontier.size()) break;
        PartitionSearch search(g, active, target, control);
        const bool found = search.run_from(frontier[k]);
        merge_stats(per_worker[w], search.stats());
        if (found) {
          std::lock_guard lock(mutex);
          if (!winner) winner = search.solution();
          control.stop.store(true);
        }
      }
    });
  }
  for (auto& thread : pool) thread.join();
  for (const auto& s : per_worker) merge_stats(stats, s);
  return winner;
}

std::optional<VertexSet> find_clique(const Graph& g, int size) {
  struct Finder {
    const Graph& g;
    bool extend(VertexSet chosen, Bits candidates, int need, VertexSet& out) const {
      if (need == 0) {
        out = chosen;
        return true;
      }
      while (std::popcount(candidates) >= need) {
        const int v = std::countr_zero(candidates);
        candidates &= candidates - 1;
        if (extend(chosen.with(v), candidates & g.row(v), need - 1, out)) return true;
      }
      return false;
    }
  };
  VertexSet out;
  if (Finder{g}.extend(VertexSet{}, g.vertices().bits(), size, out)) return out;
  return std::nullopt;
}

// Graph under reduction with, for every current vertex, the original vertices
// it stands for.
struct Reduced {
  Graph graph;
  std::vector<VertexSet> origin;
  std::vector<VertexSet> fixed;
  int t = 0;

  void remap(const MappedGraph& mapped) {
    std::vector<VertexSet> next(mapped.graph.order());
    for (std::size_t v = 0; v < mapped.index_map.size(); ++v) {
      if (mapped.index_map[v] >= 0) next[mapped.index_map[v]] |= origin[v];
    }
    graph = mapped.graph;
    origin = std::move(next);
  }

  VertexSet expand(VertexSet local) const {
    VertexSet out;
    for (int v : local) out |= origin[v];
    return out;
  }
};

Reduced start_reduction(const Graph& g, int t) {
  Reduced r{g, {}, {}, t};
  for (int v = 0; v < g.order(); ++v) r.origin.push_back(VertexSet::single(v));
  return r;
}

// Safe K_t reductions:
//  - a universal vertex c: G has K_t iff G - c has K_{t-1};
//  - a simplicial vertex of degree < t-1 lies in no minimal model; degree
//    >= t-1 gives a K_t subgraph outright;
//  - for t >= 4, a degree-2 vertex with non-adjacent neighbours can be
//    contracted into either neighbour.
// Returns branch sets (original indices) if a model appears during reduction.
std::optional<std::vector<VertexSet>> reduce(Reduced& r) {
  bool changed = true;
  while (changed && r.t > 0 && r.graph.order() >= r.t) {
    changed = false;
    const int n = r.graph.order();
    for (int v = 0; v < n && !changed; ++v) {
      const int deg = r.graph.degree(v);
      const VertexSet around = r.graph.neighbors(v);
      if (r.t >= 2 && deg == n - 1) {
        r.fixed.push_back(r.origin[v]);
        r.remap(delete_vertex_mapped(r.graph, v));
        --r.t;
        changed = true;
      } else if (is_clique(r.graph, around)) {
        if (deg >= r.t - 1) {
          std::vector<VertexSet> sets = r.fixed;
          sets.push_back(r.origin[v]);
          int taken = 0;
          for (int w : around) {
            if (taken++ == r.t - 1) break;
            sets.push_back(r.origin[w]);
          }
          return sets;
        }
        r.remap(delete_vertex_mapped(r.graph, v));
        changed = true;
      } else if (r.t >= 4 && deg == 2) {
        r.remap(contract_edge_mapped(r.graph, v, around.first()));
        changed = true;
      }
    }
  }
  if (r.t == 0) return r.fixed;
  return std::nullopt;
}

// Repeatedly contracts a minimum-degree vertex into the neighbour sharing
// the fewest neighbours with it, looking for a K_t subgraph after each step.
std::optional<std::vector<VertexSet>> greedy_contraction(const Graph& g, int t) {
  Reduced work = start_reduction(g, t);
  while (work.graph.order() >= t) {
    if (auto clique = find_clique(work.graph, t)) {
      std::vector<VertexSet> sets;
      for (int v : *clique) sets.push_back(work.origin[v]);
      return sets;
    }
    if (work.graph.order() == t) break;
    int v = 0;
    for (int u = 1; u < work.graph.order(); ++u) {
      if (work.graph.degree(u) < work.graph.degree(v)) v = u;
    }
    const VertexSet around = work.graph.neighbors(v);
    if (around.empty()) {
      work.remap(delete_vertex_mapped(work.graph, v));
      continue;
    }
    int best = around.first();
    int best_shared = kMaxOrder + 1;
    for (int u : around) {
      const int shared = (work.graph.neighbors(u) & around).size();
      if (shared < best_shared) {
        best = u;
        best_shared = shared;
      }
    }
    work.remap(contract_edge_mapped(work.graph, v, best));
  }
  return std::nullopt;
}

void finish(SearchResult& result, const Graph& g, const Graph& h, Clock::time_point start) {
  result.stats.elapsed = Clock::now() - start;
  if (result.certificate && !verify_certificate(g, h, *result.certificate)) {
    throw Error(ErrorKind::internal_failure,
                "search produced an invalid certificate for host " + to_graph6(g));
  }
}

Graph complete_graph(int t) {
  std::vector<Edge> edges;
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j) edges.emplace_back(i, j);
  }
  return Graph::from_edges(t, edges);
}

SearchOutcome absent_or_exhausted(const SharedControl& control) {
  return control.exhausted.load() ? SearchOutcome::budget_exhausted : SearchOutcome::absent;
}

}  // namespace

SearchResult find_complete_minor(const Graph& g, int t, const SearchOptions& options) {
  if (t < 0 || t > kMaxTargetOrder) {
    throw Error(ErrorKind::order_too_large, "complete targets support t = 0..8");
  }
  const auto start = Clock::now();
  const Graph target = complete_graph(t);
  SearchResult result;
  auto accept = [&](std::vector<VertexSet> sets) {
    result.outcome = SearchOutcome::found;
    result.certificate = MinorCertificate{std::move(sets)};
    finish(result, g, target, start);
    return result;
  };

  Reduced r = start_reduction(g, t);
  if (options.reduce) {
    if (auto sets = reduce(r)) {
      result.stats.reduced_vertices = g.order() - r.graph.order();
      return accept(std::move(*sets));
    }
    result.stats.reduced_vertices = g.order() - r.graph.order();
  }
  if (r.t == 0) return accept(r.fixed);
  if (r.graph.order() < r.t) {
    result.outcome = SearchOutcome::absent;
    finish(result, g, target, start);
    return result;
  }
  auto lift = [&](const std::vector<VertexSet>& local) {
    std::vector<VertexSet> sets = r.fixed;
    for (VertexSet s : local) sets.push_back(r.expand(s));
    return sets;
  };

  if (options.heuristic) {
    if (auto local = greedy_contraction(r.graph, r.t)) {
      result.stats.heuristic_hit = true;
      return accept(lift(*local));
    }
  }

  SharedControl control;
  control.limit = options.node_budget;
  const Target pattern = complete_target(r.t);
  for (VertexSet component : components(r.graph)) {
    if (component.size() < r.t) continue;
    if (auto local = run_partition(r.graph, component, pattern, options, control, result.stats)) {
      return accept(lift(*local));
    }
    if (control.exhausted.load()) break;
  }
  result.outcome = absent_or_exhausted(control);
  finish(result, g, target, start);
  return result;
}

SearchResult find_k6(const Graph& g, const SearchOptions& options) {
  return find_complete_minor(g, 6, options);
}

SearchResult find_minor(const Graph& g, const Graph& h, const SearchOptions& options) {
  const int t = h.order();
  if (t > kMaxTargetOrder) {
    throw Error(ErrorKind::order_too_large, "targets of order above 8 are not supported");
  }
  if (h.size() == t * (t - 1) / 2) return find_complete_minor(g, t, options);

  const auto start = Clock::now();
  SearchResult result;
  if (t > g.order()) {
    result.outcome = SearchOutcome::absent;
    finish(result, g, h, start);
    return result;
  }
  Target pattern = target_of(h);
  SharedControl control;
  control.limit = options.node_budget;
  std::optional<std::vector<VertexSet>> sets;
  if (is_connected(h)) {
    for (VertexSet component : components(g)) {
      if (component.size() < t) continue;
      sets = run_partition(g, component, pattern, options, control, result.stats);
      if (sets || control.exhausted.load()) break;
    }
  } else {
    pattern.allow_discard = true;
    sets = run_partition(g, g.vertices(), pattern, options, control, result.stats);
  }
  if (sets) {
    result.outcome = SearchOutcome::found;
    result.certificate = MinorCertificate{std::move(*sets)};
  } else {
    result.outcome = absent_or_exhausted(control);
  }
  finish(result, g, h, start);
  return result;
}

SearchResult find_complete_minor_blockwise(const Graph& g, int t, const SearchOptions& options) {
  if (t < 3) return find_complete_minor(g, t, options);
  const auto start = Clock::now();
  SearchResult result;
  bool exhausted = false;
  for (VertexSet block : blocks(g)) {
    if (block.size() < t) continue;
    const InducedSubgraph part = induced(g, block);
    SearchResult local = find_complete_minor(part.graph, t, options);
    result.stats.nodes += local.stats.nodes;
    result.stats.connectivity_prunes += local.stats.connectivity_prunes;
    result.stats.adjacency_prunes += local.stats.adjacency_prunes;
    result.stats.count_prunes += local.stats.count_prunes;
    result.stats.reduced_vertices += local.stats.reduced_vertices;
    if (local.found()) {
      std::vector<VertexSet> sets;
      for (VertexSet s : local.certificate->branch_sets) {
        VertexSet host;
        for (int v : s) host = host.with(part.host_vertex[v]);
        sets.push_back(host);
      }
      result.outcome = SearchOutcome::found;
      result.certificate = MinorCertificate{std::move(sets)};
      result.stats.heuristic_hit = local.stats.heuristic_hit;
      finish(result, g, complete_graph(t), start);
      return result;
    }
    exhausted = exhausted || local.outcome == SearchOutcome::budget_exhausted;
  }
  result.outcome = exhausted ? SearchOutcome::budget_exhausted : SearchOutcome::absent;
  finish(result, g, complete_graph(t), start);
  return result;
}

int mader_edge_bound(int t, int n) {
  if (t < 2 || t > 7) {
    throw Error(ErrorKind::parameter_out_of_range, "edge bound holds for 2 <= t <= 7");
  }
  if (n < t - 1) {
    throw Error(ErrorKind::parameter_out_of_range, "edge bound needs n >= t - 1");
  }
  return (t - 2) * n - (t - 1) * (t - 2) / 2;
}

bool size_forces_kt(const Graph& g, int t) { return g.size() > mader_edge_bound(t, g.order()); }

}  // namespace kminor
