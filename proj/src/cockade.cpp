#include "kminor/cockade.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_map>

#include "kminor/error.hpp"
#include "kminor/graph_io.hpp"
#include "kminor/named_graphs.hpp"
#include "kminor/planarity.hpp"

namespace kminor {

namespace {

bool is_four_connected_triangulation(const Graph& h) {
  return h.order() >= 6 && is_maximal_planar(h) && is_k_connected(h, 4);
}

VertexSet as_set(const std::array<int, 4>& vs, const Graph& g) {
  VertexSet s;
  for (int v : vs) {
    if (v < 0 || v >= g.order()) throw Error(ErrorKind::not_a_k4, "clique vertex out of range");
    s = s.with(v);
  }
  return s;
}

}  // namespace

CockadeTree CockadeTree::k5() {
  CockadeTree t;
  t.kind_ = Kind::k5_leaf;
  t.realized_ = complete(5);
  return t;
}

CockadeTree CockadeTree::cone(const Graph& planar_part) {
  CockadeTree t;
  t.kind_ = Kind::cone_leaf;
  t.planar_ = planar_part;
  t.realized_ = mp1_cone(planar_part);
  return t;
}

Graph mp1_cone(const Graph& h) {
  if (h.order() < 3 || !is_four_connected_triangulation(h)) {
    throw Error(ErrorKind::precondition_violated,
                "cone base must be a 4-connected maximal planar graph");
  }
  return join(complete(1), h);
}

CockadeTree mp1_glue(const CockadeTree& t1, const CockadeTree& t2, const std::array<int, 4>& x,
                     const std::array<int, 4>& y) {
  const VertexSet xs = as_set(x, t1.graph());
  const VertexSet ys = as_set(y, t2.graph());
  if (xs.size() != 4 || !is_clique(t1.graph(), xs) || ys.size() != 4 ||
      !is_clique(t2.graph(), ys)) {
    throw Error(ErrorKind::not_a_k4, "glue vertices must induce K4 on both sides");
  }
  CockadeTree t;
  t.kind_ = CockadeTree::Kind::sum;
  t.left_ = std::make_shared<const CockadeTree>(t1);
  t.right_ = std::make_shared<const CockadeTree>(t2);
  t.x_ = x;
  t.y_ = y;
  t.realized_ = clique_sum(t1.graph(), t2.graph(), x, y);
  return t;
}

Graph realize(const CockadeTree& tree) { return tree.graph(); }

namespace {

// Recursive decomposition over vertex subsets of the input, memoised so that
// failed parts are not re-examined under a different separator.
class Recogniser {
 public:
  explicit Recogniser(const Graph& g) : g_(g) {}

  std::optional<CockadeRecognition> run(VertexSet part) {
    if (auto it = memo_.find(part.bits()); it != memo_.end()) return it->second;
    auto result = attempt(part);
    memo_.emplace(part.bits(), result);
    return result;
  }

 private:
  std::optional<CockadeRecognition> attempt(VertexSet part) {
    const InducedSubgraph sub = induced(g_, part);
    const Graph& g = sub.graph;
    const int n = g.order();
    if (n < 5 || g.size() != 4 * n - 10) return std::nullopt;
    if (n == 5) return CockadeRecognition{CockadeTree::k5(), sub.host_vertex};

    for (int v = 0; v < n; ++v) {
      if (g.degree(v) != n - 1) continue;
      const Graph rest = delete_vertex(g, v);
      if (!is_four_connected_triangulation(rest)) continue;
      std::vector<int> host{sub.host_vertex[v]};
      for (int u = 0; u < n; ++u) {
        if (u != v) host.push_back(sub.host_vertex[u]);
      }
      return CockadeRecognition{CockadeTree::cone(rest), std::move(host)};
    }

    for (int a = 0; a < n; ++a) {
      for (int b : g.neighbors(a)) {
        if (b < a) continue;
        for (int c : g.neighbors(a) & g.neighbors(b)) {
          if (c < b) continue;
          for (int d : g.neighbors(a) & g.neighbors(b) & g.neighbors(c)) {
            if (d < c) continue;
            const VertexSet sep{a, b, c, d};
            const std::vector<VertexSet> comps = components(induced(g, g.vertices() - sep).graph);
            if (comps.size() < 2) continue;
            if (auto found = split(sub, sep)) return found;
          }
        }
      }
    }
    return std::nullopt;
  }

  // Left side: the component holding the smallest non-separator vertex, plus
  // the separator. Right side: everything else plus the separator.
  std::optional<CockadeRecognition> split(const InducedSubgraph& sub, VertexSet sep) {
    const Graph& g = sub.graph;
    const VertexSet outside = g.vertices() - sep;
    const VertexSet first = reach_within(g, outside.first(), outside);
    auto to_host = [&](VertexSet local) {
      VertexSet s;
      for (int v : local) s = s.with(sub.host_vertex[v]);
      return s;
    };
    const VertexSet host_sep = to_host(sep);
    auto left = run(to_host(first | sep));
    if (!left) return std::nullopt;
    auto right = run(to_host(g.vertices() - first));
    if (!right) return std::nullopt;

    std::array<int, 4> x{};
    std::array<int, 4> y{};
    int j = 0;
    for (int h : host_sep) {
      x[j] = position(left->host_vertex, h);
      y[j] = position(right->host_vertex, h);
      ++j;
    }
    CockadeTree tree = mp1_glue(left->tree, right->tree, x, y);
    std::vector<int> host = left->host_vertex;
    host.resize(tree.order(), -1);
    const MappedGraph glued =
        clique_sum_mapped(left->tree.graph(), right->tree.graph(), x, y);
    for (int v = 0; v < right->tree.order(); ++v) host[glued.index_map[v]] = right->host_vertex[v];
    return CockadeRecognition{std::move(tree), std::move(host)};
  }

  static int position(const std::vector<int>& host, int v) {
    return static_cast<int>(std::find(host.begin(), host.end(), v) - host.begin());
  }

  const Graph& g_;
  std::unordered_map<std::uint64_t, std::optional<CockadeRecognition>> memo_;
};

}  // namespace

std::optional<CockadeRecognition> is_mp1_cockade(const Graph& g) {
  const int n = g.order();
  if (n < 5 || g.size() != 4 * n - 10) return std::nullopt;
  auto found = Recogniser(g).run(g.vertices());
  if (found) {
    std::vector<int> perm = found->host_vertex;
    if (permuted(found->tree.graph(), perm) != g) {
      throw Error(ErrorKind::internal_failure, "cockade witness does not realise the input");
    }
  }
  return found;
}

namespace {

std::vector<std::array<int, 4>> four_cliques(const Graph& g) {
  std::vector<std::array<int, 4>> out;
  for (int a = 0; a < g.order(); ++a) {
    for (int b : g.neighbors(a)) {
      if (b < a) continue;
      for (int c : g.neighbors(a) & g.neighbors(b)) {
        if (c < b) continue;
        for (int d : g.neighbors(a) & g.neighbors(b) & g.neighbors(c)) {
          if (d > c) out.push_back({a, b, c, d});
        }
      }
    }
  }
  return out;
}

// Cone bases, keyed by cockade order (base order + 1).
struct Piece {
  int order;
  int bipyramid_cycle;  // 0 for K5, -1 for the icosahedron
};

CockadeTree build(const Piece& p) {
  if (p.bipyramid_cycle == 0) return CockadeTree::k5();
  if (p.bipyramid_cycle < 0) return CockadeTree::cone(icosahedron());
  return CockadeTree::cone(bipyramid(p.bipyramid_cycle));
}

std::vector<Piece> pieces_up_to(int order) {
  std::vector<Piece> out;
  if (order >= 5) out.push_back({5, 0});
  for (int k = 4; k + 3 <= order && k <= 12; ++k) out.push_back({k + 3, k});
  if (order >= 13) out.push_back({13, -1});
  return out;
}

}  // namespace

CockadeTree random_mp1_cockade(std::uint64_t seed, int target_order) {
  if (target_order < 5) throw Error(ErrorKind::unreachable_order, "cockades have order >= 5");
  if (target_order > kMaxOrder) throw Error(ErrorKind::capacity_exceeded, "order exceeds 64");
  std::mt19937_64 rng(seed);
  auto pick = [&](const auto& items) {
    return items[std::uniform_int_distribution<std::size_t>(0, items.size() - 1)(rng)];
  };

  CockadeTree tree = build(pick(pieces_up_to(target_order)));
  while (tree.order() < target_order) {
    // Each glued piece adds its order minus the four shared vertices.
    const CockadeTree piece = build(pick(pieces_up_to(target_order - tree.order() + 4)));
    std::array<int, 4> x = pick(four_cliques(tree.graph()));
    std::array<int, 4> y = pick(four_cliques(piece.graph()));
    std::shuffle(y.begin(), y.end(), rng);
    if (std::uniform_int_distribution<int>(0, 1)(rng) == 0 || piece.order() > tree.order()) {
      tree = mp1_glue(tree, piece, x, y);
    } else {
      tree = mp1_glue(piece, tree, y, x);
    }
  }
  return tree;
}

namespace {

void write(std::ostream& out, const CockadeTree& t) {
  switch (t.kind()) {
    case CockadeTree::Kind::k5_leaf:
      out << "K5";
      return;
    case CockadeTree::Kind::cone_leaf:
      out << "CONE(" << to_graph6(t.planar_part()) << ')';
      return;
    case CockadeTree::Kind::sum: {
      out << "SUM(";
      write(out, t.left());
      out << ',';
      write(out, t.right());
      for (const auto* clique : {&t.left_clique(), &t.right_clique()}) {
        out << ",[";
        for (int j = 0; j < 4; ++j) out << (j ? "," : "") << (*clique)[j];
        out << ']';
      }
      out << ')';
      return;
    }
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  CockadeTree parse_all() {
    CockadeTree t = parse();
    if (pos_ != text_.size()) fail("trailing characters");
    return t;
  }

 private:
  CockadeTree parse() {
    if (accept("K5")) return CockadeTree::k5();
    if (accept("CONE(")) {
      const std::size_t close = text_.find(')', pos_);
      if (close == std::string_view::npos) fail("unterminated CONE");
      const Graph h = from_graph6(text_.substr(pos_, close - pos_));
      pos_ = close + 1;
      return CockadeTree::cone(h);
    }
    if (accept("SUM(")) {
      CockadeTree left = parse();
      expect(',');
      CockadeTree right = parse();
      expect(',');
      const auto x = clique();
      expect(',');
      const auto y = clique();
      expect(')');
      return mp1_glue(left, right, x, y);
    }
    fail("expected K5, CONE or SUM");
  }

  std::array<int, 4> clique() {
    expect('[');
    std::array<int, 4> out{};
    for (int j = 0; j < 4; ++j) {
      if (j) expect(',');
      const std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
      if (start == pos_ || pos_ - start > 3) fail("expected vertex index");
      out[j] = std::stoi(std::string(text_.substr(start, pos_ - start)));
    }
    expect(']');
    return out;
  }

  bool accept(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::parse_error, "cockade text at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_text(const CockadeTree& tree) {
  std::ostringstream out;
  write(out, tree);
  return out.str();
}

CockadeTree cockade_from_text(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == ' ' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  return Parser(text).parse_all();
}

}  // namespace kminor
