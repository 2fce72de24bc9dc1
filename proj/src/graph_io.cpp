#include "kminor/graph_io.hpp"

#include <cctype>
#include <istream>
#include <sstream>

#include "kminor/error.hpp"

namespace kminor {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + 63));
    out.push_back(static_cast<char>((n & 0x3f) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  text = trim(text);
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  if (text.empty()) throw Error(ErrorKind::parse_error, "empty graph6 string");
  for (char c : text) {
    if (c < 63 || c > 126) throw Error(ErrorKind::parse_error, "byte outside graph6 range");
  }
  std::size_t pos = 0;
  int n = 0;
  if (text[0] != '~') {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == '~') {
      throw Error(ErrorKind::parse_error, "graph6 order field too large or truncated");
    }
    n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
    pos = 4;
  }
  if (n > kMaxOrder) throw Error(ErrorKind::capacity_exceeded, "graph6 order exceeds 64");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw Error(ErrorKind::parse_error, "graph6 body has " + std::to_string(text.size() - pos) +
                                            " bytes, expected " + std::to_string(bytes));
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = text.back() - 63;
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0) {
      throw Error(ErrorKind::parse_error, "graph6 padding bits must be zero");
    }
  }
  return Graph::from_edges(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

namespace {

Graph read_edge_block(std::istream& in) {
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m)) throw Error(ErrorKind::parse_error, "expected header 'n m'");
  if (n < 0 || m < 0) throw Error(ErrorKind::parse_error, "negative order or size");
  if (n > kMaxOrder) throw Error(ErrorKind::capacity_exceeded, "edge-list order exceeds 64");
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) {
      throw Error(ErrorKind::parse_error, "expected " + std::to_string(m) + " edge lines");
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorKind::index_out_of_range, "edge endpoint outside 0..n-1");
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

}  // namespace

Graph from_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  Graph g = read_edge_block(in);
  std::string rest;
  if (in >> rest) throw Error(ErrorKind::parse_error, "trailing content after edge list");
  return g;
}

GraphFormat detect_format(std::string_view first_line) {
  first_line = trim(first_line);
  bool numeric = !first_line.empty();
  for (char c : first_line) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && !std::isspace(static_cast<unsigned char>(c))) {
      numeric = false;
    }
  }
  return numeric ? GraphFormat::edge_list : GraphFormat::graph6;
}

std::vector<Graph> read_graphs(std::istream& in, GraphFormat format) {
  std::vector<Graph> out;
  if (format == GraphFormat::graph6) {
    std::string line;
    while (std::getline(in, line)) {
      if (trim(line).empty()) continue;
      out.push_back(from_graph6(line));
    }
    return out;
  }
  while (true) {
    in >> std::ws;
    if (in.peek() == std::char_traits<char>::eof()) break;
    out.push_back(read_edge_block(in));
  }
  return out;
}

}  // namespace kminor
