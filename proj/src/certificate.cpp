#include "kminor/certificate.hpp"

#include <sstream>

#include "kminor/error.hpp"

namespace kminor {

bool verify_certificate(const Graph& g, const Graph& h, const MinorCertificate& cert) {
  if (static_cast<int>(cert.branch_sets.size()) != h.order()) {
    throw Error(ErrorKind::arity_mismatch, std::to_string(cert.branch_sets.size()) +
                                               " branch sets for a target of order " +
                                               std::to_string(h.order()));
  }
  const std::uint64_t host = g.vertices().bits();
  std::uint64_t used = 0;
  for (VertexSet set : cert.branch_sets) {
    const std::uint64_t bits = set.bits();
    if (bits == 0 || (bits & ~host) != 0 || (bits & used) != 0) return false;
    used |= bits;

    std::uint64_t seen = bits & (~bits + 1);
    std::uint64_t grown = 0;
    while (seen != grown) {
      grown = seen;
      for (std::uint64_t rest = grown; rest != 0; rest &= rest - 1) {
        seen |= g.row(std::countr_zero(rest)) & bits;
      }
    }
    if (seen != bits) return false;
  }
  for (int i = 0; i < h.order(); ++i) {
    std::uint64_t touched = 0;
    for (std::uint64_t rest = cert.branch_sets[i].bits(); rest != 0; rest &= rest - 1) {
      touched |= g.row(std::countr_zero(rest));
    }
    for (int j = i + 1; j < h.order(); ++j) {
      if (h.has_edge(i, j) && (touched & cert.branch_sets[j].bits()) == 0) return false;
    }
  }
  return true;
}

std::string to_text(const MinorCertificate& cert) {
  std::ostringstream out;
  out << cert.branch_sets.size() << '\n';
  for (VertexSet set : cert.branch_sets) {
    bool first = true;
    for (int v : set) {
      out << (first ? "" : " ") << v;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

MinorCertificate certificate_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorKind::parse_error, "missing target order");
  int count = 0;
  try {
    count = std::stoi(line);
  } catch (const std::exception&) {
    throw Error(ErrorKind::parse_error, "target order is not a number: " + line);
  }
  if (count < 0 || count > kMaxOrder) throw Error(ErrorKind::parse_error, "bad target order");
  MinorCertificate cert;
  for (int i = 0; i < count; ++i) {
    if (!std::getline(in, line)) throw Error(ErrorKind::parse_error, "missing branch set line");
    std::istringstream row(line);
    VertexSet set;
    int v = 0;
    while (row >> v) {
      if (v < 0 || v >= kMaxOrder) throw Error(ErrorKind::parse_error, "vertex index out of range");
      set = set.with(v);
    }
    if (!row.eof()) throw Error(ErrorKind::parse_error, "malformed branch set line: " + line);
    cert.branch_sets.push_back(set);
  }
  return cert;
}

MinorCertificate pull_back(const MinorCertificate& cert, std::span<const int> index_map) {
  MinorCertificate out;
  out.branch_sets.resize(cert.branch_sets.size());
  for (std::size_t v = 0; v < index_map.size(); ++v) {
    const int image = index_map[v];
    if (image < 0) continue;
    for (std::size_t i = 0; i < cert.branch_sets.size(); ++i) {
      if (cert.branch_sets[i].contains(image)) {
        out.branch_sets[i] = out.branch_sets[i].with(static_cast<int>(v));
      }
    }
  }
  return out;
}

}  // namespace kminor
