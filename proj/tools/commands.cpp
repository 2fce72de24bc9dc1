#include "commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "kminor/cockade.hpp"
#include "kminor/error.hpp"
#include "kminor/graph_io.hpp"
#include "kminor/minor_search.hpp"
#include "kminor/named_graphs.hpp"
#include "kminor/sampling.hpp"
#include "kminor/theorem.hpp"
#include "worker_pool.hpp"

namespace kminor::cli {

namespace fs = std::filesystem;
using nlohmann::json;

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("KMINOR_WORKERS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

std::optional<int> trailing_number(std::string_view name, std::string_view prefix) {
  if (name.substr(0, prefix.size()) != prefix || name.size() == prefix.size()) return std::nullopt;
  int value = 0;
  for (char c : name.substr(prefix.size())) {
    if (c < '0' || c > '9' || value > 1000) return std::nullopt;
    value = value * 10 + (c - '0');
  }
  return value;
}

Graph named_graph(std::string_view name) {
  if (name == "icosahedron") return icosahedron();
  if (name == "octahedron") return octahedron();
  if (name == "petersen") return petersen();
  if (name == "petersen-complement") return petersen_complement();
  if (name == "prism") return prism();
  if (name == "k33") return complete_multipartite({3, 3});
  if (name == "k333") return complete_multipartite({3, 3, 3});
  if (name == "k2223") return complete_multipartite({2, 2, 2, 3});
  if (name == "order26") return order26_example();
  if (name == "cone-icosahedron") return mp1_cone(icosahedron());
  if (auto n = trailing_number(name, "k")) return complete(*n);
  if (auto n = trailing_number(name, "c")) return cycle(*n);
  if (auto n = trailing_number(name, "w")) return wheel(*n);
  if (auto n = trailing_number(name, "bipyramid")) return bipyramid(*n);
  throw Error(ErrorKind::unknown_kind, "unknown named graph '" + std::string(name) + "'");
}

Graph parse_target(const std::string& target) {
  if (target.rfind("g6:", 0) == 0) return from_graph6(target.substr(3));
  if (target == "k33") return complete_multipartite({3, 3});
  if (auto n = trailing_number(target, "k")) return complete(*n);
  throw Error(ErrorKind::unknown_kind, "unknown target '" + target + "' (use kN, k33 or g6:<graph6>)");
}

std::string encode(const Graph& g, const std::string& format) {
  if (format == "graph6") return to_graph6(g) + "\n";
  if (format == "edge-list") return to_edge_list(g);
  throw Error(ErrorKind::unknown_kind, "unknown format '" + format + "'");
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream file(path);
  if (!file || !(file << text)) throw Error(ErrorKind::io_error, "cannot write " + path.string());
}

std::string read_file(const fs::path& path) {
  std::ifstream file(path);
  if (!file) throw Error(ErrorKind::io_error, "cannot read " + path.string());
  std::ostringstream text;
  text << file.rdbuf();
  return text.str();
}

// Writes the certificate and checks that the file reloads to a valid one.
std::string store_certificate(const std::string& dir, const std::string& stem, const Graph& g,
                              const Graph& h, const MinorCertificate& cert) {
  if (dir.empty()) return "-";
  const fs::path path = fs::path(dir) / (stem + ".cert");
  write_file(path, to_text(cert));
  if (!verify_certificate(g, h, certificate_from_text(read_file(path)))) {
    throw Error(ErrorKind::internal_failure, "certificate file " + path.string() + " does not verify");
  }
  return path.string();
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out.empty() ? "-" : out;
}

json trace_json(const CaseTrace& t) {
  return json{{"size_case", std::string(to_string(t.size_case))},
              {"degrees", t.degrees.values},
              {"base_vertex", t.base_vertex},
              {"neighborhood_edges", t.neighborhood_edges},
              {"remainder_edges", t.remainder_edges},
              {"cross_edges", t.cross_edges},
              {"neighborhood_identity", t.neighborhood_identity},
              {"remainder_identity", t.remainder_identity},
              {"branches", t.branches},
              {"resolution", t.resolution},
              {"notes", t.notes}};
}

}  // namespace

int run_gen(const GenConfig& c, std::ostream& out) {
  std::vector<Graph> graphs;
  json manifest{{"kind", c.kind}, {"seed", c.seed}, {"format", c.format}};
  json items = json::array();
  if (c.kind.rfind("named:", 0) == 0) {
    graphs.push_back(named_graph(c.kind.substr(6)));
  } else if (c.kind == "cockade") {
    std::mt19937_64 rng(c.seed);
    manifest["order"] = c.order;
    for (int i = 0; i < c.count; ++i) {
      const CockadeTree tree = random_mp1_cockade(rng(), c.order);
      graphs.push_back(realize(tree));
      items.push_back({{"tree", to_text(tree)}});
    }
  } else if (c.kind == "random") {
    const int lo = c.size_min.value_or(0);
    const int hi = c.size_max.value_or(c.size_min ? *c.size_min : c.order * (c.order - 1) / 2);
    manifest["order"] = c.order;
    manifest["min_degree"] = c.min_degree;
    manifest["size"] = {lo, hi};
    graphs = sample_constrained(c.order, c.min_degree, {lo, hi}, c.seed, c.count);
  } else if (c.kind == "catalog-order5") {
    const int lo = c.size_min.value_or(0);
    const int hi = c.size_max.value_or(10);
    manifest["size"] = {lo, hi};
    manifest["min_degree"] = c.min_degree;
    if (c.degree2) manifest["degree2"] = *c.degree2;
    for (const CatalogEntry& e : enumerate_order5(lo, hi, c.min_degree, c.degree2)) {
      graphs.push_back(e.graph);
      items.push_back({{"name", e.name}, {"planar", e.planar}});
    }
  } else {
    throw Error(ErrorKind::unknown_kind, "unknown generator kind '" + c.kind + "'");
  }

  std::string text;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    text += encode(graphs[i], c.format);
    if (items.size() <= i) items.push_back(json::object());
    items[i]["order"] = graphs[i].order();
    items[i]["size"] = graphs[i].size();
  }
  manifest["count"] = graphs.size();
  manifest["graphs"] = items;
  if (c.out.empty()) {
    out << text;
  } else {
    write_file(c.out, text);
    write_file(c.out + ".manifest.json", manifest.dump(2) + "\n");
    out << "wrote " << graphs.size() << " graph(s) to " << c.out << "\n";
  }
  return ok;
}

int run_check(const CheckConfig& c, std::ostream& out) {
  const std::string text = read_file(c.input);
  GraphFormat format = GraphFormat::graph6;
  if (c.format == "edge-list") {
    format = GraphFormat::edge_list;
  } else if (c.format == "auto") {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line) && line.find_first_not_of(" \t\r") == std::string::npos) {
    }
    format = detect_format(line);
  } else if (c.format != "graph6") {
    throw Error(ErrorKind::unknown_kind, "unknown format '" + c.format + "'");
  }
  std::istringstream in(text);
  const std::vector<Graph> graphs = read_graphs(in, format);
  const Graph target = parse_target(c.target);
  const bool complete_target = target.size() == target.order() * (target.order() - 1) / 2;
  if (c.blocks && !complete_target) {
    throw Error(ErrorKind::precondition_violated, "--blocks needs a complete target");
  }

  SearchOptions options;
  options.deterministic = c.deterministic;
  options.node_budget = c.budget;
  const std::string stem = fs::path(c.input).stem().string();
  std::vector<SearchResult> results(graphs.size());
  std::vector<std::string> cert_paths(graphs.size(), "-");
  parallel_for(graphs.size(), resolve_workers(c.workers), [&](std::size_t i) {
    results[i] = c.blocks ? find_complete_minor_blockwise(graphs[i], target.order(), options)
                          : find_minor(graphs[i], target, options);
    if (results[i].found()) {
      cert_paths[i] = store_certificate(c.cert_dir, stem + "-" + std::to_string(i), graphs[i],
                                        target, *results[i].certificate);
    }
  });

  std::map<std::string, int> tally;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    std::string verdict = "not-found";
    if (results[i].found()) verdict = "found";
    if (results[i].outcome == SearchOutcome::budget_exhausted) verdict = "budget-exhausted";
    ++tally[verdict];
    out << i << ' ' << to_graph6(graphs[i]) << ' ' << verdict;
    if (c.blocks && !results[i].found()) out << " (block reduction)";
    if (results[i].found()) out << ' ' << cert_paths[i];
    out << '\n';
  }
  out << "summary found=" << tally["found"] << " not-found=" << tally["not-found"]
      << " budget-exhausted=" << tally["budget-exhausted"] << '\n';
  return tally["budget-exhausted"] > 0 ? budget : ok;
}

namespace {

struct InstanceOutcome {
  std::string label;
  std::vector<std::string> branches;
  std::string resolution;
  std::string cert_path = "-";
  std::string failure;
  json trace;
};

void quarantine(const VerifyConfig& c, std::size_t index, const Graph& g, const InstanceOutcome& r) {
  json dump{{"graph6", to_graph6(g)}, {"error", r.failure}, {"trace", r.trace}};
  write_file(fs::path(c.quarantine) / (std::to_string(index) + ".json"), dump.dump(2) + "\n");
}

}  // namespace

int run_verify(const VerifyConfig& c, std::ostream& out) {
  if (c.order26) {
    int passed = 0;
    const Graph g = order26_example();
    out << to_graph6(g) << '\n';
    const auto checks = order26_properties(g);
    for (const PropertyCheck& p : checks) {
      out << p.name << ' ' << (p.passed ? "pass" : "FAIL") << '\n';
      passed += p.passed;
    }
    out << passed << '/' << checks.size() << " property checks pass\n";
    return passed == static_cast<int>(checks.size()) ? ok : failure;
  }

  std::vector<Graph> corpus;
  enum class Mode { main, lemma, small } mode = Mode::main;
  if (c.lemma) {
    mode = Mode::lemma;
    corpus = sample_lemma_instances(*c.lemma, c.seed, c.count);
  } else if (c.jorgensen && !c.order) {
    // Every order from 7 to 11, count graphs each.
    mode = Mode::small;
    const int delta = c.min_degree.value_or(6);
    if (delta < 6) {
      throw Error(ErrorKind::infeasible_constraints, "small-order corpora need minimum degree >= 6");
    }
    for (int order = 7; order <= 11; ++order) {
      const int lo = c.size_min.value_or((order * delta + 1) / 2);
      const int hi = c.size_max.value_or(order * (order - 1) / 2);
      for (Graph& g : sample_constrained(order, delta, {lo, hi}, c.seed + order, c.count)) {
        corpus.push_back(std::move(g));
      }
    }
  } else {
    const int order = c.order.value_or(12);
    const int delta = c.min_degree.value_or(6);
    if (c.jorgensen || order != 12) {
      mode = Mode::small;
      if (order > 11 || delta < 6) {
        throw Error(ErrorKind::infeasible_constraints,
                    "small-order corpora need order <= 11 and minimum degree >= 6");
      }
    } else if (delta < 6) {
      throw Error(ErrorKind::infeasible_constraints, "order-12 corpora need minimum degree >= 6");
    }
    const int lo = c.size_min.value_or((order * delta + 1) / 2);
    const int hi = c.size_max.value_or(mode == Mode::main ? lo + 2 : order * (order - 1) / 2);
    corpus = sample_constrained(order, delta, {lo, hi}, c.seed, c.count);
  }

  std::vector<InstanceOutcome> results(corpus.size());
  parallel_for(corpus.size(), resolve_workers(c.workers), [&](std::size_t i) {
    const Graph& g = corpus[i];
    InstanceOutcome& r = results[i];
    const std::string stem = std::to_string(i);
    try {
      MinorCertificate cert;
      if (mode == Mode::main) {
        MainCheck m = check_main(g);
        r.label = to_string(m.trace.size_case);
        r.branches = m.trace.branches;
        r.resolution = m.trace.resolution;
        r.trace = trace_json(m.trace);
        cert = std::move(m.certificate);
      } else if (mode == Mode::lemma) {
        LemmaReport report = *c.lemma == 11 ? lemma_11(g) : lemma_10(g);
        r.label = report.lemma;
        r.resolution = report.method;
        r.trace = json{{"lemma", report.lemma}, {"method", report.method}};
        cert = *report.certificate;
      } else {
        cert = jorgensen_small(g);
        r.label = "order-" + std::to_string(g.order());
        r.resolution = "search";
      }
      r.cert_path = store_certificate(c.cert_dir, stem, g, complete(6), cert);
      if (!c.trace_dir.empty()) {
        write_file(fs::path(c.trace_dir) / (stem + ".json"), r.trace.dump(2) + "\n");
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::internal_failure && e.kind() != ErrorKind::hypothesis_violated) {
        throw;
      }
      r.failure = e.what();
    }
  });

  int certified = 0;
  std::map<std::string, int> branches;
  std::map<std::string, int> resolutions;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const InstanceOutcome& r = results[i];
    if (!r.failure.empty()) {
      quarantine(c, i, corpus[i], r);
      out << i << ' ' << to_graph6(corpus[i]) << " FAILED " << r.failure << '\n';
      continue;
    }
    ++certified;
    for (const auto& b : r.branches) ++branches[b];
    ++resolutions[r.resolution];
    out << i << ' ' << to_graph6(corpus[i]) << ' ' << r.label << ' ' << join(r.branches, ",")
        << ' ' << r.resolution << ' ' << r.cert_path << '\n';
  }
  for (const auto& [name, n] : branches) out << "branch " << name << ' ' << n << '\n';
  for (const auto& [name, n] : resolutions) out << "resolution " << name << ' ' << n << '\n';
  out << certified << '/' << corpus.size() << " certified\n";
  return certified == static_cast<int>(corpus.size()) ? ok : failure;
}

}  // namespace kminor::cli
