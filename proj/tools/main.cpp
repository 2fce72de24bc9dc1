#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "kminor/error.hpp"

using namespace kminor::cli;

int main(int argc, char** argv) {
  CLI::App app{"K6-minor certification toolkit"};
  app.require_subcommand(1);

  GenConfig gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate graphs as graph6 or edge lists");
  gen_cmd->add_option("kind", gen.kind, "named:<name> | cockade | random | catalog-order5")
      ->required();
  gen_cmd->add_option("--order", gen.order, "Vertex count");
  gen_cmd->add_option("--min-degree", gen.min_degree, "Minimum degree");
  gen_cmd->add_option("--size", gen.size_min, "Exact edge count")
      ->each([&](const std::string& s) { gen.size_max = std::stoi(s); });
  gen_cmd->add_option("--size-min", gen.size_min, "Smallest edge count");
  gen_cmd->add_option("--size-max", gen.size_max, "Largest edge count");
  gen_cmd->add_option("--degree2", gen.degree2, "Exact number of degree-2 vertices (catalog)");
  gen_cmd->add_option("--count", gen.count, "Number of graphs")->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--out,-o", gen.out, "Output file (a manifest is written alongside)");
  gen_cmd->add_option("--format", gen.format, "graph6 | edge-list");

  CheckConfig check;
  auto* check_cmd = app.add_subcommand("check", "Search each input graph for a target minor");
  check_cmd->add_option("file", check.input, "Input file")->required();
  check_cmd->add_option("--target", check.target, "kN | k33 | g6:<graph6>");
  check_cmd->add_flag("--blocks", check.blocks, "Search each block separately");
  check_cmd->add_option("--budget", check.budget, "Node budget per graph (0: unlimited)");
  check_cmd->add_option("--cert-dir", check.cert_dir, "Directory for certificate files");
  check_cmd->add_flag("--deterministic,!--parallel-search", check.deterministic,
                      "Sequential search (default)");
  check_cmd->add_option("--format", check.format, "auto | graph6 | edge-list");
  check_cmd->add_option("--workers", check.workers, "Worker threads (default: KMINOR_WORKERS)");

  VerifyConfig verify;
  auto* verify_cmd = app.add_subcommand("verify", "Certify a sampled corpus or the order-26 example");
  verify_cmd->add_option("--order", verify.order, "Vertex count (12, or <= 11 for small corpora)");
  verify_cmd->add_option("--min-degree", verify.min_degree, "Minimum degree");
  verify_cmd->add_option("--size-min", verify.size_min, "Smallest edge count");
  verify_cmd->add_option("--size-max", verify.size_max, "Largest edge count");
  verify_cmd->add_option("--count", verify.count, "Corpus size")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--seed", verify.seed, "Random seed");
  verify_cmd->add_option("--lemma", verify.lemma, "Order of the lemma corpus (10 or 11)")
      ->check(CLI::IsMember({10, 11}));
  verify_cmd->add_flag("--jorgensen", verify.jorgensen,
                       "Minimum degree 6 at orders 7..11 (--count each), or at --order");
  verify_cmd->add_flag("--order26-example", verify.order26, "Check the order-26 example");
  verify_cmd->add_option("--cert-dir", verify.cert_dir, "Directory for certificate files");
  verify_cmd->add_option("--trace-dir", verify.trace_dir, "Directory for case traces");
  verify_cmd->add_option("--quarantine", verify.quarantine, "Directory for failing instances");
  verify_cmd->add_option("--workers", verify.workers, "Worker threads (default: KMINOR_WORKERS)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*gen_cmd) return run_gen(gen, std::cout);
    if (*check_cmd) return run_check(check, std::cout);
    return run_verify(verify, std::cout);
  } catch (const kminor::Error& e) {
    std::cerr << "kminor: " << e.what() << '\n';
    return e.kind() == kminor::ErrorKind::internal_failure ? failure : usage;
  }
}
