#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace kminor::cli {

enum ExitCode : int { ok = 0, failure = 1, usage = 2, budget = 3 };

struct GenConfig {
  std::string kind;
  int order = 12;
  int min_degree = 0;
  std::optional<int> size_min;
  std::optional<int> size_max;
  std::optional<int> degree2;
  int count = 1;
  std::uint64_t seed = 0;
  std::string out;  // empty: stdout, no manifest
  std::string format = "graph6";
};

struct CheckConfig {
  std::string input;
  std::string target = "k6";
  bool blocks = false;
  std::uint64_t budget = 0;
  std::string cert_dir;
  bool deterministic = true;
  std::string format = "auto";
  int workers = 0;
};

struct VerifyConfig {
  std::optional<int> order;
  std::optional<int> min_degree;
  std::optional<int> size_min;
  std::optional<int> size_max;
  int count = 1000;
  std::uint64_t seed = 0;
  std::optional<int> lemma;
  bool jorgensen = false;
  bool order26 = false;
  std::string cert_dir;
  std::string trace_dir;
  std::string quarantine = "quarantine";
  int workers = 0;
};

int run_gen(const GenConfig& config, std::ostream& out);
int run_check(const CheckConfig& config, std::ostream& out);
int run_verify(const VerifyConfig& config, std::ostream& out);

/// Worker count: explicit value, else KMINOR_WORKERS, else hardware threads.
int resolve_workers(int requested);

}  // namespace kminor::cli
