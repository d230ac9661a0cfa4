#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cfclab/graph.hpp"

namespace cfclab {

enum class CheckId {
  observation1,
  theorem1,
  theorem2,
  corollary1,
  corollary2,
  lemma1,
  lemma2,
  lemma3,
  lemma4,
  lemma5,
  lemma6,
  lemma7,
  lemma8,
  lemma9,
  lemma10,
  lemma11,
  example1,
  remark1,
  remark2,
};

const char* to_string(CheckId id);
std::optional<CheckId> parse_check_id(const std::string& name);
std::vector<CheckId> all_check_ids();

struct HarnessBounds {
  int max_n_graphs = 6;  // connected-graph corpus: n = 2..max_n_graphs
  int max_n_trees = 10;  // tree corpus: n = 2..max_n_trees
};

struct CheckSpec {
  CheckId id{};
  HarnessBounds bounds{};
  std::uint64_t seed = 1;
};

/// One instance a check evaluates: the graph under test, an optional second
/// graph (subtree pairs), a descriptive tag and two small parameters.
struct Instance {
  Graph graph;
  std::optional<Graph> aux;
  std::string tag;
  int a = 0;
  int b = 0;
};

struct Counterexample {
  Instance instance;
  std::string details;
};

struct CheckReport {
  CheckId id{};
  long long instances = 0;
  bool passed = false;
  std::optional<Counterexample> counterexample;
  double wall_ms = 0.0;
};

struct Report {
  HarnessBounds bounds;
  std::uint64_t seed = 1;
  int threads = 1;
  std::vector<CheckReport> checks;
  bool all_passed = true;
  long long memo_spot_samples = 0;
  long long memo_spot_agreed = 0;
  double wall_ms = 0.0;
};

/// Shared corpora and value caches for a harness run. cfc and alpha values
/// are memoized by canonical form; the spot check re-solves a seeded sample
/// and compares.
class Corpus {
 public:
  explicit Corpus(HarnessBounds bounds);

  const std::vector<Graph>& connected_graphs();
  const std::vector<Graph>& trees();

  int cfc(const Graph& g);
  int alpha(const Graph& g);

  /// Recomputes `fraction` of the memoized cfc values; returns (sampled, agreed).
  std::pair<long long, long long> spot_check(std::uint64_t seed, double fraction = 0.05);

  const HarnessBounds& bounds() const { return bounds_; }

 private:
  HarnessBounds bounds_;
  std::mutex mu_;
  bool graphs_ready_ = false, trees_ready_ = false;
  std::vector<Graph> graphs_, trees_;
  std::unordered_map<std::string, std::pair<int, Graph>> cfc_memo_;
  std::unordered_map<std::string, int> alpha_memo_;
};

/// Evaluates one instance of a check; details receives the computed values
/// on failure. This is also the re-check entry point for counterexamples.
bool evaluate_instance(CheckId id, const Instance& instance, Corpus& corpus,
                       std::string* details);

CheckReport run_check_with(Corpus& corpus, const CheckSpec& spec, int threads = 1);
Report run_check(const CheckSpec& spec, int threads = 1);
Report run_all(const HarnessBounds& bounds, std::uint64_t seed, int threads = 1);

std::string report_to_json(const Report& report);
std::string report_to_csv(const Report& report);
std::string report_to_text(const Report& report);

}  // namespace cfclab
