#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hfstsp/instancegen.hpp"
#include "hfstsp/model.hpp"

namespace hfstsp {

struct BenchRow {
  std::string instance_id;
  std::string generator;
  int n = 0;
  double alpha = 0.0;
  std::string tour_source;
  std::string solver;
  double tour_cost = 0.0;
  double solution_cost = 0.0;
  double cost_reduction = 0.0;  ///< (tour_cost - solution_cost) / tour_cost
  std::uint64_t triples = 0;
  double triples_per_node = 0.0;  ///< triples / (n + 1)
  std::uint64_t wall_time_ns = 0;
};

struct SuiteConfig {
  std::vector<GenKind> generators = {GenKind::uniform};
  std::vector<int> sizes = {20, 50};
  std::vector<double> alphas = {1.0, 2.0, 3.0};
  int instances_per_cell = 10;
  std::string tour_method = "nn2opt";  ///< nn | nn2opt | mst
  std::vector<std::string> solvers = {"split", "lazy-matrix", "lazy-lists"};
  int timing_repeats = 5;  ///< wall time is the median over this many runs
  std::uint64_t master_seed = 987654321;
  int jobs = 1;
  int two_opt_max_passes = 1'000'000;
};

/// All solvers of a row group disagreed on the optimum; carries the instance
/// seed so the case can be replayed.
class EquivalenceError : public std::runtime_error {
 public:
  EquivalenceError(const std::string& instance_id, std::uint64_t seed,
                   const std::string& detail)
      : std::runtime_error("solver disagreement on instance " + instance_id +
                           " (seed " + std::to_string(seed) + "): " + detail),
        instance_id_(instance_id),
        seed_(seed) {}
  const std::string& instance_id() const { return instance_id_; }
  std::uint64_t seed() const { return seed_; }

 private:
  std::string instance_id_;
  std::uint64_t seed_;
};

/// Runs every configured solver on every generated instance. Instance seeds
/// derive from the master seed plus the instance index, and the rows come
/// back sorted by (instance id, solver name) so worker parallelism never
/// changes the output. Timing covers the solver call only.
std::vector<BenchRow> run_suite(const SuiteConfig& cfg);

enum class Partition {
  by_size,   ///< size classes <=10, 20, 50, 75, 100, 175, 250, 375, 500
  by_alpha,  ///< alpha crossed with size bands <=75, 100-250, >=375
};

struct SummaryRow {
  std::string bucket;
  std::string alpha_label;
  std::string solver;
  int count = 0;
  double cost_reduction_mean = 0.0, cost_reduction_stdev = 0.0;
  double wall_time_mean = 0.0, wall_time_stdev = 0.0;
  double triples_per_node_mean = 0.0, triples_per_node_stdev = 0.0;
};

/// Group means and sample standard deviations (stdev 0 for singleton groups).
std::vector<SummaryRow> aggregate(const std::vector<BenchRow>& rows,
                                  Partition partition);

/// Fixed header order; floats with 9 significant digits.
void write_csv(const std::vector<BenchRow>& rows, std::ostream& out);
std::vector<BenchRow> read_csv(std::istream& in);
void write_summary_csv(const std::vector<SummaryRow>& rows, std::ostream& out);

/// JSON config with the same field names as SuiteConfig; all keys optional.
SuiteConfig config_from_json(const std::string& text);

}  // namespace hfstsp
