// Acceptance suite: end-to-end checks of solver equivalence, pruning
// soundness, and the statistical behavior of the lazy algorithms. Prints one
// PASS/FAIL line per criterion; the exit code is the number of failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hfstsp/bench.hpp"
#include "hfstsp/instancegen.hpp"
#include "hfstsp/model.hpp"
#include "hfstsp/oracle.hpp"
#include "hfstsp/split.hpp"
#include "hfstsp/tour.hpp"

using namespace hfstsp;

namespace {

struct Criterion {
  int id = 0;
  std::string name;
  bool pass = true;
  std::string detail;
};

std::vector<Criterion> results;

void report(int id, const std::string& name, bool pass,
            const std::string& detail) {
  results.push_back({id, name, pass, detail});
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

double mean_of(const std::vector<double>& xs) {
  return std::accumulate(xs.begin(), xs.end(), 0.0) / double(xs.size());
}

double median_of(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t m = xs.size() / 2;
  return xs.size() % 2 ? xs[m] : 0.5 * (xs[m - 1] + xs[m]);
}

const GenKind kAllKinds[] = {GenKind::uniform, GenKind::one_center,
                             GenKind::two_center};

bool criterion8_pass = false;
std::string criterion8_detail;

// Criteria 1 and 8 share one sweep: every solver must match the exhaustive
// oracle, and every output must be structurally valid.
void criterion_1_and_8() {
  const int sizes[] = {5, 6, 7, 8, 9, 10, 11, 12};
  const double alphas[] = {1.0, 2.0, 3.0};
  const int per_cell = 1000;

  long instances = 0;
  long cost_mismatches = 0;
  long invalid_solutions = 0;
  long triple_count_errors = 0;
  std::string first_bad;

  std::uint64_t seed = 10'000'000;
  for (GenKind kind : kAllKinds) {
    for (double alpha : alphas) {
      for (int n : sizes) {
        for (int rep = 0; rep < per_cell; ++rep, ++seed) {
          const auto inst = generate({kind, n, alpha, seed});
          const auto cm = build_cost_model(inst);
          const auto h = nearest_neighbor(inst, cm);
          ++instances;

          const SolveResult runs[] = {split_algorithm(h, cm),
                                      split_lazy(h, cm, GraphRepr::matrix),
                                      split_lazy(h, cm, GraphRepr::lists)};
          const auto ref = exhaustive_hfstsp(h, cm);

          if (runs[0].stats.triples_considered != max_triples(n))
            ++triple_count_errors;

          for (const auto& [sol, stats] : runs) {
            if (!nearly_equal(sol.total_time, ref.total_time)) {
              ++cost_mismatches;
              if (first_bad.empty())
                first_bad = stats.solver_name + " vs oracle on seed " +
                            std::to_string(seed);
            }
            std::string why;
            if (!validate_respects(sol, h, &why) ||
                !nearly_equal(sol.total_time, solution_time(sol, cm))) {
              ++invalid_solutions;
              if (first_bad.empty())
                first_bad = stats.solver_name + " invalid on seed " +
                            std::to_string(seed) + ": " + why;
            }
          }
          std::string why;
          if (!validate_respects(ref, h, &why)) ++invalid_solutions;
        }
      }
    }
  }

  report(1, "oracle equivalence",
         cost_mismatches == 0,
         std::to_string(instances) + " instances x 3 solvers vs exhaustive, " +
             std::to_string(cost_mismatches) + " cost mismatches" +
             (first_bad.empty() ? "" : " (first: " + first_bad + ")"));
  criterion8_pass = invalid_solutions == 0 && triple_count_errors == 0;
  criterion8_detail = std::to_string(invalid_solutions) +
                      " invalid solutions, " +
                      std::to_string(triple_count_errors) +
                      " triple-count deviations from C(n+2,3)";
}

void criterion_2() {
  int bad = 0;
  std::uint64_t seed = 20'000'000;
  for (int rep = 0; rep < 50; ++rep, ++seed) {
    const auto inst =
        generate({kAllKinds[rep % 3], 5, double(1 + rep % 3), seed});
    const auto cm = build_cost_model(inst);
    const auto best = exhaustive_fstsp(inst, cm);

    double best_split = std::numeric_limits<double>::infinity();
    std::vector<int> perm{1, 2, 3, 4, 5};
    do {
      Cycle h;
      h.order.push_back(0);
      h.order.insert(h.order.end(), perm.begin(), perm.end());
      h.order.push_back(6);
      best_split =
          std::min(best_split, split_algorithm(h, cm).solution.total_time);
    } while (std::next_permutation(perm.begin(), perm.end()));

    if (!nearly_equal(best.total_time, best_split)) ++bad;
  }
  report(2, "FSTSP optimum = min over all orderings", bad == 0,
         "50 n=5 instances, 120 orderings each, " + std::to_string(bad) +
             " mismatches");
}

void criterion_3() {
  long skipped_total = 0;
  long unjustified = 0;
  std::uint64_t seed = 30'000'000;
  for (int rep = 0; rep < 200; ++rep, ++seed) {
    const int n = 4 + rep % 7;  // 4..10
    const auto inst =
        generate({kAllKinds[rep % 3], n, double(1 + rep % 3), seed});
    const auto cm = build_cost_model(inst);
    const auto h = nearest_neighbor(inst, cm);

    TripleLog lazy_log;
    split_lazy(h, cm, GraphRepr::matrix, &lazy_log);
    std::set<std::array<int, 3>> evaluated(lazy_log.evaluated.begin(),
                                           lazy_log.evaluated.end());

    for (int i = 0; i <= n - 1; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n + 1; ++k) {
          if (evaluated.count({i, j, k})) continue;
          ++skipped_total;
          bool justified = false;
          for (const auto& t : lazy_log.evaluated) {
            if (t[1] != j) continue;
            if (is_fast(t[0], t[1], t[2], h, cm) &&
                dominates(t[0], t[1], t[2], i, j, k, h, cm)) {
              justified = true;
              break;
            }
          }
          if (!justified) ++unjustified;
        }
  }
  report(3, "lazy pruning soundness", unjustified == 0,
         std::to_string(skipped_total) + " skipped triples over 200 instances, " +
             std::to_string(unjustified) + " without a dominating fast triple");
}

void criterion_4() {
  SuiteConfig cfg;
  cfg.generators = {GenKind::uniform};
  cfg.sizes = {50, 100, 250, 500};
  cfg.alphas = {1.0, 2.0, 3.0};
  cfg.instances_per_cell = 10;  // 30 instances per size
  cfg.tour_method = "nn2opt";
  cfg.solvers = {"lazy-lists"};
  cfg.timing_repeats = 1;
  cfg.master_seed = 40'000'000;
  const auto rows = run_suite(cfg);

  std::map<int, std::vector<double>> tpn;
  for (const auto& r : rows) tpn[r.n].push_back(r.triples_per_node);

  bool pass = true;
  std::string detail;
  for (const auto& [n, xs] : tpn) {
    const double m = mean_of(xs);
    detail += "n=" + std::to_string(n) + ": " + fmt(m) + "  ";
    if (m > 8.0) pass = false;
  }
  const double ratio = mean_of(tpn[500]) / mean_of(tpn[50]);
  detail += "ratio 500/50 = " + fmt(ratio);
  if (ratio < 0.5 || ratio > 2.0) pass = false;
  report(4, "triples/(n+1) stays linear", pass, detail);
}

void criterion_5() {
  SuiteConfig cfg;
  cfg.generators = {GenKind::uniform};
  cfg.sizes = {100, 175, 250};
  cfg.alphas = {1.0, 3.0};
  cfg.instances_per_cell = 10;
  cfg.tour_method = "nn2opt";
  cfg.solvers = {"lazy-lists"};
  cfg.timing_repeats = 1;
  cfg.master_seed = 50'000'000;
  const auto rows = run_suite(cfg);

  std::vector<double> slow, fast;
  for (const auto& r : rows)
    (r.alpha == 1.0 ? slow : fast).push_back(r.triples_per_node);
  const double m1 = mean_of(slow), m3 = mean_of(fast);
  report(5, "slow drones consider more triples", m1 >= 2.0 * m3,
         "mean triples/(n+1): alpha=1 " + fmt(m1) + " vs alpha=3 " + fmt(m3) +
             " (need factor >= 2)");
}

void criterion_6() {
  SuiteConfig cfg;
  cfg.generators = {GenKind::uniform};
  cfg.sizes = {20, 50, 75, 100};
  cfg.alphas = {2.0, 3.0};
  cfg.instances_per_cell = 8;
  cfg.tour_method = "nn2opt";
  cfg.solvers = {"lazy-lists"};
  cfg.timing_repeats = 1;
  cfg.master_seed = 60'000'000;
  const auto rows = run_suite(cfg);

  std::vector<double> reds;
  for (const auto& r : rows) reds.push_back(r.cost_reduction);
  const double m = mean_of(reds);
  report(6, "cost reduction in band", m >= 0.15 && m <= 0.35,
         "mean reduction " + fmt(m) + " over " + std::to_string(reds.size()) +
             " runs (band [0.15, 0.35])");
}

// Runs first: timing is the one measurement that heap and cache state from
// the other sweeps could skew. Rounds are interleaved across the two sizes
// so environment noise (scheduler bursts, throttling) hits the n=250 and
// n=500 samples alike and cancels out of the growth ratios; each number is
// still the median over per-instance medians of repeated solver runs.
void criterion_7() {
  const int sizes[] = {250, 500};
  const int per_size = 7;
  const int rounds = 11;

  struct Timed {
    int n;
    Cycle h;
    CostModel cm;
  };
  std::vector<Timed> cases;
  std::uint64_t seed = 70'000'000;
  for (int n : sizes) {
    for (int rep = 0; rep < per_size; ++rep, ++seed) {
      const auto inst = generate({GenKind::uniform, n, 2.0, seed});
      auto cm = build_cost_model(inst);
      auto h = two_opt_improve(nearest_neighbor(inst, cm), cm);
      cases.push_back({n, std::move(h), std::move(cm)});
    }
  }

  const char* solvers[] = {"split", "lazy-matrix", "lazy-lists"};
  // samples[case][solver] = wall times across rounds
  std::vector<std::array<std::vector<double>, 3>> samples(cases.size());
  for (int r = 0; r < rounds; ++r) {
    for (std::size_t c = 0; c < cases.size(); ++c) {
      const auto& tc = cases[c];
      samples[c][0].push_back(
          double(split_algorithm(tc.h, tc.cm).stats.wall_time_ns));
      samples[c][1].push_back(double(
          split_lazy(tc.h, tc.cm, GraphRepr::matrix).stats.wall_time_ns));
      samples[c][2].push_back(double(
          split_lazy(tc.h, tc.cm, GraphRepr::lists).stats.wall_time_ns));
    }
  }

  std::map<std::pair<std::string, int>, std::vector<double>> times;
  for (std::size_t c = 0; c < cases.size(); ++c)
    for (int s = 0; s < 3; ++s)
      times[{solvers[s], cases[c].n}].push_back(median_of(samples[c][s]));

  const double split250 = median_of(times[{"split", 250}]);
  const double split500 = median_of(times[{"split", 500}]);
  const double mat500 = median_of(times[{"lazy-matrix", 500}]);
  const double lists250 = median_of(times[{"lazy-lists", 250}]);
  const double lists500 = median_of(times[{"lazy-lists", 500}]);

  const bool ordering = lists500 < mat500 && mat500 < split500;
  const double split_growth = split500 / split250;
  const double lists_growth = lists500 / lists250;
  const bool growth = split_growth >= 8.0 && lists_growth <= 3.0;

  report(7, "runtime ordering and growth", ordering && growth,
         "medians at n=500 (ms): lists " + fmt(lists500 / 1e6) + " < matrix " +
             fmt(mat500 / 1e6) + " < split " + fmt(split500 / 1e6) +
             "; growth 250->500: split " + fmt(split_growth) +
             "x (need >= 8), lists " + fmt(lists_growth) + "x (need <= 3)");
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  criterion_7();
  criterion_1_and_8();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  report(8, "structural invariants", criterion8_pass, criterion8_detail);

  std::sort(results.begin(), results.end(),
            [](const Criterion& a, const Criterion& b) { return a.id < b.id; });
  int failures = 0;
  for (const auto& c : results) {
    if (!c.pass) ++failures;
    std::printf("[%s] %d. %s: %s\n", c.pass ? "PASS" : "FAIL", c.id,
                c.name.c_str(), c.detail.c_str());
  }
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
  std::printf("%d/%zu criteria passed in %.1fs\n", int(results.size()) - failures,
              results.size(), secs);
  return failures;
}
