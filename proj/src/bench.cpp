#include "hfstsp/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "hfstsp/oracle.hpp"
#include "hfstsp/split.hpp"
#include "hfstsp/tour.hpp"

namespace hfstsp {

namespace {

std::string fmt_g(double v, int digits = 9) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

Cycle make_tour(const std::string& method, const Instance& inst,
                const CostModel& cm, int two_opt_max_passes) {
  if (method == "nn") return nearest_neighbor(inst, cm);
  if (method == "nn2opt")
    return two_opt_improve(nearest_neighbor(inst, cm), cm, two_opt_max_passes);
  if (method == "mst") return mst_double_tree(inst, cm);
  throw std::invalid_argument("unknown tour method: " + method);
}

SolveResult run_solver(const std::string& name, const Cycle& h,
                       const CostModel& cm) {
  if (name == "split") return split_algorithm(h, cm);
  if (name == "lazy-matrix") return split_lazy(h, cm, GraphRepr::matrix);
  if (name == "lazy-lists") return split_lazy(h, cm, GraphRepr::lists);
  if (name == "oracle") {
    SolveResult res;
    const auto t0 = std::chrono::steady_clock::now();
    res.solution = exhaustive_hfstsp(h, cm);
    res.stats.wall_time_ns =
        std::chrono::duration_cast<std::chrono::nanoseconds>(
            std::chrono::steady_clock::now() - t0)
            .count();
    res.stats.solver_name = "oracle";
    return res;
  }
  throw std::invalid_argument("unknown solver: " + name);
}

std::uint64_t median(std::vector<std::uint64_t> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t m = xs.size() / 2;
  if (xs.size() % 2 == 1) return xs[m];
  return (xs[m - 1] + xs[m]) / 2;
}

struct InstanceTask {
  GenKind kind;
  int n;
  double alpha;
  std::uint64_t seed;
  std::string id;
};

std::vector<BenchRow> run_one(const InstanceTask& task,
                              const SuiteConfig& cfg) {
  const Instance inst = generate({task.kind, task.n, task.alpha, task.seed});
  const CostModel cm = build_cost_model(inst);
  const Cycle h = make_tour(cfg.tour_method, inst, cm, cfg.two_opt_max_passes);
  const double tour_cost = cycle_length(h, cm);

  std::vector<BenchRow> rows;
  double first_cost = 0.0;
  for (std::size_t s = 0; s < cfg.solvers.size(); ++s) {
    const auto& solver = cfg.solvers[s];
    SolveResult res;
    std::vector<std::uint64_t> times;
    const int repeats = std::max(1, cfg.timing_repeats);
    for (int r = 0; r < repeats; ++r) {
      SolveResult run = run_solver(solver, h, cm);
      times.push_back(run.stats.wall_time_ns);
      if (r == 0) res = std::move(run);
    }

    const double cost = res.solution.total_time;
    if (s == 0)
      first_cost = cost;
    else if (!nearly_equal(cost, first_cost))
      throw EquivalenceError(task.id, task.seed,
                             cfg.solvers[0] + " found " + fmt_g(first_cost, 17) +
                                 " but " + solver + " found " + fmt_g(cost, 17));

    BenchRow row;
    row.instance_id = task.id;
    row.generator = to_string(task.kind);
    row.n = task.n;
    row.alpha = task.alpha;
    row.tour_source = cfg.tour_method;
    row.solver = solver;
    row.tour_cost = tour_cost;
    row.solution_cost = cost;
    row.cost_reduction =
        tour_cost > 0.0 ? (tour_cost - cost) / tour_cost : 0.0;
    row.triples = res.stats.triples_considered;
    row.triples_per_node = double(res.stats.triples_considered) / (task.n + 1);
    row.wall_time_ns = median(std::move(times));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<BenchRow> run_suite(const SuiteConfig& cfg) {
  std::vector<InstanceTask> tasks;
  std::uint64_t index = 0;
  for (GenKind kind : cfg.generators)
    for (int n : cfg.sizes)
      for (double alpha : cfg.alphas)
        for (int rep = 0; rep < cfg.instances_per_cell; ++rep) {
          InstanceTask t{kind, n, alpha, cfg.master_seed + index, ""};
          t.id = to_string(kind) + "-n" + std::to_string(n) + "-a" +
                 fmt_g(alpha) + "-s" + std::to_string(t.seed);
          tasks.push_back(std::move(t));
          ++index;
        }

  std::vector<std::vector<BenchRow>> per_task(tasks.size());
  const int jobs = std::max(1, cfg.jobs);
  if (jobs == 1) {
    for (std::size_t t = 0; t < tasks.size(); ++t)
      per_task[t] = run_one(tasks[t], cfg);
  } else {
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string first_error;
    std::mutex error_mu;
    auto worker = [&] {
      for (;;) {
        const std::size_t t = next.fetch_add(1);
        if (t >= tasks.size() || failed.load()) return;
        try {
          per_task[t] = run_one(tasks[t], cfg);
        } catch (const std::exception& e) {
          std::lock_guard<std::mutex> lk(error_mu);
          if (!failed.exchange(true)) first_error = e.what();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failed.load()) throw std::runtime_error(first_error);
  }

  std::vector<BenchRow> rows;
  for (auto& chunk : per_task)
    rows.insert(rows.end(), std::make_move_iterator(chunk.begin()),
                std::make_move_iterator(chunk.end()));
  std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    if (a.instance_id != b.instance_id) return a.instance_id < b.instance_id;
    return a.solver < b.solver;
  });
  return rows;
}

namespace {

struct GroupKey {
  int bucket_rank;
  std::string bucket;
  std::string alpha_label;
  std::string solver;
  bool operator<(const GroupKey& o) const {
    if (bucket_rank != o.bucket_rank) return bucket_rank < o.bucket_rank;
    if (alpha_label != o.alpha_label) return alpha_label < o.alpha_label;
    return solver < o.solver;
  }
};

std::pair<int, std::string> size_bucket(int n) {
  static const std::pair<int, const char*> edges[] = {
      {10, "<=10"}, {20, "20"},   {50, "50"},   {75, "75"},  {100, "100"},
      {175, "175"}, {250, "250"}, {375, "375"},
  };
  int rank = 0;
  for (const auto& [hi, label] : edges) {
    if (n <= hi) return {rank, label};
    ++rank;
  }
  return {rank, "500"};
}

std::pair<int, std::string> alpha_band(int n) {
  if (n <= 75) return {0, "<=75"};
  if (n <= 250) return {1, "100-250"};
  return {2, ">=375"};
}

struct Welford {
  std::vector<double> xs;
  void add(double x) { xs.push_back(x); }
  double mean() const {
    double s = 0.0;
    for (double x : xs) s += x;
    return xs.empty() ? 0.0 : s / double(xs.size());
  }
  double stdev() const {  // sample stdev; 0 for a singleton
    if (xs.size() < 2) return 0.0;
    const double m = mean();
    double s = 0.0;
    for (double x : xs) s += (x - m) * (x - m);
    return std::sqrt(s / double(xs.size() - 1));
  }
};

struct GroupAcc {
  Welford red, time, tpn;
};

}  // namespace

std::vector<SummaryRow> aggregate(const std::vector<BenchRow>& rows,
                                  Partition partition) {
  std::map<GroupKey, GroupAcc> groups;
  for (const auto& r : rows) {
    GroupKey key;
    if (partition == Partition::by_size) {
      auto [rank, label] = size_bucket(r.n);
      key = {rank, label, "any", r.solver};
    } else {
      auto [rank, label] = alpha_band(r.n);
      key = {rank, label, fmt_g(r.alpha), r.solver};
    }
    auto& acc = groups[key];
    acc.red.add(r.cost_reduction);
    acc.time.add(double(r.wall_time_ns));
    acc.tpn.add(r.triples_per_node);
  }
  std::vector<SummaryRow> out;
  for (const auto& [key, acc] : groups) {
    SummaryRow s;
    s.bucket = key.bucket;
    s.alpha_label = key.alpha_label;
    s.solver = key.solver;
    s.count = int(acc.red.xs.size());
    s.cost_reduction_mean = acc.red.mean();
    s.cost_reduction_stdev = acc.red.stdev();
    s.wall_time_mean = acc.time.mean();
    s.wall_time_stdev = acc.time.stdev();
    s.triples_per_node_mean = acc.tpn.mean();
    s.triples_per_node_stdev = acc.tpn.stdev();
    out.push_back(std::move(s));
  }
  return out;
}

namespace {
const char* kCsvHeader =
    "instance_id,generator,n,alpha,tour,solver,tour_cost,solution_cost,"
    "cost_reduction,triples,triples_per_node,wall_time_ns";
}

void write_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << kCsvHeader << "\n";
  for (const auto& r : rows) {
    out << r.instance_id << "," << r.generator << "," << r.n << ","
        << fmt_g(r.alpha) << "," << r.tour_source << "," << r.solver << ","
        << fmt_g(r.tour_cost) << "," << fmt_g(r.solution_cost) << ","
        << fmt_g(r.cost_reduction) << "," << r.triples << ","
        << fmt_g(r.triples_per_node) << "," << r.wall_time_ns << "\n";
  }
}

std::vector<BenchRow> read_csv(std::istream& in) {
  std::vector<BenchRow> rows;
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kCsvHeader)
        throw ParseError(lineno, "unexpected CSV header");
      header_seen = true;
      continue;
    }
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) f.push_back(tok);
    if (f.size() != 12) throw ParseError(lineno, "expected 12 CSV fields");
    try {
      BenchRow r;
      r.instance_id = f[0];
      r.generator = f[1];
      r.n = std::stoi(f[2]);
      r.alpha = std::stod(f[3]);
      r.tour_source = f[4];
      r.solver = f[5];
      r.tour_cost = std::stod(f[6]);
      r.solution_cost = std::stod(f[7]);
      r.cost_reduction = std::stod(f[8]);
      r.triples = std::stoull(f[9]);
      r.triples_per_node = std::stod(f[10]);
      r.wall_time_ns = std::stoull(f[11]);
      rows.push_back(std::move(r));
    } catch (const std::exception&) {
      throw ParseError(lineno, "malformed CSV row");
    }
  }
  if (!header_seen) throw ParseError(lineno, "empty CSV");
  return rows;
}

void write_summary_csv(const std::vector<SummaryRow>& rows,
                       std::ostream& out) {
  out << "bucket,alpha,solver,count,cost_reduction_mean,cost_reduction_stdev,"
         "wall_time_ns_mean,wall_time_ns_stdev,triples_per_node_mean,"
         "triples_per_node_stdev\n";
  for (const auto& s : rows) {
    out << s.bucket << "," << s.alpha_label << "," << s.solver << ","
        << s.count << "," << fmt_g(s.cost_reduction_mean) << ","
        << fmt_g(s.cost_reduction_stdev) << "," << fmt_g(s.wall_time_mean)
        << "," << fmt_g(s.wall_time_stdev) << ","
        << fmt_g(s.triples_per_node_mean) << ","
        << fmt_g(s.triples_per_node_stdev) << "\n";
  }
}

SuiteConfig config_from_json(const std::string& text) {
  SuiteConfig cfg;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  if (j.contains("generators")) {
    cfg.generators.clear();
    for (const auto& g : j["generators"])
      cfg.generators.push_back(gen_kind_from_string(g.get<std::string>()));
  }
  if (j.contains("sizes")) cfg.sizes = j["sizes"].get<std::vector<int>>();
  if (j.contains("alphas")) cfg.alphas = j["alphas"].get<std::vector<double>>();
  if (j.contains("instances_per_cell"))
    cfg.instances_per_cell = j["instances_per_cell"].get<int>();
  if (j.contains("tour_method"))
    cfg.tour_method = j["tour_method"].get<std::string>();
  if (j.contains("solvers"))
    cfg.solvers = j["solvers"].get<std::vector<std::string>>();
  if (j.contains("timing_repeats"))
    cfg.timing_repeats = j["timing_repeats"].get<int>();
  if (j.contains("master_seed"))
    cfg.master_seed = j["master_seed"].get<std::uint64_t>();
  if (j.contains("jobs")) cfg.jobs = j["jobs"].get<int>();
  if (j.contains("two_opt_max_passes"))
    cfg.two_opt_max_passes = j["two_opt_max_passes"].get<int>();
  return cfg;
}

}  // namespace hfstsp
