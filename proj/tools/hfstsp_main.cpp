#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hfstsp/bench.hpp"
#include "hfstsp/instancegen.hpp"
#include "hfstsp/model.hpp"
#include "hfstsp/oracle.hpp"
#include "hfstsp/split.hpp"
#include "hfstsp/tour.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;

// "-" means stdout.
void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_generate(const std::string& kind, int n, double alpha,
                 std::uint64_t seed, const std::string& output) {
  hfstsp::GenSpec spec{hfstsp::gen_kind_from_string(kind), n, alpha, seed};
  const hfstsp::Instance inst = hfstsp::generate(spec);
  std::ostringstream ss;
  hfstsp::write_instance(inst, ss);
  write_text(output, ss.str());
  return kExitOk;
}

int cmd_tour(const std::string& instance_path, const std::string& method,
             int max_passes, const std::string& output) {
  const hfstsp::Instance inst = hfstsp::read_instance_file(instance_path);
  const hfstsp::CostModel cm = hfstsp::build_cost_model(inst);
  hfstsp::Cycle h;
  if (method == "nn") {
    h = hfstsp::nearest_neighbor(inst, cm);
  } else if (method == "nn2opt") {
    h = hfstsp::two_opt_improve(hfstsp::nearest_neighbor(inst, cm), cm,
                                max_passes);
  } else if (method == "mst") {
    h = hfstsp::mst_double_tree(inst, cm);
  } else {
    throw std::invalid_argument("unknown tour method: " + method);
  }
  std::ostringstream ss;
  hfstsp::write_cycle(h, ss);
  write_text(output, ss.str());
  return kExitOk;
}

int cmd_solve(const std::string& instance_path, const std::string& cycle_path,
              const std::string& solver, bool stats,
              const std::string& output) {
  const hfstsp::Instance inst = hfstsp::read_instance_file(instance_path);
  const hfstsp::CostModel cm = hfstsp::build_cost_model(inst);
  const hfstsp::Cycle h = hfstsp::read_cycle_file(cycle_path, inst.n);

  hfstsp::SolveResult res;
  if (solver == "split") {
    res = hfstsp::split_algorithm(h, cm);
  } else if (solver == "lazy-matrix") {
    res = hfstsp::split_lazy(h, cm, hfstsp::GraphRepr::matrix);
  } else if (solver == "lazy-lists") {
    res = hfstsp::split_lazy(h, cm, hfstsp::GraphRepr::lists);
  } else if (solver == "oracle") {
    res.solution = hfstsp::exhaustive_hfstsp(h, cm);
    res.stats.solver_name = "oracle";
  } else {
    throw std::invalid_argument("unknown solver: " + solver);
  }

  std::ostringstream ss;
  hfstsp::write_solution(res.solution, cm, ss);
  write_text(output, ss.str());
  if (stats) {
    std::cerr << "solver: " << res.stats.solver_name
              << " triples: " << res.stats.triples_considered
              << " arcs_written: " << res.stats.arcs_written
              << " wall_time_ns: " << res.stats.wall_time_ns << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& instance_path, const std::string& cycle_path,
               const std::string& solution_path) {
  const hfstsp::Instance inst = hfstsp::read_instance_file(instance_path);
  const hfstsp::CostModel cm = hfstsp::build_cost_model(inst);
  const hfstsp::Cycle h = hfstsp::read_cycle_file(cycle_path, inst.n);
  const hfstsp::Solution s = hfstsp::read_solution_file(solution_path);

  std::string why;
  if (!hfstsp::validate_respects(s, h, &why)) {
    std::cout << "FAIL: " << why << "\n";
    return kExitVerifyFailed;
  }
  const double recomputed = hfstsp::solution_time(s, cm);
  if (!hfstsp::nearly_equal(recomputed, s.total_time)) {
    std::cout << "FAIL: stored total " << s.total_time
              << " does not match recomputed time " << recomputed << "\n";
    return kExitVerifyFailed;
  }
  std::cout << "PASS: " << s.operations.size() << " operations, total time "
            << recomputed << "\n";
  return kExitOk;
}

int cmd_bench(hfstsp::SuiteConfig cfg, const std::string& config_path,
              bool summary) {
  if (!config_path.empty()) cfg = hfstsp::config_from_json(slurp(config_path));
  try {
    const auto rows = hfstsp::run_suite(cfg);
    if (summary) {
      std::cout << "# partition: by size\n";
      hfstsp::write_summary_csv(hfstsp::aggregate(rows, hfstsp::Partition::by_size),
                                std::cout);
      std::cout << "# partition: by alpha\n";
      hfstsp::write_summary_csv(
          hfstsp::aggregate(rows, hfstsp::Partition::by_alpha), std::cout);
    } else {
      hfstsp::write_csv(rows, std::cout);
    }
  } catch (const hfstsp::EquivalenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers for the FSTSP restricted to a Hamiltonian cycle"};
  app.require_subcommand(1);

  // generate
  std::string g_kind = "uniform", g_output = "-";
  int g_n = 50;
  double g_alpha = 2.0;
  std::uint64_t g_seed = 0;
  auto* gen = app.add_subcommand("generate", "Generate a random instance");
  gen->add_option("--kind,-k", g_kind, "uniform|1c|2c")->capture_default_str();
  gen->add_option("--n,-n", g_n, "customer count")->capture_default_str();
  gen->add_option("--alpha,-a", g_alpha, "drone speed factor")
      ->capture_default_str();
  gen->add_option("--seed,-s", g_seed, "RNG seed")->capture_default_str();
  gen->add_option("--output,-o", g_output, "output file, - for stdout")
      ->capture_default_str();

  // tour
  std::string t_instance, t_method = "nn2opt", t_output = "-";
  int t_max_passes = 1'000'000;
  auto* tour = app.add_subcommand("tour", "Build an initial Hamiltonian cycle");
  tour->add_option("--instance,-i", t_instance, "instance file")->required();
  tour->add_option("--method,-m", t_method, "nn|nn2opt|mst")
      ->capture_default_str();
  tour->add_option("--max-passes", t_max_passes, "2-opt pass limit")
      ->capture_default_str();
  tour->add_option("--output,-o", t_output, "output file, - for stdout")
      ->capture_default_str();

  // solve
  std::string s_instance, s_cycle, s_solver = "lazy-lists", s_output = "-";
  bool s_stats = false;
  auto* solve = app.add_subcommand("solve", "Solve the h-FSTSP for a cycle");
  solve->add_option("--instance,-i", s_instance, "instance file")->required();
  solve->add_option("--cycle,-c", s_cycle, "cycle file")->required();
  solve->add_option("--solver,-s", s_solver,
                    "split|lazy-matrix|lazy-lists|oracle")
      ->capture_default_str();
  solve->add_flag("--stats", s_stats, "print run statistics to stderr");
  solve->add_option("--output,-o", s_output, "output file, - for stdout")
      ->capture_default_str();

  // verify
  std::string v_instance, v_cycle, v_solution;
  auto* verify =
      app.add_subcommand("verify", "Check a solution against instance and cycle");
  verify->add_option("--instance,-i", v_instance, "instance file")->required();
  verify->add_option("--cycle,-c", v_cycle, "cycle file")->required();
  verify->add_option("--solution,-s", v_solution, "solution file")->required();

  // bench
  hfstsp::SuiteConfig cfg;
  std::string b_config;
  bool b_summary = false;
  std::vector<std::string> b_generators = {"uniform"};
  auto* bench = app.add_subcommand("bench", "Run a benchmark suite, CSV to stdout");
  bench->add_option("--config", b_config, "JSON config file (overrides flags)");
  bench->add_option("--generators", b_generators, "uniform|1c|2c")
      ->delimiter(',');
  bench->add_option("--sizes", cfg.sizes, "customer counts")->delimiter(',');
  bench->add_option("--alphas", cfg.alphas, "drone speed factors")
      ->delimiter(',');
  bench->add_option("--instances-per-cell", cfg.instances_per_cell,
                    "instances per (generator, size, alpha)")
      ->capture_default_str();
  bench->add_option("--tour", cfg.tour_method, "nn|nn2opt|mst")
      ->capture_default_str();
  bench->add_option("--solvers", cfg.solvers,
                    "split|lazy-matrix|lazy-lists|oracle")
      ->delimiter(',');
  bench->add_option("--repeats", cfg.timing_repeats,
                    "timing repeats per solver (median)")
      ->capture_default_str();
  bench->add_option("--master-seed", cfg.master_seed, "master seed")
      ->capture_default_str();
  bench->add_option("--jobs", cfg.jobs, "worker threads")->capture_default_str();
  bench->add_flag("--summary", b_summary, "emit aggregate tables instead of rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (gen->parsed()) return cmd_generate(g_kind, g_n, g_alpha, g_seed, g_output);
    if (tour->parsed()) return cmd_tour(t_instance, t_method, t_max_passes, t_output);
    if (solve->parsed())
      return cmd_solve(s_instance, s_cycle, s_solver, s_stats, s_output);
    if (verify->parsed()) return cmd_verify(v_instance, v_cycle, v_solution);
    if (bench->parsed()) {
      cfg.generators.clear();
      for (const auto& g : b_generators)
        cfg.generators.push_back(hfstsp::gen_kind_from_string(g));
      return cmd_bench(cfg, b_config, b_summary);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitOk;
}
