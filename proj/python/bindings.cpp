#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hfstsp/bench.hpp"
#include "hfstsp/instancegen.hpp"
#include "hfstsp/model.hpp"
#include "hfstsp/oracle.hpp"
#include "hfstsp/split.hpp"
#include "hfstsp/tour.hpp"

namespace py = pybind11;
using namespace hfstsp;

namespace {

SolveResult solve_named(const Instance& inst, const Cycle& h,
                        const std::string& solver) {
  const CostModel cm = build_cost_model(inst);
  if (solver == "split") return split_algorithm(h, cm);
  if (solver == "lazy-matrix") return split_lazy(h, cm, GraphRepr::matrix);
  if (solver == "lazy-lists") return split_lazy(h, cm, GraphRepr::lists);
  if (solver == "oracle") {
    SolveResult res;
    res.solution = exhaustive_hfstsp(h, cm);
    res.stats.solver_name = "oracle";
    return res;
  }
  throw std::invalid_argument("unknown solver: " + solver);
}

}  // namespace

PYBIND11_MODULE(_hfstsp, m) {
  m.doc() = "Exact solvers for the FSTSP restricted to a Hamiltonian cycle";

  py::class_<Point>(m, "Point")
      .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
      .def_readonly("x", &Point::x)
      .def_readonly("y", &Point::y)
      .def("__repr__", [](const Point& p) {
        return "Point(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
      });

  py::class_<InstanceMeta>(m, "InstanceMeta")
      .def_readonly("generator", &InstanceMeta::generator)
      .def_readonly("seed", &InstanceMeta::seed);

  py::class_<Instance>(m, "Instance")
      .def_readonly("n", &Instance::n)
      .def_readonly("alpha", &Instance::alpha)
      .def_readonly("coords", &Instance::coords)
      .def_readonly("meta", &Instance::meta)
      .def("__repr__", [](const Instance& i) {
        return "Instance(n=" + std::to_string(i.n) + ")";
      });

  py::class_<Cycle>(m, "Cycle")
      .def(py::init([](std::vector<int> order) {
             Cycle h{std::move(order)};
             h.validate();
             return h;
           }),
           py::arg("order"))
      .def_readonly("order", &Cycle::order);

  py::class_<Sortie>(m, "Sortie")
      .def_readonly("launch", &Sortie::launch)
      .def_readonly("customer", &Sortie::customer)
      .def_readonly("rendezvous", &Sortie::rendezvous);

  py::class_<Operation>(m, "Operation")
      .def_readonly("truck_path", &Operation::truck_path)
      .def_readonly("drone_sortie", &Operation::drone_sortie);

  py::class_<Solution>(m, "Solution")
      .def_readonly("operations", &Solution::operations)
      .def_readonly("total_time", &Solution::total_time);

  py::class_<RunStats>(m, "RunStats")
      .def_readonly("triples_considered", &RunStats::triples_considered)
      .def_readonly("arcs_written", &RunStats::arcs_written)
      .def_readonly("wall_time_ns", &RunStats::wall_time_ns)
      .def_readonly("solver_name", &RunStats::solver_name);

  py::class_<SolveResult>(m, "SolveResult")
      .def_readonly("solution", &SolveResult::solution)
      .def_readonly("stats", &SolveResult::stats);

  m.def(
      "generate",
      [](const std::string& kind, int n, double alpha, std::uint64_t seed) {
        return generate({gen_kind_from_string(kind), n, alpha, seed});
      },
      py::arg("kind"), py::arg("n"), py::arg("alpha"), py::arg("seed"),
      "Generate a seeded random instance (kind: uniform|1c|2c)");

  m.def("read_instance", &read_instance_file, py::arg("path"));
  m.def(
      "write_instance",
      [](const Instance& inst, const std::string& path) {
        write_instance_file(inst, path);
      },
      py::arg("instance"), py::arg("path"));

  m.def(
      "nearest_neighbor",
      [](const Instance& inst) {
        return nearest_neighbor(inst, build_cost_model(inst));
      },
      py::arg("instance"));
  m.def(
      "two_opt_improve",
      [](const Instance& inst, const Cycle& h, int max_passes) {
        return two_opt_improve(h, build_cost_model(inst), max_passes);
      },
      py::arg("instance"), py::arg("cycle"), py::arg("max_passes") = 1'000'000);
  m.def(
      "mst_double_tree",
      [](const Instance& inst) {
        return mst_double_tree(inst, build_cost_model(inst));
      },
      py::arg("instance"));
  m.def(
      "cycle_length",
      [](const Instance& inst, const Cycle& h) {
        return cycle_length(h, build_cost_model(inst));
      },
      py::arg("instance"), py::arg("cycle"));

  m.def("solve", &solve_named, py::arg("instance"), py::arg("cycle"),
        py::arg("solver") = "lazy-lists",
        "Solve the h-FSTSP (solver: split|lazy-matrix|lazy-lists|oracle)");

  m.def(
      "exhaustive_hfstsp",
      [](const Instance& inst, const Cycle& h, int max_n) {
        return exhaustive_hfstsp(h, build_cost_model(inst), max_n);
      },
      py::arg("instance"), py::arg("cycle"), py::arg("max_n") = 14);

  m.def(
      "exhaustive_fstsp",
      [](const Instance& inst, int max_n) {
        return exhaustive_fstsp(inst, build_cost_model(inst), max_n);
      },
      py::arg("instance"), py::arg("max_n") = 7);

  m.def(
      "solution_time",
      [](const Instance& inst, const Solution& s) {
        return solution_time(s, build_cost_model(inst));
      },
      py::arg("instance"), py::arg("solution"));

  m.def(
      "validate_respects",
      [](const Solution& s, const Cycle& h) {
        std::string why;
        const bool ok = validate_respects(s, h, &why);
        return py::make_tuple(ok, why);
      },
      py::arg("solution"), py::arg("cycle"),
      "Returns (ok, violation_description)");

  m.def(
      "write_solution",
      [](const Instance& inst, const Solution& s, const std::string& path) {
        write_solution_file(s, build_cost_model(inst), path);
      },
      py::arg("instance"), py::arg("solution"), py::arg("path"));
  m.def("read_solution", &read_solution_file, py::arg("path"));

  m.def("max_triples", &max_triples, py::arg("n"),
        "C(n+2, 3), the triple count of the plain split algorithm");
}
