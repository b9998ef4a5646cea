#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hfstsp/model.hpp"

namespace hfstsp {

/// One arc of the operation graph, in cycle positions. drone_pos == -1 means
/// the operation carries no sortie.
struct OpArc {
  int from_pos = -1;
  int to_pos = -1;
  int drone_pos = -1;
  double cost = 0.0;
};

enum class GraphRepr { matrix, lists };

/// Forward-arc DAG over cycle positions 0..n+1.
///
/// matrix: at most one arc per (i, k); add_or_update keeps the cheapest and
/// resolves cost ties in favor of the arc written first.
/// lists: a per-source multigraph; every add appends a parallel arc and the
/// shortest path minimizes over parallels.
class OpGraph {
 public:
  OpGraph(int n_positions, GraphRepr repr);

  int n_positions() const { return n_; }
  GraphRepr repr() const { return repr_; }

  /// Returns true when the graph changed.
  bool add_or_update(int from, int to, double cost, int drone_pos);

  bool has_arc(int from, int to) const;
  /// Cheapest arc for (from, to); throws when absent.
  OpArc arc(int from, int to) const;
  std::vector<OpArc> all_arcs() const;

  /// Min-cost path from position 0 to n+1. Arcs strictly increase position,
  /// so one forward pass in index order suffices; cost ties keep the arc
  /// discovered first.
  std::vector<OpArc> shortest_path() const;

 private:
  int n_;
  GraphRepr repr_;
  std::vector<double> cost_;            // matrix
  std::vector<int> drone_;              // matrix
  std::vector<std::vector<OpArc>> out_; // lists
};

struct RunStats {
  std::uint64_t triples_considered = 0;
  std::uint64_t arcs_written = 0;  ///< arc writes incl. the backbone
  std::uint64_t wall_time_ns = 0;
  std::string solver_name;
};

struct SolveResult {
  Solution solution;
  RunStats stats;
};

/// Test instrumentation: every (i, j, k) whose costs were evaluated.
struct TripleLog {
  std::vector<std::array<int, 3>> evaluated;
};

/// C(n+2, 3): the number of triples the plain split algorithm considers.
std::uint64_t max_triples(int n);

/// t(o_{i,j,k}): max of the truck detour time (skipping v_j) and the sortie
/// time, computed by direct summation. Not used on the solver hot paths.
double triple_time(int i, int j, int k, const Cycle& h, const CostModel& cm);

/// The drone is fast in o_{i,j,k} when its flight time does not exceed the
/// truck's: raw double comparison, inclusive <=.
bool is_fast(int i, int j, int k, const Cycle& h, const CostModel& cm);

/// True iff o_{i,j,k} dominates o_{i2,j2,k2} with respect to h: containment
/// (i2 <= i, k2 >= k) and routing via o_{i,j,k} plus truck legs costs no
/// more, the boundary judged at the standard cost tolerance (the two sides
/// are often the same legs summed in different orders). Reflexive. Used by
/// tests and the oracle only.
bool dominates(int i, int j, int k, int i2, int j2, int k2, const Cycle& h,
               const CostModel& cm);

/// The plain split algorithm: evaluates every triple, builds a matrix graph
/// with one arc per position pair, and extracts the optimal solution for the
/// h-FSTSP. Theta(n^3).
SolveResult split_algorithm(const Cycle& h, const CostModel& cm,
                            TripleLog* log = nullptr);

/// The lazy variant: for each drone position j it widens the (i, k) window
/// outward and stops a direction as soon as a fast operation appears, which
/// dominates everything wider. Same optimum, far fewer triples in practice.
SolveResult split_lazy(const Cycle& h, const CostModel& cm, GraphRepr repr,
                       TripleLog* log = nullptr);

/// Graph-building halves of the solvers, exposed for tests.
OpGraph build_split_graph(const Cycle& h, const CostModel& cm,
                          RunStats* stats = nullptr, TripleLog* log = nullptr);
OpGraph build_lazy_graph(const Cycle& h, const CostModel& cm, GraphRepr repr,
                         RunStats* stats = nullptr, TripleLog* log = nullptr);

/// Turns a contiguous forward arc path into chained operations. Throws on a
/// non-contiguous path.
Solution reconstruct(const std::vector<OpArc>& path, const Cycle& h);

/// One operation per line: `truck: id id ... drone: i j k|none cost: <float>`,
/// terminated by a `total:` line. Per-operation costs are recomputed from cm.
void write_solution(const Solution& s, const CostModel& cm, std::ostream& out);
Solution read_solution(std::istream& in);

void write_solution_file(const Solution& s, const CostModel& cm,
                         const std::string& path);
Solution read_solution_file(const std::string& path);

}  // namespace hfstsp
