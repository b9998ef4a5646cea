#include "hfstsp/split.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace hfstsp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t elapsed_ns(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

OpGraph::OpGraph(int n_positions, GraphRepr repr)
    : n_(n_positions), repr_(repr) {
  if (repr_ == GraphRepr::matrix) {
    cost_.assign(std::size_t(n_) * n_, kInf);
    drone_.assign(std::size_t(n_) * n_, -1);
  } else {
    out_.resize(n_);
  }
}

bool OpGraph::add_or_update(int from, int to, double cost, int drone_pos) {
  if (from >= to) throw std::invalid_argument("op graph: arcs must go forward");
  if (repr_ == GraphRepr::matrix) {
    const std::size_t slot = std::size_t(from) * n_ + to;
    if (cost_[slot] <= cost) return false;
    cost_[slot] = cost;
    drone_[slot] = drone_pos;
    return true;
  }
  out_[from].push_back(OpArc{from, to, drone_pos, cost});
  return true;
}

bool OpGraph::has_arc(int from, int to) const {
  if (repr_ == GraphRepr::matrix)
    return cost_[std::size_t(from) * n_ + to] != kInf;
  for (const auto& a : out_[from])
    if (a.to_pos == to) return true;
  return false;
}

OpArc OpGraph::arc(int from, int to) const {
  if (repr_ == GraphRepr::matrix) {
    const std::size_t slot = std::size_t(from) * n_ + to;
    if (cost_[slot] == kInf)
      throw std::invalid_argument("op graph: no such arc");
    return OpArc{from, to, drone_[slot], cost_[slot]};
  }
  const OpArc* best = nullptr;
  for (const auto& a : out_[from])
    if (a.to_pos == to && (!best || a.cost < best->cost)) best = &a;
  if (!best) throw std::invalid_argument("op graph: no such arc");
  return *best;
}

std::vector<OpArc> OpGraph::all_arcs() const {
  std::vector<OpArc> arcs;
  if (repr_ == GraphRepr::matrix) {
    for (int i = 0; i < n_; ++i)
      for (int k = i + 1; k < n_; ++k) {
        const std::size_t slot = std::size_t(i) * n_ + k;
        if (cost_[slot] != kInf)
          arcs.push_back(OpArc{i, k, drone_[slot], cost_[slot]});
      }
  } else {
    for (const auto& row : out_) arcs.insert(arcs.end(), row.begin(), row.end());
  }
  return arcs;
}

std::vector<OpArc> OpGraph::shortest_path() const {
  std::vector<double> dist(n_, kInf);
  std::vector<OpArc> pred(n_);
  dist[0] = 0.0;
  if (repr_ == GraphRepr::matrix) {
    for (int i = 0; i < n_; ++i) {
      if (dist[i] == kInf) continue;
      const double di = dist[i];
      const std::size_t row = std::size_t(i) * n_;
      for (int k = i + 1; k < n_; ++k) {
        const double c = cost_[row + k];
        if (c == kInf) continue;
        if (di + c < dist[k]) {
          dist[k] = di + c;
          pred[k] = OpArc{i, k, drone_[row + k], c};
        }
      }
    }
  } else {
    for (int i = 0; i < n_; ++i) {
      if (dist[i] == kInf) continue;
      const double di = dist[i];
      for (const auto& a : out_[i]) {
        if (di + a.cost < dist[a.to_pos]) {
          dist[a.to_pos] = di + a.cost;
          pred[a.to_pos] = a;
        }
      }
    }
  }
  if (dist[n_ - 1] == kInf)
    throw std::logic_error("op graph: terminal unreachable (backbone missing)");
  std::vector<OpArc> path;
  for (int p = n_ - 1; p != 0; p = path.back().from_pos)
    path.push_back(pred[p]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::uint64_t max_triples(int n) {
  const std::uint64_t m = std::uint64_t(n) + 2;
  return m * (m - 1) * (m - 2) / 6;
}

namespace {

void check_triple(int i, int j, int k, int m) {
  if (!(0 <= i && i < j && j < k && k < m))
    throw std::invalid_argument("triple: positions must satisfy 0 <= i < j < k <= n+1");
}

// t(r) of the truck detour that skips v_j, by direct summation.
double detour_truck_time(int i, int j, int k, const Cycle& h,
                         const CostModel& cm) {
  const auto& v = h.order;
  double t = 0.0;
  for (int l = i; l <= j - 2; ++l) t += cm.truck_time(v[l], v[l + 1]);
  t += cm.truck_time(v[j - 1], v[j + 1]);
  for (int l = j + 1; l <= k - 1; ++l) t += cm.truck_time(v[l], v[l + 1]);
  return t;
}

double sortie_time(int i, int j, int k, const Cycle& h, const CostModel& cm) {
  const auto& v = h.order;
  return cm.drone_time(v[i], v[j]) + cm.drone_time(v[j], v[k]);
}

}  // namespace

double triple_time(int i, int j, int k, const Cycle& h, const CostModel& cm) {
  check_triple(i, j, k, int(h.order.size()));
  return std::max(detour_truck_time(i, j, k, h, cm), sortie_time(i, j, k, h, cm));
}

bool is_fast(int i, int j, int k, const Cycle& h, const CostModel& cm) {
  check_triple(i, j, k, int(h.order.size()));
  return sortie_time(i, j, k, h, cm) <= detour_truck_time(i, j, k, h, cm);
}

bool dominates(int i, int j, int k, int i2, int j2, int k2, const Cycle& h,
               const CostModel& cm) {
  const int m = int(h.order.size());
  check_triple(i, j, k, m);
  check_triple(i2, j2, k2, m);
  if (i2 > i || k2 < k) return false;  // not contained
  const auto& v = h.order;
  double via = triple_time(i, j, k, h, cm);
  for (int l = i2; l <= i - 1; ++l) via += cm.truck_time(v[l], v[l + 1]);
  for (int l = k; l <= k2 - 1; ++l) via += cm.truck_time(v[l], v[l + 1]);
  // When the truck binds on both sides the two totals are the same legs
  // summed in different orders, so the boundary needs the cost tolerance.
  const double t2 = triple_time(i2, j2, k2, h, cm);
  return t2 > via || nearly_equal(t2, via);
}

OpGraph build_split_graph(const Cycle& h, const CostModel& cm, RunStats* stats,
                          TripleLog* log) {
  const auto& v = h.order;
  const int n = h.n_customers();
  OpGraph g(n + 2, GraphRepr::matrix);
  std::uint64_t triples = 0, writes = 0;

  for (int i = 0; i <= n; ++i)
    if (g.add_or_update(i, i + 1, cm.truck_time(v[i], v[i + 1]), -1)) ++writes;

  for (int i = 0; i <= n - 1; ++i) {
    double truck_cost = cm.truck_time(v[i], v[i + 1]);
    for (int k = i + 2; k <= n + 1; ++k) {
      truck_cost += cm.truck_time(v[k - 1], v[k]);  // now t(v_i .. v_k)
      double min_cost = truck_cost;
      int drone_pos = -1;
      for (int j = i + 1; j <= k - 1; ++j) {
        ++triples;
        if (log) log->evaluated.push_back({i, j, k});
        const double drone_cost =
            cm.drone_time(v[i], v[j]) + cm.drone_time(v[j], v[k]);
        const double delta =
            cm.truck_time(v[j - 1], v[j + 1]) -
            (cm.truck_time(v[j - 1], v[j]) + cm.truck_time(v[j], v[j + 1]));
        const double new_cost = std::max(drone_cost, truck_cost + delta);
        if (new_cost < min_cost) {
          min_cost = new_cost;
          drone_pos = j;
        }
      }
      if (g.add_or_update(i, k, min_cost, drone_pos)) ++writes;
    }
  }
  if (stats) {
    stats->triples_considered = triples;
    stats->arcs_written = writes;
  }
  return g;
}

OpGraph build_lazy_graph(const Cycle& h, const CostModel& cm, GraphRepr repr,
                         RunStats* stats, TripleLog* log) {
  const auto& v = h.order;
  const int n = h.n_customers();
  OpGraph g(n + 2, repr);
  std::uint64_t triples = 0, writes = 0;

  for (int i = 0; i <= n; ++i)
    if (g.add_or_update(i, i + 1, cm.truck_time(v[i], v[i + 1]), -1)) ++writes;

  for (int j = 1; j <= n; ++j) {
    const double base_cost = cm.truck_time(v[j - 1], v[j + 1]);
    double pre_cost = -cm.truck_time(v[j - 1], v[j]);
    int k_max = n + 1;  // persists across i: the pruning compounds
    for (int i = j - 1; i >= 0; --i) {
      int k = j + 1;
      double drone_cost = cm.drone_time(v[i], v[j]) + cm.drone_time(v[j], v[k]);
      pre_cost += cm.truck_time(v[i], v[i + 1]);
      double pos_cost = 0.0;
      double truck_cost = pre_cost + base_cost + pos_cost;
      ++triples;
      if (log) log->evaluated.push_back({i, j, k});
      if (g.add_or_update(i, k, std::max(drone_cost, truck_cost), j)) ++writes;
      if (drone_cost <= truck_cost)
        break;  // fast o_{i,j,j+1} also dominates every smaller launch index
      for (k = j + 2; k <= k_max; ++k) {
        drone_cost = cm.drone_time(v[i], v[j]) + cm.drone_time(v[j], v[k]);
        pos_cost += cm.truck_time(v[k - 1], v[k]);
        truck_cost = pre_cost + base_cost + pos_cost;
        ++triples;
        if (log) log->evaluated.push_back({i, j, k});
        if (g.add_or_update(i, k, std::max(drone_cost, truck_cost), j)) ++writes;
        if (drone_cost <= truck_cost) {
          k_max = k - 1;
          break;
        }
      }
    }
  }
  if (stats) {
    stats->triples_considered = triples;
    stats->arcs_written = writes;
  }
  return g;
}

SolveResult split_algorithm(const Cycle& h, const CostModel& cm,
                            TripleLog* log) {
  SolveResult res;
  const auto t0 = std::chrono::steady_clock::now();
  const OpGraph g = build_split_graph(h, cm, &res.stats, log);
  res.solution = reconstruct(g.shortest_path(), h);
  res.stats.wall_time_ns = elapsed_ns(t0);
  res.stats.solver_name = "split";
  return res;
}

SolveResult split_lazy(const Cycle& h, const CostModel& cm, GraphRepr repr,
                       TripleLog* log) {
  SolveResult res;
  const auto t0 = std::chrono::steady_clock::now();
  const OpGraph g = build_lazy_graph(h, cm, repr, &res.stats, log);
  res.solution = reconstruct(g.shortest_path(), h);
  res.stats.wall_time_ns = elapsed_ns(t0);
  res.stats.solver_name =
      repr == GraphRepr::matrix ? "lazy-matrix" : "lazy-lists";
  return res;
}

Solution reconstruct(const std::vector<OpArc>& path, const Cycle& h) {
  if (path.empty()) throw std::invalid_argument("reconstruct: empty path");
  const auto& v = h.order;
  if (path.front().from_pos != 0 || path.back().to_pos != int(v.size()) - 1)
    throw std::invalid_argument("reconstruct: path must span position 0 to n+1");
  Solution s;
  double total = 0.0;
  int expect = 0;
  for (const auto& a : path) {
    if (a.from_pos != expect)
      throw std::invalid_argument("reconstruct: path is not contiguous");
    expect = a.to_pos;
    Operation op;
    op.truck_path.reserve(a.to_pos - a.from_pos + 1);
    for (int p = a.from_pos; p <= a.to_pos; ++p) {
      if (p == a.drone_pos) continue;
      op.truck_path.push_back(v[p]);
    }
    if (a.drone_pos >= 0)
      op.drone_sortie = Sortie{v[a.from_pos], v[a.drone_pos], v[a.to_pos]};
    total += a.cost;
    s.operations.push_back(std::move(op));
  }
  s.total_time = total;
  return s;
}

namespace {

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

void write_solution(const Solution& s, const CostModel& cm, std::ostream& out) {
  for (const auto& op : s.operations) {
    out << "truck:";
    for (int v : op.truck_path) out << " " << v;
    out << " drone:";
    if (op.drone_sortie)
      out << " " << op.drone_sortie->launch << " " << op.drone_sortie->customer
          << " " << op.drone_sortie->rendezvous;
    else
      out << " none";
    out << " cost: " << fmt_double(operation_time(op, cm)) << "\n";
  }
  out << "total: " << fmt_double(s.total_time) << "\n";
}

Solution read_solution(std::istream& in) {
  Solution s;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream is(line);
    std::string tok;
    if (!(is >> tok)) continue;
    if (tok[0] == '#') continue;
    if (tok == "total:") {
      if (!(is >> s.total_time))
        throw ParseError(lineno, "malformed total line");
      return s;
    }
    if (tok != "truck:")
      throw ParseError(lineno, "expected 'truck:' or 'total:', got '" + tok + "'");
    Operation op;
    while (is >> tok && tok != "drone:") {
      int v;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || p != tok.data() + tok.size())
        throw ParseError(lineno, "non-numeric truck node: " + tok);
      op.truck_path.push_back(v);
    }
    if (tok != "drone:") throw ParseError(lineno, "missing 'drone:' section");
    if (!(is >> tok)) throw ParseError(lineno, "missing drone value");
    if (tok != "none") {
      Sortie d;
      try {
        d.launch = std::stoi(tok);
      } catch (...) {
        throw ParseError(lineno, "non-numeric drone node: " + tok);
      }
      if (!(is >> d.customer >> d.rendezvous))
        throw ParseError(lineno, "drone section needs three nodes");
      op.drone_sortie = d;
    }
    if (!(is >> tok) || tok != "cost:")
      throw ParseError(lineno, "missing 'cost:' section");
    double c;
    if (!(is >> c)) throw ParseError(lineno, "malformed cost value");
    s.operations.push_back(std::move(op));
  }
  throw ParseError(lineno, "missing 'total:' line");
}

void write_solution_file(const Solution& s, const CostModel& cm,
                         const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_solution(s, cm, out);
}

Solution read_solution_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return read_solution(in);
}

}  // namespace hfstsp
