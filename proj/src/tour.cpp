#include "hfstsp/tour.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace hfstsp {

Cycle nearest_neighbor(const Instance& inst, const CostModel& cm) {
  const int n = inst.n;
  std::vector<char> visited(n + 1, 0);
  Cycle h;
  h.order.reserve(n + 2);
  h.order.push_back(0);
  int cur = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    double best_t = std::numeric_limits<double>::infinity();
    for (int c = 1; c <= n; ++c) {
      if (visited[c]) continue;
      const double t = cm.truck_time(cur, c);
      if (t < best_t) {  // strict: ties keep the smaller id
        best_t = t;
        best = c;
      }
    }
    visited[best] = 1;
    h.order.push_back(best);
    cur = best;
  }
  h.order.push_back(n + 1);
  return h;
}

Cycle two_opt_improve(const Cycle& h, const CostModel& cm, int max_passes) {
  Cycle out = h;
  auto& v = out.order;
  const int n = out.n_customers();
  for (int pass = 0; pass < max_passes; ++pass) {
    bool improved = false;
    for (int i = 1; i < n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        // Reversing v[i..j] replaces legs (i-1,i) and (j,j+1).
        const double delta = cm.truck_time(v[i - 1], v[j]) +
                             cm.truck_time(v[i], v[j + 1]) -
                             cm.truck_time(v[i - 1], v[i]) -
                             cm.truck_time(v[j], v[j + 1]);
        if (delta < -1e-12) {
          std::reverse(v.begin() + i, v.begin() + j + 1);
          improved = true;
        }
      }
    }
    if (!improved) break;
  }
  return out;
}

namespace {

// Prim over nodes 0..n; parent[0] = -1. Equal keys keep the smallest id.
std::vector<int> prim_parents(const Instance& inst, const CostModel& cm) {
  const int m = inst.n + 1;
  std::vector<double> key(m, std::numeric_limits<double>::infinity());
  std::vector<int> parent(m, -1);
  std::vector<char> in_tree(m, 0);
  key[0] = 0.0;
  for (int round = 0; round < m; ++round) {
    int u = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int v = 0; v < m; ++v)
      if (!in_tree[v] && key[v] < best) {
        best = key[v];
        u = v;
      }
    in_tree[u] = 1;
    for (int v = 0; v < m; ++v) {
      if (in_tree[v]) continue;
      const double w = cm.truck_time(u, v);
      if (w < key[v]) {
        key[v] = w;
        parent[v] = u;
      }
    }
  }
  return parent;
}

}  // namespace

Cycle mst_double_tree(const Instance& inst, const CostModel& cm) {
  const int n = inst.n;
  const auto parent = prim_parents(inst, cm);
  std::vector<std::vector<int>> children(n + 1);
  for (int v = 1; v <= n; ++v) children[parent[v]].push_back(v);  // ascending

  Cycle h;
  h.order.reserve(n + 2);
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    h.order.push_back(u);
    const auto& ch = children[u];
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  h.order.push_back(n + 1);
  return h;
}

double mst_weight(const Instance& inst, const CostModel& cm) {
  const auto parent = prim_parents(inst, cm);
  double w = 0.0;
  for (int v = 1; v <= inst.n; ++v) w += cm.truck_time(parent[v], v);
  return w;
}

double cycle_length(const Cycle& h, const CostModel& cm) {
  return truck_path_time(h.order, cm);
}

void write_cycle(const Cycle& h, std::ostream& out) {
  for (std::size_t i = 0; i < h.order.size(); ++i)
    out << (i ? " " : "") << h.order[i];
  out << "\n";
}

Cycle read_cycle(std::istream& in, int n) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream is(line);
    Cycle h;
    std::string tok;
    while (is >> tok) {
      int v;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || p != tok.data() + tok.size())
        throw ParseError(lineno, "non-numeric node id: " + tok);
      h.order.push_back(v);
    }
    if (h.order.empty()) continue;  // blank line
    if (int(h.order.size()) != n + 2)
      throw ParseError(lineno, "cycle has " + std::to_string(h.order.size()) +
                                   " nodes, expected " + std::to_string(n + 2));
    try {
      h.validate();
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
    return h;
  }
  throw ParseError(lineno, "no cycle line found");
}

void write_cycle_file(const Cycle& h, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_cycle(h, out);
}

Cycle read_cycle_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return read_cycle(in, n);
}

}  // namespace hfstsp
