#include "hfstsp/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "hfstsp/split.hpp"

namespace hfstsp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Enumeration {
  Enumeration(const Cycle& h_, const CostModel& cm_, bool skip_dominated_)
      : h(h_), cm(cm_), skip_dominated(skip_dominated_) {}

  const Cycle& h;
  const CostModel& cm;
  bool skip_dominated;

  std::vector<double> best;              // best[p]: cheapest finish from p
  std::vector<std::pair<int, int>> cut;  // (next position, drone pos or -1)
  std::vector<char> done;

  double leg_sum(int a, int b) const {  // truck time of (v_a, ..., v_b)
    double t = 0.0;
    for (int l = a; l < b; ++l)
      t += cm.truck_time(h.order[l], h.order[l + 1]);
    return t;
  }

  double op_with_drone(int p, int j, int q) const {
    double truck = leg_sum(p, j - 1) + cm.truck_time(h.order[j - 1], h.order[j + 1]) +
                   leg_sum(j + 1, q);
    double drone = cm.drone_time(h.order[p], h.order[j]) +
                   cm.drone_time(h.order[j], h.order[q]);
    return std::max(truck, drone);
  }

  // o_{p,j,q} is skipped when some other triple dominates it one-way.
  bool strictly_dominated(int p, int j, int q) const {
    for (int i = p; i < q - 1; ++i)
      for (int jj = i + 1; jj < q; ++jj)
        for (int k = jj + 1; k <= q; ++k) {
          if (i == p && jj == j && k == q) continue;
          if (dominates(i, jj, k, p, j, q, h, cm) &&
              !dominates(p, j, q, i, jj, k, h, cm))
            return true;
        }
    return false;
  }

  double solve_from(int p) {
    const int last = int(h.order.size()) - 1;
    if (p == last) return 0.0;
    if (done[p]) return best[p];
    double b = kInf;
    std::pair<int, int> c{-1, -1};
    for (int q = p + 1; q <= last; ++q) {
      const double tail = solve_from(q);
      const double truck_only = leg_sum(p, q) + tail;
      if (truck_only < b) {
        b = truck_only;
        c = {q, -1};
      }
      for (int j = p + 1; j < q; ++j) {
        if (skip_dominated && strictly_dominated(p, j, q)) continue;
        const double t = op_with_drone(p, j, q) + tail;
        if (t < b) {
          b = t;
          c = {q, j};
        }
      }
    }
    best[p] = b;
    cut[p] = c;
    done[p] = 1;
    return b;
  }

  Solution run() {
    const int m = int(h.order.size());
    best.assign(m, kInf);
    cut.assign(m, {-1, -1});
    done.assign(m, 0);
    const double total = solve_from(0);

    Solution s;
    s.total_time = total;
    int p = 0;
    while (p != m - 1) {
      const auto [q, j] = cut[p];
      Operation op;
      for (int l = p; l <= q; ++l) {
        if (l == j) continue;
        op.truck_path.push_back(h.order[l]);
      }
      if (j >= 0)
        op.drone_sortie = Sortie{h.order[p], h.order[j], h.order[q]};
      s.operations.push_back(std::move(op));
      p = q;
    }
    return s;
  }
};

void check_cap(int n, int max_n, const char* what) {
  if (n > max_n)
    throw std::invalid_argument(std::string(what) + ": refused, n = " +
                                std::to_string(n) + " exceeds the cap " +
                                std::to_string(max_n) +
                                " (combinatorial blowup)");
}

}  // namespace

Solution exhaustive_hfstsp(const Cycle& h, const CostModel& cm, int max_n) {
  check_cap(h.n_customers(), max_n, "exhaustive_hfstsp");
  Enumeration e{h, cm, false};
  return e.run();
}

Solution exhaustive_hfstsp_nondominated(const Cycle& h, const CostModel& cm,
                                        int max_n) {
  check_cap(h.n_customers(), max_n, "exhaustive_hfstsp_nondominated");
  Enumeration e{h, cm, true};
  return e.run();
}

Solution exhaustive_fstsp(const Instance& inst, const CostModel& cm,
                          int max_n) {
  check_cap(inst.n, max_n, "exhaustive_fstsp");
  std::vector<int> perm(inst.n);
  std::iota(perm.begin(), perm.end(), 1);

  Solution best;
  double best_time = kInf;
  do {
    Cycle h;
    h.order.reserve(inst.n + 2);
    h.order.push_back(0);
    h.order.insert(h.order.end(), perm.begin(), perm.end());
    h.order.push_back(inst.n + 1);
    Solution s = exhaustive_hfstsp(h, cm, max_n);
    if (s.total_time < best_time) {
      best_time = s.total_time;
      best = std::move(s);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace hfstsp
