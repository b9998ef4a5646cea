#include "hfstsp/model.hpp"

#include <algorithm>
#include <cmath>

namespace hfstsp {

double dist(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

void Instance::validate() const {
  if (n < 1) throw std::invalid_argument("instance: n must be >= 1");
  if (!(alpha > 0.0)) throw std::invalid_argument("instance: alpha must be > 0");
  if (int(coords.size()) != n + 1)
    throw std::invalid_argument("instance: expected " + std::to_string(n + 1) +
                                " coordinate rows, got " +
                                std::to_string(coords.size()));
}

CostModel build_cost_model(const Instance& inst) {
  const int m = inst.n + 2;
  CostModel cm{Matrix(m, 0.0), Matrix(m, 0.0)};
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const double d = dist(inst.coord(i), inst.coord(j));
      cm.truck(i, j) = d;
      cm.drone(i, j) = d / inst.alpha;
    }
  }
  return cm;
}

void Cycle::validate() const {
  const int n = n_customers();
  if (n < 1) throw std::invalid_argument("cycle: too short");
  if (order.front() != 0)
    throw std::invalid_argument("cycle: must start at node 0");
  if (order.back() != n + 1)
    throw std::invalid_argument("cycle: must end at node n+1");
  std::vector<char> seen(n + 1, 0);
  for (int p = 1; p <= n; ++p) {
    const int v = order[p];
    if (v < 1 || v > n || seen[v])
      throw std::invalid_argument(
          "cycle: interior must be a permutation of 1..n");
    seen[v] = 1;
  }
}

double truck_path_time(std::span<const int> path, const CostModel& cm) {
  if (path.size() < 2)
    throw std::invalid_argument("truck path: fewer than 2 nodes");
  for (int v : path)
    if (v < 0 || v >= cm.n_nodes())
      throw std::invalid_argument("truck path: node id " + std::to_string(v) +
                                  " out of range");
  double t = 0.0;
  for (std::size_t l = 0; l + 1 < path.size(); ++l)
    t += cm.truck_time(path[l], path[l + 1]);
  return t;
}

double operation_time(const Operation& op, const CostModel& cm) {
  const double tr = truck_path_time(op.truck_path, cm);
  if (!op.drone_sortie) return tr;
  const auto& d = *op.drone_sortie;
  if (d.launch != op.truck_path.front() ||
      d.rendezvous != op.truck_path.back())
    throw std::invalid_argument(
        "operation: sortie must launch at the first truck node and rendezvous "
        "at the last");
  if (d.launch == d.customer || d.customer == d.rendezvous ||
      d.rendezvous == d.launch)
    throw std::invalid_argument("operation: sortie nodes must be distinct");
  if (d.customer < 0 || d.customer >= cm.n_nodes())
    throw std::invalid_argument("operation: drone customer out of range");
  if (std::find(op.truck_path.begin(), op.truck_path.end(), d.customer) !=
      op.truck_path.end())
    throw std::invalid_argument(
        "operation: drone customer also appears on the truck path");
  const double td =
      cm.drone_time(d.launch, d.customer) + cm.drone_time(d.customer, d.rendezvous);
  return std::max(tr, td);
}

double solution_time(const Solution& s, const CostModel& cm) {
  if (s.operations.empty())
    throw std::invalid_argument("solution: no operations");
  double t = 0.0;
  for (std::size_t l = 0; l < s.operations.size(); ++l) {
    const auto& op = s.operations[l];
    if (l > 0 &&
        s.operations[l - 1].truck_path.back() != op.truck_path.front())
      throw std::invalid_argument(
          "solution: operations " + std::to_string(l - 1) + " and " +
          std::to_string(l) + " do not chain");
    t += operation_time(op, cm);
  }
  return t;
}

bool validate_respects(const Solution& s, const Cycle& h,
                       std::string* violation) {
  const auto fail = [&](std::string m) {
    if (violation) *violation = std::move(m);
    return false;
  };
  const int n = h.n_customers();
  if (n < 1) return fail("cycle is malformed");
  if (s.operations.empty()) return fail("solution has no operations");

  std::vector<int> pos(n + 2, -1);
  for (int p = 0; p < int(h.order.size()); ++p) {
    const int v = h.order[p];
    if (v < 0 || v > n + 1) return fail("cycle contains an invalid node id");
    pos[v] = p;
  }

  for (std::size_t l = 0; l < s.operations.size(); ++l) {
    const auto& op = s.operations[l];
    const std::string at = "operation " + std::to_string(l);
    if (op.truck_path.size() < 2)
      return fail(at + ": truck path shorter than 2 nodes");
    for (int v : op.truck_path)
      if (v < 0 || v > n + 1) return fail(at + ": node id out of range");
    if (op.drone_sortie) {
      const auto& d = *op.drone_sortie;
      if (d.customer < 1 || d.customer > n)
        return fail(at + ": drone customer is not a customer node");
      if (d.launch != op.truck_path.front() ||
          d.rendezvous != op.truck_path.back())
        return fail(at + ": sortie endpoints do not match the truck path");
      if (d.launch == d.customer || d.customer == d.rendezvous ||
          d.rendezvous == d.launch)
        return fail(at + ": sortie nodes are not distinct");
      if (std::find(op.truck_path.begin(), op.truck_path.end(), d.customer) !=
          op.truck_path.end())
        return fail(at + ": drone customer also on the truck path");
    }
    if (l > 0 &&
        s.operations[l - 1].truck_path.back() != op.truck_path.front())
      return fail("operations " + std::to_string(l - 1) + " and " +
                  std::to_string(l) + " do not chain");
  }

  if (s.operations.front().truck_path.front() != h.order.front())
    return fail("first operation does not start at the depot");
  if (s.operations.back().truck_path.back() != h.order.back())
    return fail("last operation does not end at the depot");

  // Truck walk: chain joints counted once.
  std::vector<int> walk = s.operations.front().truck_path;
  for (std::size_t l = 1; l < s.operations.size(); ++l)
    walk.insert(walk.end(), s.operations[l].truck_path.begin() + 1,
                s.operations[l].truck_path.end());

  for (std::size_t i = 1; i + 1 < walk.size(); ++i)
    if (walk[i] == 0 || walk[i] == n + 1)
      return fail("depot appears inside the route");

  for (std::size_t i = 0; i + 1 < walk.size(); ++i)
    if (pos[walk[i]] >= pos[walk[i + 1]])
      return fail("truck visits " + std::to_string(walk[i]) + " and " +
                  std::to_string(walk[i + 1]) + " against the cycle order");

  std::vector<int> served(n + 1, 0);
  for (std::size_t i = 1; i + 1 < walk.size(); ++i) served[walk[i]]++;
  for (const auto& op : s.operations) {
    if (!op.drone_sortie) continue;
    const auto& d = *op.drone_sortie;
    if (!(pos[d.launch] < pos[d.customer] && pos[d.customer] < pos[d.rendezvous]))
      return fail("drone customer " + std::to_string(d.customer) +
                  " is not strictly between launch and rendezvous in the cycle");
    served[d.customer]++;
  }
  for (int c = 1; c <= n; ++c) {
    if (served[c] == 0) return fail("customer " + std::to_string(c) + " unserved");
    if (served[c] > 1)
      return fail("customer " + std::to_string(c) + " served more than once");
  }
  return true;
}

bool nearly_equal(double a, double b, double rel) {
  const double diff = std::fabs(a - b);
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return diff <= std::max(1e-12, rel * scale);
}

}  // namespace hfstsp
