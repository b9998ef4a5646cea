#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hfstsp {

/// Thrown by the file readers; carries the 1-based line number of the
/// offending line in the message.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Point&) const = default;
};

double dist(const Point& a, const Point& b);

// Dense square matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int n, double fill) : n_(n), v_(std::size_t(n) * n, fill) {}
  double& operator()(int i, int j) { return v_[std::size_t(i) * n_ + j]; }
  double operator()(int i, int j) const { return v_[std::size_t(i) * n_ + j]; }
  int size() const { return n_; }

 private:
  int n_ = 0;
  std::vector<double> v_;
};

struct InstanceMeta {
  std::string generator;
  std::uint64_t seed = 0;
  bool operator==(const InstanceMeta&) const = default;
};

/// A delivery instance: depot (node 0) and customers 1..n on the plane.
/// Node n+1 is the terminal alias of the depot. It has no coordinate row of
/// its own, so the two depot copies can never drift apart.
struct Instance {
  int n = 0;                  ///< customer count
  std::vector<Point> coords;  ///< n+1 rows, row 0 is the depot
  double alpha = 1.0;         ///< drone-to-truck speed ratio
  std::optional<InstanceMeta> meta;

  const Point& coord(int id) const { return coords[id == n + 1 ? 0 : id]; }

  /// Throws std::invalid_argument when n < 1, alpha <= 0, or the coordinate
  /// count is not n+1.
  void validate() const;

  bool operator==(const Instance&) const = default;
};

/// Travel-time tables over all node pairs 0..n+1. For Euclidean instances
/// truck time is the plane distance and drone time is distance / alpha,
/// pointwise.
struct CostModel {
  Matrix truck;
  Matrix drone;

  double truck_time(int i, int j) const { return truck(i, j); }
  double drone_time(int i, int j) const { return drone(i, j); }
  int n_nodes() const { return truck.size(); }  // n + 2
};

CostModel build_cost_model(const Instance& inst);

/// A Hamiltonian cycle (v_0, v_1, ..., v_{n+1}) with v_0 = 0 and
/// v_{n+1} = n+1, both corresponding to the depot.
struct Cycle {
  std::vector<int> order;

  int n_customers() const { return int(order.size()) - 2; }
  void validate() const;
};

struct Sortie {
  int launch = -1;
  int customer = -1;
  int rendezvous = -1;
};

/// One truck path segment plus an optional single-customer drone sortie
/// launched at the segment's first node and retrieved at its last.
struct Operation {
  std::vector<int> truck_path;
  std::optional<Sortie> drone_sortie;
};

struct Solution {
  std::vector<Operation> operations;
  double total_time = 0.0;
};

/// Sum of consecutive truck legs. Throws on paths shorter than 2 nodes.
double truck_path_time(std::span<const int> path, const CostModel& cm);

/// max(truck time, drone time) when a sortie is present, truck time
/// otherwise. Throws on a malformed sortie.
double operation_time(const Operation& op, const CostModel& cm);

/// Sum of operation times. Throws when consecutive operations do not chain.
double solution_time(const Solution& s, const CostModel& cm);

/// True iff s is a structurally valid solution that respects the node order
/// of h: truck visits follow h, every drone customer lies strictly between
/// its launch and rendezvous in h, and every customer is served exactly
/// once. Never throws; on failure `violation`, when given, receives a short
/// description of the first problem found.
bool validate_respects(const Solution& s, const Cycle& h,
                       std::string* violation = nullptr);

/// |a - b| <= max(1e-12, rel * max(|a|, |b|))
bool nearly_equal(double a, double b, double rel = 1e-9);

}  // namespace hfstsp
