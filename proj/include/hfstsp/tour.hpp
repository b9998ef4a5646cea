#pragma once

#include <iosfwd>

#include "hfstsp/model.hpp"

namespace hfstsp {

/// Greedy construction: start at the depot and repeatedly append the
/// unvisited customer with minimum truck time from the current node, ties
/// broken by smallest node id.
Cycle nearest_neighbor(const Instance& inst, const CostModel& cm);

/// First-improvement 2-opt over segment reversals, depot endpoints fixed.
/// Stops at a local optimum or after max_passes full scans. Never increases
/// the truck-only tour length.
Cycle two_opt_improve(const Cycle& h, const CostModel& cm,
                      int max_passes = 1'000'000);

/// Prim MST rooted at the depot, preorder walk with repeated nodes
/// shortcut: the classical double-tree 2-approximation. Ties pick the
/// smallest node id; children are visited in ascending id order.
Cycle mst_double_tree(const Instance& inst, const CostModel& cm);

/// Total weight of the Prim MST over nodes 0..n (truck metric).
double mst_weight(const Instance& inst, const CostModel& cm);

/// Truck-only tour time of the cycle (the "TSP cost" of h).
double cycle_length(const Cycle& h, const CostModel& cm);

/// One line of space-separated node ids including both depot endpoints.
void write_cycle(const Cycle& h, std::ostream& out);
Cycle read_cycle(std::istream& in, int n);

void write_cycle_file(const Cycle& h, const std::string& path);
Cycle read_cycle_file(const std::string& path, int n);

}  // namespace hfstsp
