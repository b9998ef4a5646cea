#pragma once

#include "hfstsp/model.hpp"

namespace hfstsp {

/// Exact h-FSTSP reference solver: recursion over the next cut position and
/// the drone choice inside the segment, memoized on the start position. All
/// costs come from direct leg summation; nothing is shared with the graph
/// solvers, so the two can certify each other. Refuses n > max_n.
Solution exhaustive_hfstsp(const Cycle& h, const CostModel& cm, int max_n = 14);

/// Same enumeration but drone operations strictly dominated by another are
/// skipped: o is skipped when some other triple dominates it without being
/// dominated back. Exact cost ties are kept on both sides, since dropping
/// both directions of a tie could lose the optimum. Test support for the
/// dominance-safety property.
Solution exhaustive_hfstsp_nondominated(const Cycle& h, const CostModel& cm,
                                        int max_n = 8);

/// Exact FSTSP by minimizing the h-FSTSP over every customer ordering
/// (depot fixed at both ends). Factorial; refuses n > max_n.
Solution exhaustive_fstsp(const Instance& inst, const CostModel& cm,
                          int max_n = 7);

}  // namespace hfstsp
