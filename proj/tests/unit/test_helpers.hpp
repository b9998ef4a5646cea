#pragma once

#include <utility>
#include <vector>

#include "hfstsp/instancegen.hpp"
#include "hfstsp/model.hpp"

namespace hfstsp::test {

inline Instance make_instance(std::vector<Point> pts, double alpha) {
  Instance inst;
  inst.n = int(pts.size()) - 1;
  inst.coords = std::move(pts);
  inst.alpha = alpha;
  inst.validate();
  return inst;
}

inline Cycle make_cycle(std::vector<int> order) {
  Cycle h{std::move(order)};
  h.validate();
  return h;
}

inline Cycle identity_cycle(int n) {
  Cycle h;
  for (int i = 0; i <= n + 1; ++i) h.order.push_back(i);
  return h;
}

// Depot at 0, customers at x = 3 and 6 on the x axis.
inline Instance collinear3(double alpha) {
  return make_instance({{0, 0}, {3, 0}, {6, 0}}, alpha);
}

}  // namespace hfstsp::test
