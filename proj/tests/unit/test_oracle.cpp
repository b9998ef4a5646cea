#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "hfstsp/instancegen.hpp"
#include "hfstsp/oracle.hpp"
#include "hfstsp/split.hpp"
#include "hfstsp/tour.hpp"
#include "test_helpers.hpp"

using namespace hfstsp;
using test::collinear3;
using test::identity_cycle;
using test::make_instance;

namespace {

Cycle cycle_of(const std::vector<int>& customers, int n) {
  Cycle h;
  h.order.push_back(0);
  h.order.insert(h.order.end(), customers.begin(), customers.end());
  h.order.push_back(n + 1);
  return h;
}

}  // namespace

TEST_CASE("exhaustive_hfstsp on hand-enumerated instances") {
  SUBCASE("1 customer: min of truck-only and drone round trip") {
    const auto inst = make_instance({{0, 0}, {3, 0}}, 3.0);
    const auto cm = build_cost_model(inst);
    const auto sol = exhaustive_hfstsp(identity_cycle(1), cm);
    CHECK(sol.total_time == doctest::Approx(2.0));
  }
  SUBCASE("immobile drone forces the tour") {
    const auto inst = collinear3(1e-9);
    const auto cm = build_cost_model(inst);
    const auto h = identity_cycle(2);
    const auto sol = exhaustive_hfstsp(h, cm);
    CHECK(sol.total_time == doctest::Approx(cycle_length(h, cm)));
  }
}

TEST_CASE("oracle caps are enforced") {
  const auto inst = generate({GenKind::uniform, 15, 2.0, 1});
  const auto cm = build_cost_model(inst);
  const auto h = nearest_neighbor(inst, cm);
  CHECK_THROWS_AS(exhaustive_hfstsp(h, cm), std::invalid_argument);
  CHECK_THROWS_AS(exhaustive_fstsp(inst, cm), std::invalid_argument);
  CHECK_NOTHROW(exhaustive_hfstsp(h, cm, 15));
}

TEST_CASE("drone option never hurts: h-FSTSP optimum <= tour cost") {
  std::uint64_t seed = 50;
  for (int rep = 0; rep < 100; ++rep) {
    const auto inst = generate({GenKind::uniform, 8, double(1 + rep % 3), seed++});
    const auto cm = build_cost_model(inst);
    const auto h = nearest_neighbor(inst, cm);
    const auto sol = exhaustive_hfstsp(h, cm);
    CHECK(sol.total_time <= cycle_length(h, cm) + 1e-9);
    std::string why;
    CHECK_MESSAGE(validate_respects(sol, h, &why), why);
    CHECK(nearly_equal(sol.total_time, solution_time(sol, cm)));
  }
}

TEST_CASE("restriction inequality: FSTSP optimum <= every h-FSTSP optimum") {
  std::uint64_t seed = 777;
  for (int rep = 0; rep < 10; ++rep) {
    const auto inst = generate({GenKind::two_center, 5, 2.0, seed++});
    const auto cm = build_cost_model(inst);
    const auto best = exhaustive_fstsp(inst, cm);

    std::vector<int> perm{1, 2, 3, 4, 5};
    do {
      const auto h = cycle_of(perm, 5);
      CHECK(best.total_time <= exhaustive_hfstsp(h, cm).total_time + 1e-9);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("n=1: FSTSP equals the single-cycle h-FSTSP") {
  const auto inst = make_instance({{0, 0}, {3, 0}}, 3.0);
  const auto cm = build_cost_model(inst);
  CHECK(exhaustive_fstsp(inst, cm).total_time ==
        doctest::Approx(exhaustive_hfstsp(identity_cycle(1), cm).total_time));
}

TEST_CASE("n=2: optimum bounded by the best truck-only tour") {
  const auto inst = generate({GenKind::uniform, 2, 1.0, 3});
  const auto cm = build_cost_model(inst);
  const double t12 = cycle_length(cycle_of({1, 2}, 2), cm);
  const double t21 = cycle_length(cycle_of({2, 1}, 2), cm);
  CHECK(exhaustive_fstsp(inst, cm).total_time <= std::min(t12, t21) + 1e-9);
}

TEST_CASE("ordering enumeration agrees with split over all cycles") {
  // exhaustive_fstsp == min over every customer ordering of the split cost
  std::uint64_t seed = 1234;
  for (int rep = 0; rep < 10; ++rep) {
    const auto inst = generate({GenKind::uniform, 5, double(1 + rep % 3), seed++});
    const auto cm = build_cost_model(inst);
    const auto best = exhaustive_fstsp(inst, cm);

    double best_split = std::numeric_limits<double>::infinity();
    std::vector<int> perm{1, 2, 3, 4, 5};
    do {
      const auto res = split_algorithm(cycle_of(perm, 5), cm);
      best_split = std::min(best_split, res.solution.total_time);
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(nearly_equal(best.total_time, best_split));
  }
}

TEST_CASE("removing dominated operations keeps the optimum") {
  std::uint64_t seed = 31000;
  const GenKind kinds[] = {GenKind::uniform, GenKind::one_center,
                           GenKind::two_center};
  for (int rep = 0; rep < 60; ++rep) {
    const int n = 4 + rep % 5;  // 4..8
    const auto inst = generate({kinds[rep % 3], n, double(1 + rep % 3), seed++});
    const auto cm = build_cost_model(inst);
    const auto h = nearest_neighbor(inst, cm);
    const auto full = exhaustive_hfstsp(h, cm);
    const auto restricted = exhaustive_hfstsp_nondominated(h, cm);
    CHECK(nearly_equal(full.total_time, restricted.total_time));
  }
}
