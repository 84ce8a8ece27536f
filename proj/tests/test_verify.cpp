#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "proxyrep/verify.hpp"
#include "support.hpp"

using namespace proxyrep;

namespace {

Rat q(int num, int den = 1) { return Rat(num, den); }

Instance fig4() { return Instance({q(0), q(11, 30), q(19, 30), q(1)}, q(1, 3)); }

Arrangement fig4_three() { return Arrangement({q(-2, 15), q(1, 2), q(17, 15)}); }

Arrangement on_candidates(const Instance& inst) {
  return Arrangement(inst.candidates());
}

}  // namespace

TEST_CASE("proxy voronoi cells restricted to the segment") {
  const auto cells = proxy_voronoi_cells(Arrangement({q(1, 6), q(5, 6)}), TieBreak::Left);
  CHECK(cells[0] == IntervalSet::span(q(0), false, q(1, 2), false));
  CHECK(cells[1] == IntervalSet::span(q(1, 2), true, q(1), false));

  const auto outside = proxy_voronoi_cells(fig4_three(), TieBreak::Left);
  CHECK(outside[0] == IntervalSet::span(q(0), false, q(11, 60), false));
  CHECK(outside[1] == IntervalSet::span(q(11, 60), true, q(49, 60), false));
  CHECK(outside[2] == IntervalSet::span(q(49, 60), true, q(1), false));

  const auto lone = proxy_voronoi_cells(Arrangement({q(1, 2)}), TieBreak::Left);
  CHECK(lone[0] == IntervalSet::span(q(0), false, q(1), false));

  // A proxy far outside [0,1] owns an empty cell.
  const auto far = proxy_voronoi_cells(Arrangement({q(-9), q(1, 2)}), TieBreak::Left);
  CHECK(far[0].is_empty());
  CHECK(far[1] == IntervalSet::span(q(0), false, q(1), false));
}

TEST_CASE("the three-proxy arrangement represents the four-candidate instance") {
  for (const TieBreak tb : {TieBreak::Left, TieBreak::Right}) {
    CHECK(!verify_arrangement(fig4(), fig4_three(), tb));
  }
  // The mirror-image position 7/6 + 1/30 misses the far pair's bisector and
  // fails; only 7/6 - 1/30 = 17/15 verifies.
  const Arrangement wrong({q(-2, 15), q(1, 2), q(6, 5)});
  for (const TieBreak tb : {TieBreak::Left, TieBreak::Right}) {
    CHECK(verify_arrangement(fig4(), wrong, tb));
  }
}

TEST_CASE("proxies on every candidate always verify") {
  testing::Rng rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const Instance inst = testing::random_instance(rng, 8, 48);
    CHECK(!verify_arrangement(inst, on_candidates(inst), TieBreak::Left));
    CHECK(!verify_arrangement(inst, on_candidates(inst), TieBreak::Right));
  }
}

TEST_CASE("the two-proxy arrangement misses the off-center candidate") {
  const Instance inst({q(0), q(9, 20), q(1)}, q(2, 5));
  const Arrangement ends({q(0), q(1)});
  const auto violation = verify_arrangement(inst, ends, TieBreak::Left);
  REQUIRE(violation);
  // Witness: midpoint of the leftmost offending region (9/40, 1/2].
  CHECK(violation->voter == q(29, 80));
  CHECK(violation->voter_top == 1);
  CHECK(violation->proxy == q(0));
  CHECK(violation->proxy_top == 0);
}

TEST_CASE("bisector coincidence screen") {
  const Instance inst({q(0), q(9, 20), q(1)}, q(2, 5));
  const auto offending = check_bisector_coincidence(inst, Arrangement({q(0), q(1)}));
  CHECK(offending == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}});
  CHECK(check_bisector_coincidence(fig4(), fig4_three()).empty());
  CHECK(check_bisector_coincidence(fig4(), on_candidates(fig4())).empty());
}

TEST_CASE("grid oracle examples") {
  testing::Rng rng(22);
  const Instance inst = testing::random_instance(rng, 6, 24);
  CHECK(!grid_oracle_verify(inst, on_candidates(inst), TieBreak::Left, 100));
  CHECK(grid_oracle_verify(Instance({q(0), q(9, 20), q(1)}, q(2, 5)), Arrangement({q(0), q(1)}),
                           TieBreak::Left, 40));
  CHECK(!grid_oracle_verify(fig4(), fig4_three(), TieBreak::Left, 60));
  CHECK_THROWS_AS(grid_oracle_verify(fig4(), fig4_three(), TieBreak::Left, 1),
                  std::invalid_argument);
}

TEST_CASE("exact and grid verdicts agree") {
  testing::Rng rng(23);
  for (int trial = 0; trial < 120; ++trial) {
    const Instance inst = testing::random_instance(rng, 8, 60);
    const Arrangement arr = testing::random_arrangement(rng, 6, 20);
    for (const TieBreak tb : {TieBreak::Left, TieBreak::Right}) {
      const auto exact = verify_arrangement(inst, arr, tb);
      for (const unsigned resolution : {17u, 48u}) {
        const auto sampled = grid_oracle_verify(inst, arr, tb, resolution);
        if (sampled) CHECK(exact);
        if (!exact) CHECK(!sampled);
      }
      // The screen is sound: a missing bisector implies a violation.
      if (!check_bisector_coincidence(inst, arr).empty()) CHECK(exact);
      // Violations satisfy their own invariants under re-checking.
      if (exact) {
        CHECK(exact->voter_top == top_of(exact->voter, inst, tb));
        CHECK(exact->proxy == arr.proxy(nearest_proxy(exact->voter, arr, tb)));
        CHECK(exact->proxy_top == top_of(exact->proxy, inst, tb));
        CHECK(rat_abs(inst.candidate(exact->voter_top) - inst.candidate(exact->proxy_top)) >
              inst.theta());
      }
    }
  }
}

TEST_CASE("verification is deterministic") {
  const Instance inst({q(0), q(9, 20), q(1)}, q(2, 5));
  const Arrangement ends({q(0), q(1)});
  const auto first = verify_arrangement(inst, ends, TieBreak::Left);
  const auto second = verify_arrangement(inst, ends, TieBreak::Left);
  REQUIRE(first);
  REQUIRE(second);
  CHECK(first->voter == second->voter);
  CHECK(first->proxy == second->proxy);
}
