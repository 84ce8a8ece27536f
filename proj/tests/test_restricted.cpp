#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "proxyrep/generators.hpp"
#include "proxyrep/restricted.hpp"
#include "support.hpp"

#include <algorithm>

using namespace proxyrep;

namespace {

Rat q(int num, int den = 1) { return Rat(num, den); }

Instance fig4() { return Instance({q(0), q(11, 30), q(19, 30), q(1)}, q(1, 3)); }

bool on_candidates(const Instance& inst, const Arrangement& arr) {
  return std::all_of(arr.proxies().begin(), arr.proxies().end(), [&](const Rat& p) {
    return std::binary_search(inst.candidates().begin(), inst.candidates().end(), p);
  });
}

// 2*(1/theta - 1) when 1/theta is integral, else 2*floor(1/theta).
std::size_t worst_case(const Rat& theta) {
  const BigInt steps = denominator(theta) / numerator(theta);
  const BigInt bound = numerator(theta) == 1 ? BigInt(2 * (steps - 1)) : BigInt(2 * steps);
  return bound.convert_to<std::size_t>();
}

}  // namespace

TEST_CASE("table structure matches the recurrence") {
  testing::Rng rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const Instance inst = testing::random_instance(rng, 7, 36);
    const DpTable table = build_restricted_table(inst, TieBreak::Left);
    for (std::size_t j = 1; j <= inst.size(); ++j) {
      CHECK(table.entry(j, j));
      for (std::size_t k = j + 1; k <= inst.size(); ++k) CHECK(!table.entry(j, k));
      for (std::size_t k = 2; k < j; ++k) {
        if (!table.entry(j, k)) continue;
        const std::size_t i = table.witness(j, k);
        REQUIRE(i < j);
        CHECK(table.entry(i, k - 1));
      }
    }
  }
}

TEST_CASE("optimal restricted counts on the worked instances") {
  const SolveResult four = solve_restricted_optimal(fig4(), TieBreak::Left);
  CHECK(four.count == 4);
  CHECK(four.arrangement.proxies() == fig4().candidates());

  const SolveResult two = solve_restricted_optimal(Instance({q(0), q(1)}, q(2, 7)), TieBreak::Left);
  CHECK(two.count == 2);
  CHECK(two.arrangement.proxies() == std::vector<Rat>{q(0), q(1)});

  const Instance prop1({q(0), q(2, 5), q(7, 15), q(13, 15), q(1)}, q(1, 3));
  CHECK(solve_restricted_optimal(prop1, TieBreak::Left).count == 4);

  // A single centered proxy suffices when it is theta-close to everything.
  const SolveResult one = solve_restricted_optimal(Instance({q(0), q(1, 2), q(1)}, q(1, 2)),
                                                   TieBreak::Left);
  CHECK(one.count == 1);
  CHECK(one.arrangement.proxies() == std::vector<Rat>{q(1, 2)});
}

TEST_CASE("sweep upper bound on the worked instances") {
  const Instance five({q(0), q(1, 5), q(3, 10), q(7, 10), q(1)}, q(1, 5));
  CHECK(upper_bound_restricted(five).proxies() ==
        std::vector<Rat>{q(1, 5), q(3, 10), q(7, 10), q(1)});
  CHECK(upper_bound_restricted(Instance({q(0), q(1)}, q(1, 2))).proxies() ==
        std::vector<Rat>{q(0), q(1)});
  CHECK(upper_bound_restricted(fig4()).proxies() ==
        std::vector<Rat>{q(0), q(11, 30), q(19, 30), q(1)});

  const auto steps = reference_sweep(five);
  REQUIRE(steps.size() == 3);
  CHECK(steps[0].bisector == q(1, 4));
  CHECK(steps[1].bisector == q(1, 2));
  CHECK(steps[2].bisector == q(17, 20));
}

TEST_CASE("alternating-gap family") {
  const Instance third = gen_lower_restricted(q(1, 3));
  CHECK(third.candidates() == std::vector<Rat>{q(0), q(2, 5), q(7, 15), q(13, 15), q(1)});

  const Instance quarter = gen_lower_restricted(q(1, 4));
  REQUIRE(quarter.size() == 7);
  // Gap sequence theta+eps, eps, theta+eps, 2*eps, theta+eps, eps with eps = 1/28.
  const Rat eps = q(1, 28);
  const std::vector<Rat> gaps = {q(1, 4) + eps, eps, q(1, 4) + eps, 2 * eps, q(1, 4) + eps, eps};
  for (std::size_t i = 0; i + 1 < quarter.size(); ++i) {
    CHECK(quarter.candidate(i + 1) - quarter.candidate(i) == gaps[i]);
  }

  // p = 2 exercises the even-parity denominator.
  const Instance half = gen_lower_restricted(q(1, 2));
  CHECK(half.candidates() == std::vector<Rat>{q(0), q(3, 4), q(1)});

  CHECK_THROWS_AS(gen_lower_restricted(q(0)), std::invalid_argument);
  CHECK_THROWS_AS(gen_lower_restricted(q(3, 2)), std::invalid_argument);
}

TEST_CASE("lower-bound family is tight") {
  for (const Rat& theta : std::initializer_list<Rat>{q(1, 2), q(1, 3), q(2, 7), q(1, 4), q(1, 5)}) {
    const Instance inst = gen_lower_restricted(theta);
    const std::size_t opt = solve_restricted_optimal(inst, TieBreak::Left).count;
    CHECK(opt == worst_case(theta));
  }
}

TEST_CASE("subset brute force") {
  CHECK(brute_force_restricted(fig4(), TieBreak::Left).count == 4);
  CHECK(brute_force_restricted(Instance({q(0), q(1)}, q(1, 3)), TieBreak::Left).count == 2);
  const Instance prop1({q(0), q(2, 5), q(7, 15), q(13, 15), q(1)}, q(1, 3));
  CHECK(brute_force_restricted(prop1, TieBreak::Left).count == 4);
  CHECK_THROWS_AS(brute_force_restricted(fig4(), TieBreak::Left, 3), std::invalid_argument);
}

TEST_CASE("dynamic program agrees with the subset oracle") {
  testing::Rng rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    const Instance inst = testing::random_instance(rng, 7, 48);
    for (const TieBreak tb : {TieBreak::Left, TieBreak::Right}) {
      const SolveResult solved = solve_restricted_optimal(inst, tb);
      CHECK(solved.count == brute_force_restricted(inst, tb).count);
      CHECK(on_candidates(inst, solved.arrangement));
      CHECK(!verify_arrangement(inst, solved.arrangement, tb));
    }
  }
}

TEST_CASE("bound compliance and sandwich") {
  testing::Rng rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    const Instance inst = testing::random_instance(rng, 8, 60);
    const Arrangement upper = upper_bound_restricted(inst);
    CHECK(upper.size() <= worst_case(inst.theta()));
    CHECK(on_candidates(inst, upper));
    for (const TieBreak tb : {TieBreak::Left, TieBreak::Right}) {
      CHECK(!verify_arrangement(inst, upper, tb));
    }
    CHECK(solve_restricted_optimal(inst, TieBreak::Left).count <= upper.size());
  }
}
