#pragma once

#include "proxyrep/elections.hpp"
#include "proxyrep/geometry.hpp"

#include <random>

namespace proxyrep::testing {

using Rng = std::mt19937_64;

// Rational in [0,1] with denominator at most max_den.
Rat random_rat01(Rng& rng, unsigned max_den);

// Threshold strictly inside (0,1); optionally confined to (lo, hi).
Rat random_theta(Rng& rng, unsigned max_den);
Rat random_theta_in(Rng& rng, unsigned max_den, const Rat& lo, const Rat& hi);

// Instance with 2..max_m candidates whose coordinates have denominators at
// most max_den.
Instance random_instance(Rng& rng, std::size_t max_m, unsigned max_den);
Instance random_instance_themed(Rng& rng, std::size_t max_m, unsigned max_den, const Rat& theta_lo,
                                const Rat& theta_hi);

// Instance whose candidates and theta are all multiples of 1/den; keeps the
// coordinate lattice coarse enough for grid searches.
Instance random_instance_common_den(Rng& rng, std::size_t max_m, unsigned den);

// 1..max_k distinct proxy positions in [-1/2, 3/2].
Arrangement random_arrangement(Rng& rng, std::size_t max_k, unsigned max_den);

// 1..max_n voters in [0,1]; duplicates allowed.
Profile random_profile(Rng& rng, std::size_t max_n, unsigned max_den);

}  // namespace proxyrep::testing
