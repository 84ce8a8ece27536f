#include "support.hpp"

#include <algorithm>
#include <set>

namespace proxyrep::testing {

namespace {

unsigned uniform(Rng& rng, unsigned lo, unsigned hi) {
  return std::uniform_int_distribution<unsigned>(lo, hi)(rng);
}

}  // namespace

Rat random_rat01(Rng& rng, unsigned max_den) {
  const unsigned den = uniform(rng, 1, max_den);
  return Rat(uniform(rng, 0, den), den);
}

Rat random_theta(Rng& rng, unsigned max_den) {
  const unsigned den = uniform(rng, 2, max_den);
  return Rat(uniform(rng, 1, den - 1), den);
}

Rat random_theta_in(Rng& rng, unsigned max_den, const Rat& lo, const Rat& hi) {
  while (true) {
    Rat theta = random_theta(rng, max_den);
    if (theta > lo && theta < hi) return theta;
  }
}

Instance random_instance(Rng& rng, std::size_t max_m, unsigned max_den) {
  const std::size_t m = uniform(rng, 2, static_cast<unsigned>(max_m));
  std::set<Rat> interior;
  while (interior.size() < m - 2) {
    const unsigned den = uniform(rng, 2, max_den);
    const Rat x(uniform(rng, 1, den - 1), den);
    interior.insert(x);
  }
  std::vector<Rat> candidates;
  candidates.emplace_back(0);
  candidates.insert(candidates.end(), interior.begin(), interior.end());
  candidates.emplace_back(1);
  return Instance(std::move(candidates), random_theta(rng, max_den));
}

Instance random_instance_themed(Rng& rng, std::size_t max_m, unsigned max_den, const Rat& theta_lo,
                                const Rat& theta_hi) {
  Instance base = random_instance(rng, max_m, max_den);
  return Instance(base.candidates(), random_theta_in(rng, max_den, theta_lo, theta_hi));
}

Instance random_instance_common_den(Rng& rng, std::size_t max_m, unsigned den) {
  const std::size_t m = uniform(rng, 2, static_cast<unsigned>(max_m));
  std::set<unsigned> interior;
  while (interior.size() < m - 2) interior.insert(uniform(rng, 1, den - 1));
  std::vector<Rat> candidates;
  candidates.emplace_back(0);
  for (unsigned n : interior) candidates.emplace_back(n, den);
  candidates.emplace_back(1);
  return Instance(std::move(candidates), Rat(uniform(rng, 1, den - 1), den));
}

Arrangement random_arrangement(Rng& rng, std::size_t max_k, unsigned max_den) {
  const std::size_t k = uniform(rng, 1, static_cast<unsigned>(max_k));
  std::set<Rat> points;
  while (points.size() < k) {
    const unsigned den = uniform(rng, 1, max_den);
    points.insert(Rat(uniform(rng, 0, 2 * den), den) - Rat(1, 2));
  }
  return Arrangement(std::vector<Rat>(points.begin(), points.end()));
}

Profile random_profile(Rng& rng, std::size_t max_n, unsigned max_den) {
  const std::size_t n = uniform(rng, 1, static_cast<unsigned>(max_n));
  std::vector<Rat> voters;
  voters.reserve(n);
  for (std::size_t i = 0; i < n; ++i) voters.push_back(random_rat01(rng, max_den));
  return Profile(std::move(voters));
}

}  // namespace proxyrep::testing
