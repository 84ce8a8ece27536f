#include "proxyrep/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace proxyrep {

namespace {

void require_theta(const Rat& theta) {
  if (!(theta > 0 && theta < 1)) throw std::invalid_argument("theta must lie strictly between 0 and 1");
}

// Smallest integer p with 1/p <= theta, i.e. ceil(1/theta); p >= 2.
BigInt coverage_index(const Rat& theta) {
  const BigInt num = numerator(theta);
  const BigInt den = denominator(theta);
  return (den + num - 1) / num;
}

}  // namespace

Instance gen_lower_restricted(const Rat& theta) {
  require_theta(theta);
  const BigInt p = coverage_index(theta);
  const bool odd = (p % 2) != 0;
  // Chosen so the candidate span comes out to exactly 1 for either parity.
  const Rat eps = odd ? Rat(1 - (p - 1) * theta) / Rat(5 * (p - 1), 2)
                      : Rat(1 - (p - 1) * theta) / Rat(5 * p - 6, 2);

  std::vector<Rat> candidates;
  Rat c(0);
  candidates.push_back(c);
  for (BigInt i = 1; i < p; ++i) {
    c += theta + eps;
    candidates.push_back(c);
    c += (i % 2) != 0 ? eps : 2 * eps;
    candidates.push_back(c);
  }
  if (candidates.back() != 1) throw std::logic_error("lower-bound family span is not 1");
  return Instance(std::move(candidates), theta);
}

Instance gen_lower_unrestricted(const Rat& theta) {
  require_theta(theta);
  const BigInt q = coverage_index(theta) - 1;  // candidates at i/q, all pairs theta-far
  std::vector<Rat> candidates;
  for (BigInt i = 0; i <= q; ++i) candidates.emplace_back(i, q);
  return Instance(std::move(candidates), theta);
}

CounterexampleResult evenly_spaced_counterexample(const Rat& theta, unsigned k) {
  require_theta(theta);
  if (k < 2) throw std::invalid_argument("evenly spaced counterexample needs at least two proxies");

  std::vector<Rat> proxies;
  for (unsigned l = 0; l < k; ++l) proxies.emplace_back(l, k - 1);
  Arrangement evenly(std::move(proxies));

  // Grid cell [ (l-1)/(k-1), l/(k-1) ] whose interior extends beyond theta.
  const Rat scaled = theta * (k - 1);
  const BigInt l = numerator(scaled) / denominator(scaled) + 1;
  const Rat cell_right(l, k - 1);
  const Rat eps = (cell_right - theta) / 2;

  // Pick x in (theta, theta+eps) dodging the finitely many points whose half
  // coincides with a proxy bisector.
  std::vector<Rat> forbidden;
  for (BigInt i = 1; i <= l; ++i) forbidden.emplace_back(2 * i - 1, k - 1);
  Rat x;
  for (unsigned d = 2;; ++d) {
    x = theta + eps / d;
    if (std::find(forbidden.begin(), forbidden.end(), x) == forbidden.end()) break;
  }
  Instance inst({Rat(0), x, Rat(1)}, theta);
  return CounterexampleResult{std::move(inst), std::move(evenly)};
}

}  // namespace proxyrep
