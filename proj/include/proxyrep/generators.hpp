#pragma once

#include "proxyrep/geometry.hpp"

namespace proxyrep {

// Worst-case family for restricted positioning: candidate pairs separated by
// theta+eps with alternating in-pair gaps eps and 2*eps. Any representative
// restricted arrangement needs proxies on all but the last candidate.
Instance gen_lower_restricted(const Rat& theta);

// Worst-case family for unrestricted positioning: ceil(1/theta) evenly spaced
// candidates whose adjacent pairs are all theta-far.
Instance gen_lower_unrestricted(const Rat& theta);

// Three-candidate instance {0, x, 1} on which the evenly spaced k-proxy
// arrangement (also returned) fails: x is chosen just beyond theta so that
// the theta-far bisector x/2 avoids every equidistant-proxy bisector.
struct CounterexampleResult {
  Instance instance;
  Arrangement evenly_spaced;
};
CounterexampleResult evenly_spaced_counterexample(const Rat& theta, unsigned k);

}  // namespace proxyrep
