#pragma once

#include "proxyrep/restricted.hpp"

#include <cstddef>
#include <vector>

namespace proxyrep {

// Origin of a feasibility subset: either expansion within the same extended
// cell (any strictly smaller predecessor position works) or the reflection
// window of one maximal convex subset of the previous layer.
struct FeasibilitySource {
  std::size_t h;       // candidate index of the predecessor's cell
  std::size_t subset;  // index into the previous layer's cell-h list (reflection only)
  bool same_cell;
};

struct FeasibilitySubset {
  Interval interval;
  std::vector<FeasibilitySource> sources;
};

// One layer F^j of the feasibility computation, decomposed by candidate:
// per_candidate[i] holds the maximal convex subsets of F^{j,i}, sorted and
// disjoint. Merging extremal subsets keeps the total count within 2*j*m.
struct FeasibilityLayer {
  std::vector<std::vector<FeasibilitySubset>> per_candidate;

  std::size_t subset_count() const;
  IntervalSet as_set() const;
};

// F^1: extended cells of every candidate theta-close to c_1.
FeasibilityLayer init_feasibility(const Instance& inst, TieBreak tb);

// F^j from F^{j-1}: same-cell expansion plus reflection windows through the
// theta bisectors for every mutually feasible candidate pair.
FeasibilityLayer propagate_feasibility(const Instance& inst, TieBreak tb,
                                       const FeasibilityLayer& prev);

struct UnrestrictedStats {
  std::vector<std::size_t> layer_subsets;  // subset count per layer
  bool within_bound = true;                // count <= 2*j*m throughout
};

// Iterative deepening over the proxy count: the first layer whose feasibility
// set reaches a cell theta-close to c_m yields the optimum, and the
// arrangement is rebuilt backwards through the stored sources.
SolveResult solve_unrestricted_optimal(const Instance& inst, TieBreak tb,
                                       UnrestrictedStats* stats = nullptr);

// Expand-and-merge upper bound: one proxy pair per sweep bisector, expanded
// symmetrically at equal speeds; colliding proxies merge and freeze their
// pairs. At most (3/2)*ceil(1/theta) proxies.
Arrangement upper_bound_unrestricted(const Instance& inst);

struct DualResult {
  Rat theta;
  Arrangement arrangement;
};

// Spends a budget of k >= 3 proxies to guarantee theta = 1/floor(2k/3).
DualResult dual_theta_for_k(const Instance& inst, unsigned k);

// ceil(t/2) for the sweep's t bisectors: alternate reference segments are
// disjoint, so this certifies a lower bound on the optimal proxy count.
std::size_t approx_lower_bound(const Instance& inst);

}  // namespace proxyrep
