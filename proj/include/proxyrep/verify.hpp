#pragma once

#include "proxyrep/geometry.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace proxyrep {

// Witness that an arrangement is not theta-representative: a voter whose
// nearest proxy has a theta-far favorite.
struct Violation {
  Rat voter;
  std::size_t voter_top;
  Rat proxy;
  std::size_t proxy_top;
};

// Voronoi cells of the proxies restricted to [0,1], one per proxy. Cells of
// proxies far outside [0,1] may be empty.
std::vector<IntervalSet> proxy_voronoi_cells(const Arrangement& arr, TieBreak tb);

// Exact decision of theta-representation: nullopt when the arrangement
// represents every voter in [0,1], otherwise a canonical Violation (the
// midpoint of the leftmost offending region).
std::optional<Violation> verify_arrangement(const Instance& inst, const Arrangement& arr,
                                            TieBreak tb);

// Adjacent theta-far candidate pairs whose bisector coincides with no
// adjacent-proxy bisector; a nonempty answer dooms the arrangement.
std::vector<std::pair<std::size_t, std::size_t>> check_bisector_coincidence(
    const Instance& inst, const Arrangement& arr);

// Sampled check of the representation property on the uniform grid l/resolution
// together with perturbed bisector points. A Violation is sound; a clean pass
// is only as strong as the grid.
std::optional<Violation> grid_oracle_verify(const Instance& inst, const Arrangement& arr,
                                            TieBreak tb, unsigned resolution);

}  // namespace proxyrep
