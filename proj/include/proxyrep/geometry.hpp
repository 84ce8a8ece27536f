#pragma once

#include "proxyrep/interval_set.hpp"
#include "proxyrep/rational.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace proxyrep {

// Global directionally consistent tie-breaking: at an exact distance tie the
// favorite is always the left (resp. right) of the two equidistant points.
enum class TieBreak { Left, Right };

// Candidate positions c_1 < ... < c_m spanning [0,1] plus the distance
// threshold theta in (0,1). Immutable after construction.
class Instance {
 public:
  // Throws std::invalid_argument when the candidate list is not strictly
  // increasing with extremes 0 and 1, or theta lies outside (0,1).
  Instance(std::vector<Rat> candidates, Rat theta);

  const std::vector<Rat>& candidates() const { return candidates_; }
  const Rat& candidate(std::size_t i) const { return candidates_[i]; }
  std::size_t size() const { return candidates_.size(); }
  const Rat& theta() const { return theta_; }

  bool theta_close(const Rat& a, const Rat& b) const { return rat_abs(a - b) <= theta_; }

 private:
  std::vector<Rat> candidates_;
  Rat theta_;
};

// Strictly increasing proxy positions, possibly outside [0,1]; never empty.
class Arrangement {
 public:
  // Throws std::invalid_argument unless strictly increasing and nonempty.
  explicit Arrangement(std::vector<Rat> proxies);
  // Sorts and deduplicates before constructing.
  static Arrangement from_points(std::vector<Rat> points);

  const std::vector<Rat>& proxies() const { return proxies_; }
  const Rat& proxy(std::size_t j) const { return proxies_[j]; }
  std::size_t size() const { return proxies_.size(); }

  // Midpoints of adjacent proxies, strictly increasing.
  std::vector<Rat> adjacent_bisectors() const;

 private:
  std::vector<Rat> proxies_;
};

// Reflection of x about b.
inline Rat mirror(const Rat& x, const Rat& b) { return 2 * b - x; }

// Index of the candidate nearest to x (anywhere on the line); exact ties go
// to the rule's side.
std::size_t top_of(const Rat& x, const Instance& inst, TieBreak tb);

// Index of the proxy nearest to v under the same tie-breaking discipline.
std::size_t nearest_proxy(const Rat& v, const Arrangement& arr, TieBreak tb);

// The m-1 midpoints of adjacent candidate pairs.
std::vector<Rat> candidate_bisectors(const Instance& inst);

// Voronoi cells, one per candidate. Non-extended cells partition [0,1];
// extended cells partition the whole line, with the outer cells absorbing
// (-inf,0) and (1,inf).
std::vector<IntervalSet> voronoi_partition(const Instance& inst, TieBreak tb, bool extended);

// {left, right} infeasible regions of candidate i: unions of extended cells
// of candidates theta-far from c_i on each side.
std::pair<IntervalSet, IntervalSet> infeasible_regions(const Instance& inst, std::size_t i,
                                                       TieBreak tb);

// Bisector between the furthest theta-close and the closest theta-far
// candidate to the right (resp. left) of c_h; nullopt when every candidate on
// that side is theta-close.
std::optional<Rat> theta_bisector_right(const Instance& inst, std::size_t h);
std::optional<Rat> theta_bisector_left(const Instance& inst, std::size_t h);

}  // namespace proxyrep
