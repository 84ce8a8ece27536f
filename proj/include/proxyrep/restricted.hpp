#pragma once

#include "proxyrep/verify.hpp"

#include <cstddef>
#include <limits>
#include <vector>

namespace proxyrep {

// Optimal-count result together with a witness arrangement.
struct SolveResult {
  std::size_t count;
  Arrangement arrangement;
};

// Binary feasibility table for restricted positioning. entry(j,k) is true iff
// the first j candidates admit a representative arrangement of exactly k
// proxies on candidate positions whose rightmost proxy sits on c_j. Indices
// are 1-based to match the recurrence.
class DpTable {
 public:
  DpTable(std::size_t m) : m_(m), feasible_(m * m, 0), witness_(m * m, npos) {}

  std::size_t m() const { return m_; }
  bool entry(std::size_t j, std::size_t k) const { return feasible_[(j - 1) * m_ + (k - 1)] != 0; }
  // Witness predecessor index i < j with entry(i, k-1); npos for base entries.
  std::size_t witness(std::size_t j, std::size_t k) const { return witness_[(j - 1) * m_ + (k - 1)]; }

  void set(std::size_t j, std::size_t k, std::size_t witness_index) {
    feasible_[(j - 1) * m_ + (k - 1)] = 1;
    witness_[(j - 1) * m_ + (k - 1)] = witness_index;
  }

  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

 private:
  std::size_t m_;
  std::vector<uint8_t> feasible_;
  std::vector<std::size_t> witness_;
};

DpTable build_restricted_table(const Instance& inst, TieBreak tb);

// Minimum-size representative arrangement with proxies on candidate
// positions; the arrangement is reconstructed through the table's witnesses.
SolveResult solve_restricted_optimal(const Instance& inst, TieBreak tb);

// One step of the reference-candidate sweep: proxies on the furthest
// theta-close (left) and closest theta-far (right) candidates seen from the
// current reference, creating a proxy bisector at their midpoint.
struct SweepStep {
  std::size_t left;
  std::size_t right;
  Rat bisector;
};

// The full sweep, starting from c_1; never empty for theta < 1.
std::vector<SweepStep> reference_sweep(const Instance& inst);

// Constructive upper bound: proxies on both candidates of every sweep step,
// deduplicated. At most 2(1/theta - 1) proxies when 1/theta is integral,
// else at most 2*floor(1/theta).
Arrangement upper_bound_restricted(const Instance& inst);

// Exhaustive oracle over candidate subsets in increasing size order.
// Throws std::invalid_argument when m exceeds the cap.
SolveResult brute_force_restricted(const Instance& inst, TieBreak tb, std::size_t cap = 12);

}  // namespace proxyrep
