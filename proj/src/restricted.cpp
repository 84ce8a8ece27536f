#include "proxyrep/restricted.hpp"

#include <algorithm>
#include <stdexcept>

namespace proxyrep {

namespace {

// Smallest positive gap between bisectors of all (not necessarily adjacent)
// candidate pairs. Witness voters placed a third of this gap away from a
// proxy bisector are guaranteed to stay inside the Voronoi cell that contains
// the bisector's neighborhood.
Rat bisector_gap(const Instance& inst) {
  std::vector<Rat> bis;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    for (std::size_t j = i + 1; j < inst.size(); ++j) {
      bis.push_back(midpoint(inst.candidate(i), inst.candidate(j)));
    }
  }
  std::sort(bis.begin(), bis.end());
  bis.erase(std::unique(bis.begin(), bis.end()), bis.end());
  // A single bisector only occurs for m = 2, where every proxy-pair bisector
  // coincides with it and the witness path is never taken.
  if (bis.size() < 2) return inst.candidate(1) - inst.candidate(0);
  Rat best = bis[1] - bis[0];
  for (std::size_t i = 1; i + 1 < bis.size(); ++i) best = std::min(best, Rat(bis[i + 1] - bis[i]));
  return best;
}

// Decides condition (b) of the recurrence: with adjacent proxies on c_a and
// c_b, every voter between them keeps a theta-close favorite.
bool pair_condition(const Instance& inst, TieBreak tb, std::size_t a, std::size_t b,
                    const Rat& witness_eps) {
  const Rat mid = midpoint(inst.candidate(a), inst.candidate(b));
  const std::vector<Rat> adjacent = candidate_bisectors(inst);
  const auto it = std::lower_bound(adjacent.begin(), adjacent.end(), mid);
  if (it != adjacent.end() && *it == mid) {
    // The proxy bisector coincides with the bisector of c_l and c_{l+1}.
    const std::size_t l = static_cast<std::size_t>(it - adjacent.begin());
    return inst.theta_close(inst.candidate(l), inst.candidate(a)) &&
           inst.theta_close(inst.candidate(l + 1), inst.candidate(b));
  }
  // The bisector lies inside some cell; probe a witness voter on each side.
  const Rat left_top = inst.candidate(top_of(mid - witness_eps, inst, tb));
  const Rat right_top = inst.candidate(top_of(mid + witness_eps, inst, tb));
  return inst.theta_close(left_top, inst.candidate(a)) &&
         inst.theta_close(right_top, inst.candidate(b));
}

}  // namespace

DpTable build_restricted_table(const Instance& inst, TieBreak tb) {
  const std::size_t m = inst.size();
  DpTable table(m);
  const Rat eps = bisector_gap(inst) / 3;

  // A single proxy on c_j covers the prefix exactly when every candidate to
  // its left is theta-close, i.e. c_j <= theta.
  for (std::size_t j = 1; j <= m; ++j) {
    if (inst.candidate(j - 1) <= inst.theta()) table.set(j, 1, DpTable::npos);
  }
  for (std::size_t k = 2; k <= m; ++k) {
    for (std::size_t j = k; j <= m; ++j) {
      for (std::size_t i = k - 1; i < j; ++i) {
        if (!table.entry(i, k - 1)) continue;
        if (pair_condition(inst, tb, i - 1, j - 1, eps)) {
          table.set(j, k, i);
          break;
        }
      }
    }
  }
  return table;
}

SolveResult solve_restricted_optimal(const Instance& inst, TieBreak tb) {
  const std::size_t m = inst.size();
  const DpTable table = build_restricted_table(inst, tb);
  for (std::size_t k = 1; k <= m; ++k) {
    for (std::size_t j = k; j <= m; ++j) {
      if (!table.entry(j, k)) continue;
      if (!inst.theta_close(inst.candidate(j - 1), inst.candidate(m - 1))) continue;
      std::vector<Rat> proxies;
      std::size_t cur = j;
      for (std::size_t step = k; step >= 1; --step) {
        proxies.push_back(inst.candidate(cur - 1));
        cur = table.witness(cur, step);
      }
      std::reverse(proxies.begin(), proxies.end());
      return SolveResult{k, Arrangement(std::move(proxies))};
    }
  }
  throw std::logic_error("restricted table has no feasible arrangement");
}

std::vector<SweepStep> reference_sweep(const Instance& inst) {
  std::vector<SweepStep> steps;
  std::size_t ref = 0;
  while (inst.candidate(ref) + inst.theta() < 1) {
    const Rat limit = inst.candidate(ref) + inst.theta();
    std::size_t left = ref;
    while (left + 1 < inst.size() && inst.candidate(left + 1) <= limit) ++left;
    const std::size_t right = left + 1;
    steps.push_back({left, right, midpoint(inst.candidate(left), inst.candidate(right))});
    ref = right;
  }
  return steps;
}

Arrangement upper_bound_restricted(const Instance& inst) {
  std::vector<Rat> proxies;
  for (const SweepStep& step : reference_sweep(inst)) {
    proxies.push_back(inst.candidate(step.left));
    proxies.push_back(inst.candidate(step.right));
  }
  return Arrangement::from_points(std::move(proxies));
}

SolveResult brute_force_restricted(const Instance& inst, TieBreak tb, std::size_t cap) {
  const std::size_t m = inst.size();
  if (m > cap) throw std::invalid_argument("instance too large for subset brute force");
  for (std::size_t size = 1; size <= m; ++size) {
    // Lexicographic combinations of candidate indices.
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::vector<Rat> proxies;
      proxies.reserve(size);
      for (std::size_t idx : pick) proxies.push_back(inst.candidate(idx));
      Arrangement arr(std::move(proxies));
      if (!verify_arrangement(inst, arr, tb)) return SolveResult{size, std::move(arr)};
      std::size_t pos = size;
      while (pos > 0 && pick[pos - 1] == m - size + pos - 1) --pos;
      if (pos == 0) break;
      ++pick[pos - 1];
      for (std::size_t i = pos; i < size; ++i) pick[i] = pick[i - 1] + 1;
    }
  }
  throw std::logic_error("no candidate subset is representative");
}

}  // namespace proxyrep
