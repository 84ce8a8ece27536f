#include "proxyrep/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace proxyrep {

Instance::Instance(std::vector<Rat> candidates, Rat theta)
    : candidates_(std::move(candidates)), theta_(std::move(theta)) {
  if (candidates_.size() < 2) throw std::invalid_argument("instance needs at least two candidates");
  for (std::size_t i = 0; i + 1 < candidates_.size(); ++i) {
    if (!(candidates_[i] < candidates_[i + 1]))
      throw std::invalid_argument("candidates must be strictly increasing");
  }
  if (candidates_.front() != 0) throw std::invalid_argument("leftmost candidate must be 0");
  if (candidates_.back() != 1) throw std::invalid_argument("rightmost candidate must be 1");
  if (!(theta_ > 0 && theta_ < 1)) throw std::invalid_argument("theta must lie strictly between 0 and 1");
}

Arrangement::Arrangement(std::vector<Rat> proxies) : proxies_(std::move(proxies)) {
  if (proxies_.empty()) throw std::invalid_argument("arrangement needs at least one proxy");
  for (std::size_t j = 0; j + 1 < proxies_.size(); ++j) {
    if (!(proxies_[j] < proxies_[j + 1]))
      throw std::invalid_argument("proxies must be strictly increasing");
  }
}

Arrangement Arrangement::from_points(std::vector<Rat> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return Arrangement(std::move(points));
}

std::vector<Rat> Arrangement::adjacent_bisectors() const {
  std::vector<Rat> out;
  out.reserve(proxies_.size() - 1);
  for (std::size_t j = 0; j + 1 < proxies_.size(); ++j)
    out.push_back(midpoint(proxies_[j], proxies_[j + 1]));
  return out;
}

namespace {

// Index of the point of `pts` (sorted, distinct) nearest to x; exact midpoint
// ties resolve to the rule's side.
std::size_t nearest_index(const std::vector<Rat>& pts, const Rat& x, TieBreak tb) {
  std::size_t lo = 0;
  std::size_t hi = pts.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const Rat b = midpoint(pts[mid], pts[mid + 1]);
    const bool goes_left = tb == TieBreak::Left ? x <= b : x < b;
    if (goes_left) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

}  // namespace

std::size_t top_of(const Rat& x, const Instance& inst, TieBreak tb) {
  return nearest_index(inst.candidates(), x, tb);
}

std::size_t nearest_proxy(const Rat& v, const Arrangement& arr, TieBreak tb) {
  return nearest_index(arr.proxies(), v, tb);
}

std::vector<Rat> candidate_bisectors(const Instance& inst) {
  std::vector<Rat> out;
  out.reserve(inst.size() - 1);
  for (std::size_t i = 0; i + 1 < inst.size(); ++i)
    out.push_back(midpoint(inst.candidate(i), inst.candidate(i + 1)));
  return out;
}

std::vector<IntervalSet> voronoi_partition(const Instance& inst, TieBreak tb, bool extended) {
  const std::vector<Rat> bis = candidate_bisectors(inst);
  const std::size_t m = inst.size();
  std::vector<IntervalSet> cells;
  cells.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    Cut lo = i == 0 ? (extended ? Cut::neg_inf() : Cut::below(Rat(0)))
                    : (tb == TieBreak::Left ? Cut::above(bis[i - 1]) : Cut::below(bis[i - 1]));
    Cut hi = i == m - 1 ? (extended ? Cut::pos_inf() : Cut::above(Rat(1)))
                        : (tb == TieBreak::Left ? Cut::above(bis[i]) : Cut::below(bis[i]));
    auto iv = Interval::make(std::move(lo), std::move(hi));
    cells.push_back(iv ? IntervalSet::of(std::move(*iv)) : IntervalSet::empty());
  }
  return cells;
}

std::pair<IntervalSet, IntervalSet> infeasible_regions(const Instance& inst, std::size_t i,
                                                       TieBreak tb) {
  const auto cells = voronoi_partition(inst, tb, /*extended=*/true);
  IntervalSet left;
  IntervalSet right;
  for (std::size_t l = 0; l < inst.size(); ++l) {
    if (inst.candidate(l) < inst.candidate(i) - inst.theta()) left = left.unite(cells[l]);
    if (inst.candidate(l) > inst.candidate(i) + inst.theta()) right = right.unite(cells[l]);
  }
  return {std::move(left), std::move(right)};
}

std::optional<Rat> theta_bisector_right(const Instance& inst, std::size_t h) {
  const Rat limit = inst.candidate(h) + inst.theta();
  std::size_t l = h;
  while (l + 1 < inst.size() && inst.candidate(l + 1) <= limit) ++l;
  if (l + 1 == inst.size()) return std::nullopt;
  return midpoint(inst.candidate(l), inst.candidate(l + 1));
}

std::optional<Rat> theta_bisector_left(const Instance& inst, std::size_t h) {
  const Rat limit = inst.candidate(h) - inst.theta();
  std::size_t l = h;
  while (l > 0 && inst.candidate(l - 1) >= limit) --l;
  if (l == 0) return std::nullopt;
  return midpoint(inst.candidate(l - 1), inst.candidate(l));
}

}  // namespace proxyrep
