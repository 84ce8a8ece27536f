#include "proxyrep/verify.hpp"

#include <algorithm>
#include <stdexcept>

namespace proxyrep {

namespace {

// Canonical representative of a nonempty interval with finite endpoints.
Rat finite_interval_point(const Interval& iv) {
  if (iv.singleton()) return iv.low();
  return midpoint(iv.low(), iv.high());
}

Violation make_violation(const Instance& inst, const Arrangement& arr, TieBreak tb,
                         const Rat& voter) {
  const std::size_t j = nearest_proxy(voter, arr, tb);
  return Violation{voter, top_of(voter, inst, tb), arr.proxy(j),
                   top_of(arr.proxy(j), inst, tb)};
}

}  // namespace

std::vector<IntervalSet> proxy_voronoi_cells(const Arrangement& arr, TieBreak tb) {
  const std::vector<Rat> bis = arr.adjacent_bisectors();
  const std::size_t k = arr.size();
  const IntervalSet segment = IntervalSet::span(Rat(0), false, Rat(1), false);
  std::vector<IntervalSet> cells;
  cells.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    Cut lo = j == 0 ? Cut::neg_inf()
                    : (tb == TieBreak::Left ? Cut::above(bis[j - 1]) : Cut::below(bis[j - 1]));
    Cut hi = j == k - 1 ? Cut::pos_inf()
                        : (tb == TieBreak::Left ? Cut::above(bis[j]) : Cut::below(bis[j]));
    auto iv = Interval::make(std::move(lo), std::move(hi));
    cells.push_back(iv ? IntervalSet::of(std::move(*iv)).intersect(segment)
                       : IntervalSet::empty());
  }
  return cells;
}

std::optional<Violation> verify_arrangement(const Instance& inst, const Arrangement& arr,
                                            TieBreak tb) {
  const auto cells = proxy_voronoi_cells(arr, tb);
  for (std::size_t j = 0; j < arr.size(); ++j) {
    if (cells[j].is_empty()) continue;
    const std::size_t i = top_of(arr.proxy(j), inst, tb);
    const auto [left, right] = infeasible_regions(inst, i, tb);
    const IntervalSet bad = cells[j].intersect(left.unite(right));
    if (!bad.is_empty()) {
      return make_violation(inst, arr, tb, finite_interval_point(bad.first()));
    }
  }
  return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> check_bisector_coincidence(
    const Instance& inst, const Arrangement& arr) {
  const std::vector<Rat> proxy_bis = arr.adjacent_bisectors();
  std::vector<std::pair<std::size_t, std::size_t>> offending;
  for (std::size_t i = 0; i + 1 < inst.size(); ++i) {
    if (inst.theta_close(inst.candidate(i), inst.candidate(i + 1))) continue;
    const Rat b = midpoint(inst.candidate(i), inst.candidate(i + 1));
    if (!std::binary_search(proxy_bis.begin(), proxy_bis.end(), b)) offending.emplace_back(i, i + 1);
  }
  return offending;
}

std::optional<Violation> grid_oracle_verify(const Instance& inst, const Arrangement& arr,
                                            TieBreak tb, unsigned resolution) {
  if (resolution < 2) throw std::invalid_argument("grid resolution must be at least 2");

  std::vector<Rat> coords = inst.candidates();
  coords.push_back(inst.theta());
  coords.insert(coords.end(), arr.proxies().begin(), arr.proxies().end());
  const Rat shift = Rat(1, 2 * BigInt(resolution) * denominator_lcm(coords));

  std::vector<Rat> points;
  points.reserve(resolution + 1 + 4 * inst.size());
  for (unsigned l = 0; l <= resolution; ++l) points.emplace_back(l, resolution);
  auto add_perturbed = [&](const Rat& b) {
    for (const Rat& v : {Rat(b - shift), Rat(b + shift)}) {
      if (v >= 0 && v <= 1) points.push_back(v);
    }
  };
  for (const Rat& b : candidate_bisectors(inst)) add_perturbed(b);
  for (const Rat& b : arr.adjacent_bisectors()) add_perturbed(b);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  for (const Rat& v : points) {
    const std::size_t vt = top_of(v, inst, tb);
    const std::size_t j = nearest_proxy(v, arr, tb);
    const std::size_t pt = top_of(arr.proxy(j), inst, tb);
    if (!inst.theta_close(inst.candidate(vt), inst.candidate(pt))) {
      return Violation{v, vt, arr.proxy(j), pt};
    }
  }
  return std::nullopt;
}

}  // namespace proxyrep
