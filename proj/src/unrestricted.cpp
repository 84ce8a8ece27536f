#include "proxyrep/unrestricted.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace proxyrep {

namespace {

// Deterministic representative of a nonempty interval: the midpoint when both
// endpoints are finite, otherwise `step` inside the finite endpoint.
Rat canonical_point(const Interval& iv, const Rat& step) {
  if (iv.has_low() && iv.has_high()) {
    return iv.singleton() ? iv.low() : midpoint(iv.low(), iv.high());
  }
  if (iv.has_high()) return iv.high() - step;
  if (iv.has_low()) return iv.low() + step;
  return Rat(0);
}

Rat reconstruction_step(const Instance& inst) {
  std::vector<Rat> coords = inst.candidates();
  coords.push_back(inst.theta());
  return Rat(1, 4 * denominator_lcm(coords));
}

// Inserts a contribution into a cell's subset list, keeping the list sorted,
// disjoint, and maximal. Touching parts merge and pool their sources.
void insert_subset(std::vector<FeasibilitySubset>& cell, Interval iv,
                   std::vector<FeasibilitySource> sources) {
  std::vector<FeasibilitySubset> merged;
  merged.reserve(cell.size() + 1);
  bool placed = false;
  for (FeasibilitySubset& part : cell) {
    if (part.interval.hi < iv.lo) {
      merged.push_back(std::move(part));
    } else if (iv.hi < part.interval.lo) {
      if (!placed) {
        merged.push_back(FeasibilitySubset{iv, sources});
        placed = true;
      }
      merged.push_back(std::move(part));
    } else {
      if (part.interval.lo < iv.lo) iv.lo = part.interval.lo;
      if (iv.hi < part.interval.hi) iv.hi = part.interval.hi;
      sources.insert(sources.end(), part.sources.begin(), part.sources.end());
    }
  }
  if (!placed) merged.push_back(FeasibilitySubset{iv, sources});
  cell = std::move(merged);
}

std::vector<Interval> extended_cells(const Instance& inst, TieBreak tb) {
  std::vector<Interval> cells;
  const auto sets = voronoi_partition(inst, tb, /*extended=*/true);
  cells.reserve(sets.size());
  for (const auto& s : sets) cells.push_back(s.first());
  return cells;
}

// Positions of the rightmost proxy that satisfy the rightmost voter.
IntervalSet final_target(const Instance& inst, TieBreak tb) {
  const auto cells = voronoi_partition(inst, tb, /*extended=*/true);
  IntervalSet target;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (inst.theta_close(inst.candidate(i), inst.candidate(inst.size() - 1)))
      target = target.unite(cells[i]);
  }
  return target;
}

}  // namespace

std::size_t FeasibilityLayer::subset_count() const {
  std::size_t n = 0;
  for (const auto& cell : per_candidate) n += cell.size();
  return n;
}

IntervalSet FeasibilityLayer::as_set() const {
  std::vector<Interval> parts;
  for (const auto& cell : per_candidate) {
    for (const auto& subset : cell) parts.push_back(subset.interval);
  }
  return IntervalSet::of(std::move(parts));
}

FeasibilityLayer init_feasibility(const Instance& inst, TieBreak tb) {
  FeasibilityLayer layer;
  layer.per_candidate.resize(inst.size());
  const auto cells = extended_cells(inst, tb);
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (inst.theta_close(inst.candidate(i), inst.candidate(0))) {
      layer.per_candidate[i].push_back(FeasibilitySubset{cells[i], {}});
    }
  }
  return layer;
}

FeasibilityLayer propagate_feasibility(const Instance& inst, TieBreak tb,
                                       const FeasibilityLayer& prev) {
  const std::size_t m = inst.size();
  const auto cells = extended_cells(inst, tb);
  FeasibilityLayer next;
  next.per_candidate.resize(m);

  for (std::size_t i = 0; i < m; ++i) {
    const std::optional<Rat> below = theta_bisector_left(inst, i);
    for (std::size_t h = 0; h <= i; ++h) {
      if (prev.per_candidate[h].empty()) continue;
      if (h == i) {
        // Any position in the cell strictly right of inf F^{j-1,i} extends a
        // chain whose previous proxy shares the favorite candidate.
        const Cut& front = prev.per_candidate[h].front().interval.lo;
        Cut start = front.finite() ? Cut::above(front.coord()) : front;
        if (auto window = Interval::make(std::move(start), Cut::pos_inf())) {
          if (auto iv = Interval::make(std::max(window->lo, cells[i].lo),
                                       std::min(window->hi, cells[i].hi))) {
            insert_subset(next.per_candidate[i], *iv, {{h, 0, true}});
          }
        }
        continue;
      }
      // A predecessor whose every right neighbor is theta-close imposes no
      // bisector constraint; such chains already reach the rightmost voter at
      // a smaller count, so the transition is never needed at the optimum.
      const std::optional<Rat> above = theta_bisector_right(inst, h);
      if (!above) continue;
      if (below && *above < *below) continue;
      for (std::size_t s = 0; s < prev.per_candidate[h].size(); ++s) {
        const Interval& src = prev.per_candidate[h][s].interval;
        // The shared proxy bisector must lie weakly left of the right theta
        // bisector of c_h and weakly right of the left theta bisector of c_i;
        // reflecting the source endpoints yields the admissible window.
        Cut lo = below ? src.hi.reflected(*below) : Cut::neg_inf();
        Cut hi = src.lo.reflected(*above);
        if (auto window = Interval::make(std::move(lo), std::move(hi))) {
          if (auto iv = Interval::make(std::max(window->lo, cells[i].lo),
                                       std::min(window->hi, cells[i].hi))) {
            insert_subset(next.per_candidate[i], *iv, {{h, s, false}});
          }
        }
      }
    }
  }
  return next;
}

namespace {

// Walks the stored sources backwards from the chosen rightmost position.
Arrangement reconstruct(const Instance& inst, TieBreak tb,
                        const std::vector<FeasibilityLayer>& layers, const Rat& last) {
  const Rat step = reconstruction_step(inst);
  std::vector<Rat> positions(layers.size());
  positions.back() = last;
  for (std::size_t j = layers.size(); j-- > 1;) {
    const Rat& chosen = positions[j];
    const std::size_t i = top_of(chosen, inst, tb);
    const auto& cell = layers[j].per_candidate[i];
    const auto part = std::find_if(cell.begin(), cell.end(), [&](const FeasibilitySubset& s) {
      return s.interval.contains(chosen);
    });
    if (part == cell.end()) throw std::logic_error("chosen proxy left the feasibility set");

    std::optional<Rat> pred;
    for (const FeasibilitySource& src : part->sources) {
      const auto& fields = layers[j - 1].per_candidate[src.h];
      if (src.same_cell) {
        for (const FeasibilitySubset& s : fields) {
          if (auto iv = Interval::make(s.interval.lo, std::min(s.interval.hi, Cut::below(chosen)))) {
            pred = canonical_point(*iv, step);
            break;
          }
        }
      } else {
        const std::optional<Rat> above = theta_bisector_right(inst, src.h);
        const std::optional<Rat> below = theta_bisector_left(inst, i);
        Cut lo = below ? Cut::below(mirror(chosen, *below)) : Cut::neg_inf();
        Cut hi = above ? Cut::above(mirror(chosen, *above)) : Cut::pos_inf();
        const Interval& s = fields[src.subset].interval;
        if (auto iv = Interval::make(std::max(lo, s.lo), std::min(hi, s.hi))) {
          pred = canonical_point(*iv, step);
        }
      }
      if (pred) break;
    }
    if (!pred) throw std::logic_error("no mutually feasible predecessor found");
    positions[j - 1] = *pred;
  }
  return Arrangement(std::move(positions));
}

}  // namespace

SolveResult solve_unrestricted_optimal(const Instance& inst, TieBreak tb,
                                       UnrestrictedStats* stats) {
  const std::size_t m = inst.size();
  const IntervalSet target = final_target(inst, tb);
  const Rat step = reconstruction_step(inst);
  if (stats) *stats = UnrestrictedStats{};

  std::vector<FeasibilityLayer> layers;
  layers.push_back(init_feasibility(inst, tb));
  for (std::size_t k = 1; k <= m; ++k) {
    const std::size_t count = layers.back().subset_count();
    if (stats) {
      stats->layer_subsets.push_back(count);
      stats->within_bound = stats->within_bound && count <= 2 * k * m;
    }
    const IntervalSet hit = layers.back().as_set().intersect(target);
    if (!hit.is_empty()) {
      return SolveResult{k, reconstruct(inst, tb, layers, canonical_point(hit.first(), step))};
    }
    if (k < m) layers.push_back(propagate_feasibility(inst, tb, layers.back()));
  }
  throw std::logic_error("feasibility never reached the rightmost voter");
}

Arrangement upper_bound_unrestricted(const Instance& inst) {
  const auto steps = reference_sweep(inst);
  const std::size_t t = steps.size();
  std::vector<Rat> bis;
  bis.reserve(t);
  for (const SweepStep& s : steps) bis.push_back(s.bisector);

  Rat min_gap = inst.candidate(1) - inst.candidate(0);
  for (std::size_t i = 1; i + 1 < inst.size(); ++i)
    min_gap = std::min(min_gap, Rat(inst.candidate(i + 1) - inst.candidate(i)));
  const Rat eps = min_gap / 3;

  // All unfrozen pairs share the half-width s and expand at equal speeds;
  // a pair freezes at its current half-width when its interval collides.
  std::vector<Rat> half(t, eps);
  std::vector<bool> frozen(t, false);
  Rat s = eps;
  auto right_pos = [&](std::size_t j) { return bis[j] + (frozen[j] ? half[j] : s); };
  auto left_pos = [&](std::size_t j) { return bis[j] - (frozen[j] ? half[j] : s); };

  while (t >= 2) {
    std::optional<Rat> next;
    for (std::size_t j = 0; j + 1 < t; ++j) {
      if (frozen[j] && frozen[j + 1]) continue;
      const Rat gap = left_pos(j + 1) - right_pos(j);
      const int movers = (frozen[j] ? 0 : 1) + (frozen[j + 1] ? 0 : 1);
      const Rat delta = gap / movers;
      if (!next || delta < *next) next = delta;
    }
    if (!next) break;
    s += *next;
    for (std::size_t j = 0; j + 1 < t; ++j) {
      if (right_pos(j) == left_pos(j + 1)) {
        // Collision: the two proxies of interval j merge; both pairs freeze.
        for (std::size_t p : {j, j + 1}) {
          if (!frozen[p]) {
            half[p] = s;
            frozen[p] = true;
          }
        }
      }
    }
  }
  for (std::size_t j = 0; j < t; ++j) {
    if (!frozen[j]) half[j] = s;
  }

  std::vector<Rat> points;
  points.reserve(2 * t);
  for (std::size_t j = 0; j < t; ++j) {
    points.push_back(bis[j] - half[j]);
    points.push_back(bis[j] + half[j]);
  }
  return Arrangement::from_points(std::move(points));
}

DualResult dual_theta_for_k(const Instance& inst, unsigned k) {
  if (k < 3) throw std::invalid_argument("proxy budget must be at least 3");
  const Rat theta(1, (2 * k) / 3);
  Instance at_theta(inst.candidates(), theta);
  return DualResult{theta, upper_bound_unrestricted(at_theta)};
}

std::size_t approx_lower_bound(const Instance& inst) {
  const std::size_t t = reference_sweep(inst).size();
  return (t + 1) / 2;
}

}  // namespace proxyrep
