#include "proxyrep/interval_set.hpp"

#include <algorithm>

namespace proxyrep {

IntervalSet IntervalSet::of(Interval iv) {
  IntervalSet s;
  s.parts_.push_back(std::move(iv));
  return s;
}

IntervalSet IntervalSet::of(std::vector<Interval> ivs) {
  std::sort(ivs.begin(), ivs.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  IntervalSet s;
  for (Interval& iv : ivs) {
    // Touching parts merge: [a,b) followed by [b,c) has no missing point.
    if (!s.parts_.empty() && iv.lo <= s.parts_.back().hi) {
      if (s.parts_.back().hi < iv.hi) s.parts_.back().hi = std::move(iv.hi);
    } else {
      s.parts_.push_back(std::move(iv));
    }
  }
  return s;
}

IntervalSet IntervalSet::span(const std::optional<Rat>& low, bool low_open,
                              const std::optional<Rat>& high, bool high_open) {
  auto iv = Interval::span(low, low_open, high, high_open);
  return iv ? of(std::move(*iv)) : empty();
}

bool IntervalSet::contains(const Rat& x) const {
  for (const Interval& iv : parts_) {
    if (Cut::above(x) <= iv.hi) return iv.contains(x);
  }
  return false;
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  std::vector<Interval> merged = parts_;
  merged.insert(merged.end(), other.parts_.begin(), other.parts_.end());
  return of(std::move(merged));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  IntervalSet out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < parts_.size() && j < other.parts_.size()) {
    const Interval& a = parts_[i];
    const Interval& b = other.parts_[j];
    const Cut& lo = a.lo < b.lo ? b.lo : a.lo;
    const Cut& hi = a.hi < b.hi ? a.hi : b.hi;
    if (auto iv = Interval::make(lo, hi)) out.parts_.push_back(std::move(*iv));
    if (a.hi < b.hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

IntervalSet IntervalSet::complement() const {
  // Cut space is self-dual: the gap after part k runs from parts[k].hi up to
  // parts[k+1].lo, with the same cut values bounding it.
  IntervalSet out;
  Cut lo = Cut::neg_inf();
  for (const Interval& iv : parts_) {
    if (auto gap = Interval::make(lo, iv.lo)) out.parts_.push_back(std::move(*gap));
    lo = iv.hi;
  }
  if (auto gap = Interval::make(lo, Cut::pos_inf())) out.parts_.push_back(std::move(*gap));
  return out;
}

IntervalSet IntervalSet::reflected(const Rat& b) const {
  IntervalSet out;
  out.parts_.reserve(parts_.size());
  for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
    out.parts_.push_back(it->reflected(b));
  }
  return out;
}

}  // namespace proxyrep
