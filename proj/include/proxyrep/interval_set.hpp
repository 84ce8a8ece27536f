#pragma once

#include "proxyrep/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace proxyrep {

// Boundary position on the extended rational line. A finite cut sits either
// immediately below (side 0) or immediately above (side 1) its coordinate, so
// open/closed endpoint bookkeeping reduces to a total order:
//   -inf < below(x) < above(x) < below(y) < above(y) < +inf   whenever x < y.
class Cut {
 public:
  static Cut neg_inf() { return Cut(-1, 0, Rat(0)); }
  static Cut pos_inf() { return Cut(+1, 0, Rat(0)); }
  static Cut below(Rat x) { return Cut(0, 0, std::move(x)); }
  static Cut above(Rat x) { return Cut(0, 1, std::move(x)); }

  bool finite() const { return cls_ == 0; }
  bool is_neg_inf() const { return cls_ < 0; }
  bool is_pos_inf() const { return cls_ > 0; }
  // Coordinate of a finite cut.
  const Rat& coord() const { return x_; }
  bool above_coord() const { return side_ == 1; }

  // Mirror image through b; infinities swap sides, below/above flip.
  Cut reflected(const Rat& b) const {
    if (!finite()) return Cut(-cls_, 0, Rat(0));
    return Cut(0, static_cast<int8_t>(1 - side_), 2 * b - x_);
  }

  friend bool operator==(const Cut& a, const Cut& b) {
    if (a.cls_ != b.cls_) return false;
    if (a.cls_ != 0) return true;
    return a.side_ == b.side_ && a.x_ == b.x_;
  }
  friend bool operator<(const Cut& a, const Cut& b) {
    if (a.cls_ != b.cls_) return a.cls_ < b.cls_;
    if (a.cls_ != 0) return false;
    if (a.x_ != b.x_) return a.x_ < b.x_;
    return a.side_ < b.side_;
  }
  friend bool operator<=(const Cut& a, const Cut& b) { return a < b || a == b; }
  friend bool operator>(const Cut& a, const Cut& b) { return b < a; }
  friend bool operator>=(const Cut& a, const Cut& b) { return b <= a; }

 private:
  Cut(int8_t cls, int8_t side, Rat x) : cls_(cls), side_(side), x_(std::move(x)) {}

  int8_t cls_;
  int8_t side_;
  Rat x_;
};

// Nonempty convex set of points strictly between two cuts.
struct Interval {
  Cut lo;
  Cut hi;  // invariant: lo < hi

  // nullopt when the cut pair encloses no point.
  static std::optional<Interval> make(Cut lo, Cut hi) {
    if (!(lo < hi)) return std::nullopt;
    return Interval{std::move(lo), std::move(hi)};
  }
  static Interval point(Rat x) { return Interval{Cut::below(x), Cut::above(x)}; }
  // Closed/open interval from optional (infinite when absent) endpoints.
  static std::optional<Interval> span(const std::optional<Rat>& low, bool low_open,
                                      const std::optional<Rat>& high, bool high_open) {
    Cut lo = low ? (low_open ? Cut::above(*low) : Cut::below(*low)) : Cut::neg_inf();
    Cut hi = high ? (high_open ? Cut::below(*high) : Cut::above(*high)) : Cut::pos_inf();
    return make(std::move(lo), std::move(hi));
  }

  bool has_low() const { return lo.finite(); }
  bool has_high() const { return hi.finite(); }
  const Rat& low() const { return lo.coord(); }
  const Rat& high() const { return hi.coord(); }
  bool low_open() const { return lo.above_coord(); }
  bool high_open() const { return !hi.above_coord(); }
  bool singleton() const { return lo.finite() && hi.finite() && !lo.above_coord() && hi.above_coord() && lo.coord() == hi.coord(); }

  bool contains(const Rat& x) const { return lo <= Cut::below(x) && Cut::above(x) <= hi; }

  Interval reflected(const Rat& b) const { return Interval{hi.reflected(b), lo.reflected(b)}; }

  friend bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }
};

// Disjoint union of maximal intervals in normal form: parts sorted and
// separated by at least one missing point (parts[i].hi < parts[i+1].lo).
class IntervalSet {
 public:
  IntervalSet() = default;

  static IntervalSet empty() { return IntervalSet(); }
  static IntervalSet all() { return of(Interval{Cut::neg_inf(), Cut::pos_inf()}); }
  static IntervalSet of(Interval iv);
  static IntervalSet of(std::vector<Interval> ivs);  // normalizes
  static IntervalSet span(const std::optional<Rat>& low, bool low_open,
                          const std::optional<Rat>& high, bool high_open);
  static IntervalSet point(Rat x) { return of(Interval::point(std::move(x))); }

  bool is_empty() const { return parts_.empty(); }
  const std::vector<Interval>& parts() const { return parts_; }
  const Interval& first() const { return parts_.front(); }
  bool contains(const Rat& x) const;

  // Cuts of the extreme endpoints; require a nonempty set.
  Cut infimum() const { return parts_.front().lo; }
  Cut supremum() const { return parts_.back().hi; }

  IntervalSet unite(const IntervalSet& other) const;
  IntervalSet intersect(const IntervalSet& other) const;
  IntervalSet complement() const;
  IntervalSet reflected(const Rat& b) const;

  friend bool operator==(const IntervalSet& a, const IntervalSet& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<Interval> parts_;
};

}  // namespace proxyrep
