#pragma once

#include <algorithm>
#include <vector>

#include "bfp/rational.hpp"

namespace bfp {

// Closed 1D interval, possibly a single point (lo == hi).
struct Interval {
  Rat lo, hi;
  bool valid() const { return lo <= hi; }
  bool degenerate() const { return lo == hi; }
  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

// Finite union of closed intervals in canonical form: sorted, pairwise
// disjoint with positive gaps (touching intervals are merged).
class IntervalSet {
public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> parts) { assign(std::move(parts)); }

  void add(const Interval& iv) {
    if (!iv.valid()) return;
    parts_.push_back(iv);
    normalize();
  }

  void assign(std::vector<Interval> parts) {
    parts_ = std::move(parts);
    normalize();
  }

  const std::vector<Interval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  bool contains(const Rat& x) const {
    for (const auto& p : parts_) {
      if (p.lo <= x && x <= p.hi) return true;
      if (p.lo > x) break;
    }
    return false;
  }

  // membership in the interior relative to the real line
  bool contains_interior(const Rat& x) const {
    for (const auto& p : parts_)
      if (p.lo < x && x < p.hi) return true;
    return false;
  }

  IntervalSet unite(const IntervalSet& o) const {
    std::vector<Interval> all = parts_;
    all.insert(all.end(), o.parts_.begin(), o.parts_.end());
    return IntervalSet(std::move(all));
  }

  IntervalSet intersect(const IntervalSet& o) const {
    std::vector<Interval> out;
    for (const auto& a : parts_)
      for (const auto& b : o.parts_) {
        Rat lo = max(a.lo, b.lo), hi = min(a.hi, b.hi);
        if (lo <= hi) out.push_back({lo, hi});
      }
    return IntervalSet(std::move(out));
  }

  // this \ (lo, hi): removing an open interval keeps a closed set
  IntervalSet subtract_open(const Interval& iv) const {
    std::vector<Interval> out;
    for (const auto& p : parts_) {
      if (p.hi < iv.lo || p.lo > iv.hi) {  // disjoint (closure-wise)
        out.push_back(p);
        continue;
      }
      if (p.lo <= iv.lo) out.push_back({p.lo, min(p.hi, iv.lo)});
      if (p.hi >= iv.hi) out.push_back({max(p.lo, iv.hi), p.hi});
    }
    return IntervalSet(std::move(out));
  }

  // this \ open(other): subtract the interior of every part of `other`
  IntervalSet subtract_open(const IntervalSet& o) const {
    IntervalSet r = *this;
    for (const auto& p : o.parts_)
      if (!p.degenerate()) r = r.subtract_open(p);
    return r;
  }

  Rat total_length() const {
    Rat s(0);
    for (const auto& p : parts_) s += p.hi - p.lo;
    return s;
  }

  friend bool operator==(const IntervalSet& a, const IntervalSet& b) {
    return a.parts_ == b.parts_;
  }

private:
  void normalize() {
    std::erase_if(parts_, [](const Interval& p) { return !p.valid(); });
    std::sort(parts_.begin(), parts_.end(), [](const Interval& a, const Interval& b) {
      return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });
    std::vector<Interval> merged;
    for (const auto& p : parts_) {
      if (!merged.empty() && p.lo <= merged.back().hi) {
        merged.back().hi = max(merged.back().hi, p.hi);
      } else {
        merged.push_back(p);
      }
    }
    parts_ = std::move(merged);
  }

  std::vector<Interval> parts_;
};

}  // namespace bfp
