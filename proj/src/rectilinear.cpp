#include "bfp/rectilinear.hpp"

#include <algorithm>
#include <stdexcept>

namespace bfp {

namespace {

struct Sweep {
  std::vector<Rat> xs;                 // sorted unique breakpoints
  std::vector<IntervalSet> slab_y;     // per open slab (xs[i], xs[i+1])
  std::vector<IntervalSet> line_y;     // per line x = xs[i]
};

Sweep build_sweep(const std::vector<Box2>& boxes) {
  Sweep sw;
  for (const auto& b : boxes) {
    sw.xs.push_back(b.x_lo);
    sw.xs.push_back(b.x_hi);
  }
  std::sort(sw.xs.begin(), sw.xs.end());
  sw.xs.erase(std::unique(sw.xs.begin(), sw.xs.end()), sw.xs.end());
  size_t n = sw.xs.size();
  if (n == 0) return sw;
  sw.slab_y.resize(n == 0 ? 0 : n - 1);
  sw.line_y.resize(n);
  for (size_t i = 0; i + 1 < n; ++i) {
    std::vector<Interval> ys;
    for (const auto& b : boxes)
      if (b.x_lo <= sw.xs[i] && b.x_hi >= sw.xs[i + 1]) ys.push_back({b.y_lo, b.y_hi});
    sw.slab_y[i].assign(std::move(ys));
  }
  for (size_t i = 0; i < n; ++i) {
    std::vector<Interval> ys;
    for (const auto& b : boxes)
      if (b.x_lo <= sw.xs[i] && sw.xs[i] <= b.x_hi) ys.push_back({b.y_lo, b.y_hi});
    sw.line_y[i].assign(std::move(ys));
  }
  return sw;
}

// relative interior within [0,1]: a neighborhood of y inside [0,1] is in s
bool rel_interior_1d(const IntervalSet& s, const Rat& y) {
  for (const auto& p : s.parts()) {
    bool lo_ok = p.lo < y || (p.lo == y && y == Rat(0));
    bool hi_ok = y < p.hi || (p.hi == y && y == Rat(1));
    if (lo_ok && hi_ok && p.lo <= y && y <= p.hi) return true;
  }
  return false;
}

}  // namespace

RectSet::RectSet(std::vector<Box2> boxes) : boxes_(std::move(boxes)) { normalize(); }

void RectSet::normalize() {
  std::erase_if(boxes_, [](const Box2& b) { return !b.valid(); });
  if (boxes_.empty()) return;
  Sweep sw = build_sweep(boxes_);
  size_t n = sw.xs.size();
  std::vector<Box2> out;

  // maximal runs of slabs with identical y-structure
  size_t i = 0;
  while (i + 1 < n) {
    if (sw.slab_y[i].empty()) { ++i; continue; }
    size_t j = i;
    while (j + 1 < n - 1 && sw.slab_y[j + 1] == sw.slab_y[i]) ++j;
    for (const auto& p : sw.slab_y[i].parts())
      out.push_back({sw.xs[i], sw.xs[j + 1], p.lo, p.hi});
    i = j + 1;
  }

  // line residue: content of a breakpoint line not absorbed by adjacent slabs
  for (size_t k = 0; k < n; ++k) {
    IntervalSet cov;
    if (k > 0) cov = cov.unite(sw.slab_y[k - 1]);
    if (k + 1 < n) cov = cov.unite(sw.slab_y[k]);
    IntervalSet res = sw.line_y[k].subtract_open(cov);
    for (const auto& p : res.parts()) {
      if (p.degenerate() && cov.contains(p.lo)) continue;
      out.push_back({sw.xs[k], sw.xs[k], p.lo, p.hi});
    }
  }

  std::sort(out.begin(), out.end(), [](const Box2& a, const Box2& b) {
    if (a.x_lo != b.x_lo) return a.x_lo < b.x_lo;
    if (a.x_hi != b.x_hi) return a.x_hi < b.x_hi;
    if (a.y_lo != b.y_lo) return a.y_lo < b.y_lo;
    return a.y_hi < b.y_hi;
  });
  boxes_ = std::move(out);
}

bool RectSet::contains(const Point2& p) const {
  for (const auto& b : boxes_)
    if (b.contains(p)) return true;
  return false;
}

bool RectSet::contains_interior_rel(const Point2& p) const {
  if (boxes_.empty()) return false;
  Sweep sw = build_sweep(boxes_);
  size_t n = sw.xs.size();
  // slabs strictly containing p.x
  for (size_t i = 0; i + 1 < n; ++i) {
    if (sw.xs[i] < p.x && p.x < sw.xs[i + 1])
      return rel_interior_1d(sw.slab_y[i], p.y);
  }
  // p.x on a breakpoint line: need relative interior on every side inside [0,1]
  for (size_t k = 0; k < n; ++k) {
    if (sw.xs[k] != p.x) continue;
    bool left_ok = (p.x == Rat(0)) || (k > 0 && rel_interior_1d(sw.slab_y[k - 1], p.y));
    bool right_ok = (p.x == Rat(1)) || (k + 1 < n && rel_interior_1d(sw.slab_y[k], p.y));
    return left_ok && right_ok;
  }
  // off every breakpoint and slab: x is outside the structure entirely
  return false;
}

RectSet RectSet::unite(const RectSet& o) const {
  std::vector<Box2> all = boxes_;
  all.insert(all.end(), o.boxes_.begin(), o.boxes_.end());
  return RectSet(std::move(all));
}

RectSet RectSet::intersect_halfplane(int axis, bool upper, const Rat& c) const {
  std::vector<Box2> out;
  for (auto b : boxes_) {
    if (axis == 0) {
      if (upper) b.x_lo = max(b.x_lo, c); else b.x_hi = min(b.x_hi, c);
    } else {
      if (upper) b.y_lo = max(b.y_lo, c); else b.y_hi = min(b.y_hi, c);
    }
    if (b.valid()) out.push_back(b);
  }
  return RectSet(std::move(out));
}

RectSet RectSet::subtract_open_box(const Box2& b) const {
  if (b.x_lo >= b.x_hi || b.y_lo >= b.y_hi) return *this;  // empty interior
  std::vector<Box2> all;
  for (const RectSet& part : {intersect_halfplane(0, false, b.x_lo),
                              intersect_halfplane(0, true, b.x_hi),
                              intersect_halfplane(1, false, b.y_lo),
                              intersect_halfplane(1, true, b.y_hi)})
    all.insert(all.end(), part.boxes().begin(), part.boxes().end());
  return RectSet(std::move(all));
}

std::vector<Segment> RectSet::inner_boundary() const {
  std::vector<Segment> segs;
  if (boxes_.empty()) return segs;
  Sweep sw = build_sweep(boxes_);
  size_t n = sw.xs.size();

  // horizontal walls of slab parts (skip walls lying on the unit boundary)
  size_t i = 0;
  while (i + 1 < n) {
    if (sw.slab_y[i].empty()) { ++i; continue; }
    size_t j = i;
    while (j + 1 < n - 1 && sw.slab_y[j + 1] == sw.slab_y[i]) ++j;
    for (const auto& p : sw.slab_y[i].parts()) {
      if (p.lo != Rat(0) && p.lo != Rat(1))
        segs.push_back({true, sw.xs[i], sw.xs[j + 1], p.lo});
      if (!p.degenerate() && p.hi != Rat(0) && p.hi != Rat(1))
        segs.push_back({true, sw.xs[i], sw.xs[j + 1], p.hi});
    }
    i = j + 1;
  }

  // vertical walls on breakpoint lines (lines x=0 and x=1 are on the unit boundary)
  for (size_t k = 0; k < n; ++k) {
    if (sw.xs[k] == Rat(0) || sw.xs[k] == Rat(1)) continue;
    const IntervalSet empty;
    const IntervalSet& yl = k > 0 ? sw.slab_y[k - 1] : empty;
    const IntervalSet& yr = k + 1 < n ? sw.slab_y[k] : empty;
    IntervalSet wall = sw.line_y[k].subtract_open(yl.intersect(yr));
    for (const auto& p : wall.parts()) {
      if (p.degenerate() && (p.lo == Rat(0) || p.lo == Rat(1))) continue;
      segs.push_back({false, p.lo, p.hi, sw.xs[k]});
    }
  }
  return segs;
}

std::optional<Rat> RectSet::inner_boundary_distance(const Point2& p) const {
  auto segs = inner_boundary();
  if (segs.empty()) return std::nullopt;
  Rat best = segs.front().dist_inf(p);
  for (size_t k = 1; k < segs.size(); ++k) best = min(best, segs[k].dist_inf(p));
  return best;
}

RectSet RectSet::erode(const Rat& eps) const {
  if (eps.sign() <= 0) throw std::invalid_argument("erode: eps must be positive");
  RectSet r = *this;
  for (const auto& s : inner_boundary()) {
    Box2 nb;
    if (s.horizontal) nb = {s.a - eps, s.b + eps, s.c - eps, s.c + eps};
    else nb = {s.c - eps, s.c + eps, s.a - eps, s.b + eps};
    r = r.subtract_open_box(nb);
  }
  return r;
}

bool RectSet::box_in_interior_rel(const Box2& b) const {
  if (!b.valid()) return true;
  // containment: adding b must not change the canonical form
  if (!(unite(RectSet({b})) == *this)) return false;
  // no contact with the (closure of the) inner boundary
  for (const auto& s : inner_boundary()) {
    Rat sx_lo = s.horizontal ? s.a : s.c;
    Rat sx_hi = s.horizontal ? s.b : s.c;
    Rat sy_lo = s.horizontal ? s.c : s.a;
    Rat sy_hi = s.horizontal ? s.c : s.b;
    if (sx_lo <= b.x_hi && b.x_lo <= sx_hi && sy_lo <= b.y_hi && b.y_lo <= sy_hi)
      return false;
  }
  return true;
}

Rat RectSet::area() const {
  Rat a(0);
  for (const auto& b : boxes_) a += b.width() * b.height();
  return a;
}

}  // namespace bfp
