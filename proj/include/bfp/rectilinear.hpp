#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bfp/interval_set.hpp"
#include "bfp/rational.hpp"

namespace bfp {

// Axis-aligned segment, horizontal or vertical, closed; may be a point.
struct Segment {
  // horizontal: [a,b] x {c};  vertical: {c} x [a,b]
  bool horizontal;
  Rat a, b, c;
  Rat dist_inf(const Point2& p) const {
    Rat along = horizontal ? p.x : p.y;
    Rat across = horizontal ? p.y : p.x;
    Rat d_along = max(Rat(0), max(a - along, along - b));
    return max(d_along, (across - c).abs());
  }
};

// Finite union of closed axis-aligned boxes inside the unit square.
// Canonical form: maximal vertical slabs (sorted), plus degenerate residue
// boxes not absorbed by any slab; normalization is unique for a point set,
// so equality of point sets is equality of canonical box lists.
class RectSet {
public:
  RectSet() = default;
  explicit RectSet(std::vector<Box2> boxes);
  static RectSet unit_square() {
    return RectSet({Box2{Rat(0), Rat(1), Rat(0), Rat(1)}});
  }

  const std::vector<Box2>& boxes() const { return boxes_; }
  bool empty() const { return boxes_.empty(); }

  bool contains(const Point2& p) const;
  // interior relative to the unit square
  bool contains_interior_rel(const Point2& p) const;

  RectSet unite(const RectSet& o) const;
  RectSet intersect_halfplane(int axis, bool upper, const Rat& c) const;
  // this \ interior(box)
  RectSet subtract_open_box(const Box2& b) const;

  // closure of (boundary \ boundary-of-unit-square)
  std::vector<Segment> inner_boundary() const;

  // L infinity distance to the inner boundary; nullopt = +infinity
  std::optional<Rat> inner_boundary_distance(const Point2& p) const;

  // { x in W : d(x, inner boundary) >= eps };  eps > 0
  RectSet erode(const Rat& eps) const;

  // containment of a closed box in the interior relative to the unit square
  bool box_in_interior_rel(const Box2& b) const;

  Rat area() const;

  friend bool operator==(const RectSet& a, const RectSet& b) {
    return a.boxes_ == b.boxes_;
  }

private:
  void normalize();
  std::vector<Box2> boxes_;  // canonical
};

}  // namespace bfp
