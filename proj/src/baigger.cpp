#include "bfp/baigger.hpp"

#include <algorithm>
#include <sstream>

#include "bfp/errors.hpp"

namespace bfp {

namespace {

// closed rational interval arithmetic, just enough for the band certificates
struct RInt {
  Rat lo, hi;
  static RInt point(const Rat& r) { return {r, r}; }
  friend RInt operator+(const RInt& a, const RInt& b) { return {a.lo + b.lo, a.hi + b.hi}; }
  friend RInt operator-(const RInt& a, const RInt& b) { return {a.lo - b.hi, a.hi - b.lo}; }
  friend RInt operator*(const RInt& a, const RInt& b) {
    Rat c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
    return {min(min(c1, c2), min(c3, c4)), max(max(c1, c2), max(c3, c4))};
  }
  RInt abs() const {
    if (lo.sign() >= 0) return *this;
    if (hi.sign() <= 0) return {-hi, -lo};
    return {Rat(0), max(-lo, hi)};
  }
  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
};

RInt imin(const RInt& a, const RInt& b) { return {min(a.lo, b.lo), min(a.hi, b.hi)}; }
RInt imax(const RInt& a, const RInt& b) { return {max(a.lo, b.lo), max(a.hi, b.hi)}; }
RInt iclamp(const RInt& a, const Rat& lo, const Rat& hi) {
  return {clamp(a.lo, lo, hi), clamp(a.hi, lo, hi)};
}
// a / b with b > 0 certified
RInt idiv_pos(const RInt& a, const RInt& b) {
  Rat c1 = a.lo / b.lo, c2 = a.lo / b.hi, c3 = a.hi / b.lo, c4 = a.hi / b.hi;
  return {min(min(c1, c2), min(c3, c4)), max(max(c1, c2), max(c3, c4))};
}

const Interval* find_part(const std::vector<Interval>& parts, const Rat& x) {
  for (const auto& p : parts)
    if (p.lo <= x && x <= p.hi) return &p;
  return nullptr;
}

Rat block_depth(const Interval& A, const Interval& B, const Point2& x) {
  Rat d(2);  // larger than any possible depth in the unit square
  if (A.lo != Rat(0)) d = min(d, x.x - A.lo);
  if (A.hi != Rat(1)) d = min(d, A.hi - x.x);
  if (B.lo != Rat(0)) d = min(d, x.y - B.lo);
  if (B.hi != Rat(1)) d = min(d, B.hi - x.y);
  return d;
}

// interval enclosure of the block depth over a box
RInt block_depth_int(const Interval& A, const Interval& B, const Box2& b) {
  RInt d = RInt::point(Rat(2));
  if (A.lo != Rat(0)) d = imin(d, RInt{b.x_lo - A.lo, b.x_hi - A.lo});
  if (A.hi != Rat(1)) d = imin(d, RInt{A.hi - b.x_hi, A.hi - b.x_lo});
  if (B.lo != Rat(0)) d = imin(d, RInt{b.y_lo - B.lo, b.y_hi - B.lo});
  if (B.hi != Rat(1)) d = imin(d, RInt{B.hi - b.y_hi, B.hi - b.y_lo});
  return d;
}

Rat block_max_depth(const Interval& A, const Interval& B) {
  Rat dx = Rat(2), dy = Rat(2);
  bool lo_in = A.lo != Rat(0), hi_in = A.hi != Rat(1);
  if (lo_in && hi_in) dx = (A.hi - A.lo) / Rat(2);
  else if (lo_in || hi_in) dx = A.hi - A.lo;
  lo_in = B.lo != Rat(0); hi_in = B.hi != Rat(1);
  if (lo_in && hi_in) dy = (B.hi - B.lo) / Rat(2);
  else if (lo_in || hi_in) dy = B.hi - B.lo;
  return min(dx, dy);
}

}  // namespace

BaiggerMap::BaiggerMap(CoverSpec cover, size_t stages) : cover_(std::move(cover)) {
  if (stages < 1) throw ArgumentError("BaiggerMap: stages >= 1");
  if (stages > cover_.intervals.size())
    throw ConstructionError("BaiggerMap: cover has too few intervals for requested stages");
  for (size_t n = 1; n <= stages; ++n) {
    StageGeometry g;
    g.n = n;
    g.e = Rat::pow2(-(long)n);
    g.ramp_coeff = Rat::pow2(-(long)n - 2);
    g.sat = g.ramp_coeff * g.e / Rat(4);
    g.bulge_coeff = g.sat / Rat(4);
    g.target = target_point(cover_, n);  // throws if the diagonal is covered
    g.parts = cover_prefix_union(cover_, n).parts();
    geo_.push_back(std::move(g));
  }
  for (size_t n = 1; n + 1 <= stages; ++n) plan_bands(n);
}

Rat BaiggerMap::depth(size_t n, const Point2& x) const {
  const StageGeometry& g = stage(n);
  const Interval* A = find_part(g.parts, x.x);
  if (!A) return Rat(0);
  const Interval* B = find_part(g.parts, x.y);
  if (!B) return Rat(0);
  return block_depth(*A, *B, x);
}

Vec2 BaiggerMap::displacement(size_t n, const Point2& x) const {
  if (n < 1 || n > geo_.size()) throw ArgumentError("displacement: stage out of range");
  const StageGeometry& g = stage(n);
  if (n >= 2) {
    const StageGeometry& gp = stage(n - 1);
    Rat dprev = depth(n - 1, x);
    Rat core = gp.e * Rat(3, 2);
    if (dprev >= core) return displacement(n - 1, x);
    if (dprev > gp.e) return band_field(n, x, dprev);
  }
  Rat d = depth(n, x);
  if (d <= g.e) return {Rat(0), Rat(0)};
  Rat rho = g.ramp_coeff * min(d - g.e, g.e / Rat(4));
  return rho * unit_inf(g.target.t - x);
}

Vec2 BaiggerMap::band_field(size_t n, const Point2& x, const Rat& dprev) const {
  const StageGeometry& g = stage(n);
  const StageGeometry& gp = stage(n - 1);
  Rat sigma = (dprev - gp.e) / (gp.e / Rat(2));  // in (0,1) on the band
  Rat rho_prev = gp.ramp_coeff * min(dprev - gp.e, gp.e / Rat(4));
  Rat A = sigma * rho_prev;
  Rat B = (Rat(1) - sigma) * g.sat;
  Vec2 u = unit_inf(gp.target.t - x);
  Vec2 v = unit_inf(g.target.t - x);
  // block-specific turning plan
  const Interval* pa = find_part(gp.parts, x.x);
  const Interval* pb = find_part(gp.parts, x.y);
  size_t bi = size_t(pa - gp.parts.data()) * gp.parts.size() + size_t(pb - gp.parts.data());
  const BandPlan& plan = gp.bands.at(bi);
  Vec2 w = plan.bulge;
  Rat wc = sigma * (Rat(1) - sigma) * g.bulge_coeff;
  return A * u + B * v + Vec2{wc * w.x, wc * w.y};
}

void BaiggerMap::plan_bands(size_t n) {
  StageGeometry& g = geo_[n - 1];
  const StageGeometry& gn = geo_[n];  // stage n+1 targets/constants
  const Rat a = g.target.v, b = gn.target.v;
  g.bands.assign(g.parts.size() * g.parts.size(), BandPlan{});

  for (size_t i = 0; i < g.parts.size(); ++i) {
    for (size_t j = 0; j < g.parts.size(); ++j) {
      BandPlan& plan = g.bands[i * g.parts.size() + j];
      const Interval& A = g.parts[i];
      const Interval& B = g.parts[j];
      if (block_max_depth(A, B) <= g.e) { plan.has_band = false; continue; }
      plan.has_band = true;
      if (a == b) { plan.certificate = "targets-equal"; continue; }
      // zeros of the plain blend need x1+x2 strictly between 2a and 2b
      Rat h_lo = A.lo + B.lo, h_hi = A.hi + B.hi;
      if (h_hi <= Rat(2) * a || h_lo >= Rat(2) * b) {
        plan.certificate = "strip-disjoint";
        continue;
      }
      // bulge needed; pick a side certified by emptiness of the unprotected
      // region, respecting inward-pointing constraints on touched edges
      bool below_possible = A.hi > B.lo;  // some x1 > x2 in the block
      bool above_possible = B.hi > A.lo;  // some x2 > x1 in the block
      auto edge_ok = [&](const Vec2& w) {
        if (A.lo == Rat(0) && w.x.sign() < 0) return false;
        if (A.hi == Rat(1) && w.x.sign() > 0) return false;
        if (B.lo == Rat(0) && w.y.sign() < 0) return false;
        if (B.hi == Rat(1) && w.y.sign() > 0) return false;
        return true;
      };
      Vec2 up{Rat(1), Rat(-1)};    // protects x2 >= x1
      Vec2 down{Rat(-1), Rat(1)};  // protects x2 <= x1
      if (!below_possible && edge_ok(up)) {
        plan.bulge = up;
        plan.certificate = "band-above-diagonal";
        continue;
      }
      if (!above_possible && edge_ok(down)) {
        plan.bulge = down;
        plan.certificate = "band-below-diagonal";
        continue;
      }
      // straddling block: certify a candidate by interval subdivision
      bool done = false;
      for (const Vec2& w : {up, down}) {
        if (!edge_ok(w)) continue;
        plan.bulge = w;
        if (certify_band_block(n, i, j, w)) {
          plan.certificate = "interval-subdivision";
          done = true;
          break;
        }
      }
      if (!done) {
        plan.bulge = {Rat(0), Rat(0)};
        if (certify_band_block(n, i, j, plan.bulge)) {
          plan.certificate = "interval-subdivision";
        } else {
          throw ConstructionError(
              "build_stage: could not certify a zero-free band field on block (" +
              std::to_string(i) + "," + std::to_string(j) + ") of stage " + std::to_string(n));
        }
      }
    }
  }
}

// Certify that the band displacement has no zero over the band of block
// (i,j) of S_n, by exact interval arithmetic and subdivision.
bool BaiggerMap::certify_band_block(size_t n, size_t i, size_t j, const Vec2& w) const {
  const StageGeometry& g = geo_[n - 1];
  const StageGeometry& gn = geo_[n];
  const Interval& A = g.parts[i];
  const Interval& B = g.parts[j];
  const Rat half = Rat(1, 2);

  struct Item { Box2 box; int depth; };
  std::vector<Item> work{{Box2{A.lo, A.hi, B.lo, B.hi}, 0}};
  const int kMaxDepth = 12;
  size_t steps = 0;
  while (!work.empty()) {
    if (++steps > 200000) return false;
    Item it = work.back();
    work.pop_back();
    RInt d = block_depth_int(A, B, it.box);
    if (d.hi <= g.e || d.lo >= g.e * Rat(3, 2)) continue;  // off the band
    RInt dband = {max(d.lo, g.e), min(d.hi, g.e * Rat(3, 2))};
    RInt sigma = iclamp((dband - RInt::point(g.e)) * RInt::point(Rat(2) / g.e), Rat(0), Rat(1));
    RInt rho = RInt::point(g.ramp_coeff) *
               imin(dband - RInt::point(g.e), RInt::point(g.e / Rat(4)));
    RInt Ac = sigma * rho;
    RInt Bc = (RInt::point(Rat(1)) - sigma) * RInt::point(gn.sat);
    auto unit_enclosure = [&](const Point2& t) -> std::pair<RInt, RInt> {
      RInt dx = RInt::point(t.x) - RInt{it.box.x_lo, it.box.x_hi};
      RInt dy = RInt::point(t.y) - RInt{it.box.y_lo, it.box.y_hi};
      RInt m = imax(dx.abs(), dy.abs());
      if (m.lo.sign() <= 0) m.lo = dband.lo;  // |t-x| >= depth on the band
      if (m.lo.sign() <= 0) return {RInt{Rat(-1), Rat(1)}, RInt{Rat(-1), Rat(1)}};
      return {idiv_pos(dx, m), idiv_pos(dy, m)};
    };
    auto [ux, uy] = unit_enclosure(g.target.t);
    auto [vx, vy] = unit_enclosure(gn.target.t);
    RInt wc = sigma * (RInt::point(Rat(1)) - sigma) * RInt::point(gn.bulge_coeff);
    RInt Vx = Ac * ux + Bc * vx + wc * RInt::point(w.x);
    RInt Vy = Ac * uy + Bc * vy + wc * RInt::point(w.y);
    if (!Vx.contains_zero() || !Vy.contains_zero()) continue;
    if (it.depth >= kMaxDepth) return false;
    Rat mx = (it.box.x_lo + it.box.x_hi) * half;
    Rat my = (it.box.y_lo + it.box.y_hi) * half;
    work.push_back({Box2{it.box.x_lo, mx, it.box.y_lo, my}, it.depth + 1});
    work.push_back({Box2{mx, it.box.x_hi, it.box.y_lo, my}, it.depth + 1});
    work.push_back({Box2{it.box.x_lo, mx, my, it.box.y_hi}, it.depth + 1});
    work.push_back({Box2{mx, it.box.x_hi, my, it.box.y_hi}, it.depth + 1});
  }
  return true;
}

Point2 BaiggerMap::eval(const Point2& x, long p) const {
  size_t n = std::min<size_t>(geo_.size(), size_t(std::max<long>(1, p + 2)));
  return eval_stage(n, x);
}

MapOracle BaiggerMap::oracle() const {
  return MapOracle{
      [this](const Point2& x, long p) { return eval(x, p); },
      lipschitz_bound(),
      "baigger(stages=" + std::to_string(stages()) + ")"};
}

RectSet BaiggerMap::covered_set(size_t n) const {
  const StageGeometry& g = stage(n);
  std::vector<Box2> boxes;
  for (const auto& A : g.parts)
    for (const auto& B : g.parts) boxes.push_back({A.lo, A.hi, B.lo, B.hi});
  return RectSet(std::move(boxes));
}

RectSet BaiggerMap::eroded_set(size_t n, const Rat& eps_factor) const {
  return covered_set(n).erode(eps_factor * stage(n).e);
}

}  // namespace bfp
