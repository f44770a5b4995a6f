#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bfp/cover.hpp"
#include "bfp/rational.hpp"
#include "bfp/rectilinear.hpp"

namespace bfp {

// A map on the unit square packaged with an explicit Lipschitz bound and an
// evaluator with guaranteed error 2^-p at rational points.
struct MapOracle {
  std::function<Point2(const Point2&, long)> eval;
  Rat lipschitz;
  std::string description;
};

struct MapOracle1D {
  std::function<Rat(const Rat&, long)> eval;
  Rat lipschitz;
  std::string description;
};

// Band interpolation data for one block of C_{n-1}: how the displacement
// turns from the stage-(n-1) field to the stage-n field across the collar
// depth_{n-1} in (2^-(n-1), (3/2) 2^-(n-1)).
struct BandPlan {
  bool has_band = false;
  Vec2 bulge{Rat(0), Rat(0)};  // zero vector: plain two-field blend
  std::string certificate;     // how zero-freeness was established
};

struct StageGeometry {
  size_t n = 0;
  Rat e;            // 2^-n
  Rat ramp_coeff;   // c_n = 2^-(n+2)
  Rat sat;          // c_n * e_n/4 = 2^-(2n+4), the ramp plateau
  Rat bulge_coeff;  // gamma_n = sat/4
  TargetPoint target;
  std::vector<Interval> parts;  // merged 1-d prefix union S_n
  std::vector<BandPlan> bands;  // per block of S_{n} x S_{n}, used by stage n+1
};

// The staged fixed-point-free construction over a cover: f_n is the identity
// outside C_n eroded by 2^-n, ramps points of the collar D_n toward t_n with
// magnitude c_n * d(x, shell), keeps f_{n-1} exactly on C_{n-1} eroded by
// (3/2) 2^-(n-1), and turns the displacement field between the two targets on
// the band in between. All evaluation is exact rational arithmetic.
class BaiggerMap {
public:
  BaiggerMap(CoverSpec cover, size_t stages);

  size_t stages() const { return geo_.size(); }
  const StageGeometry& stage(size_t n) const { return geo_.at(n - 1); }
  const CoverSpec& cover() const { return cover_; }

  // depth of x inside the blocks of S_n x S_n: 0 when outside C_n, otherwise
  // min distance to the sides of its block that are not on the unit boundary
  Rat depth(size_t n, const Point2& x) const;

  Vec2 displacement(size_t n, const Point2& x) const;  // f_n(x) - x, exact
  Point2 eval_stage(size_t n, const Point2& x) const { return x + displacement(n, x); }

  // limit evaluator: f_{n(p)} with n(p) = min(p + 2, stages); the geometric
  // tail bound makes the error at most 2^-p relative to the stage limit
  Point2 eval(const Point2& x, long p) const;

  Rat lipschitz_bound() const { return Rat(2); }
  MapOracle oracle() const;

  RectSet covered_set(size_t n) const;                       // C_n
  RectSet eroded_set(size_t n, const Rat& eps_factor) const; // C_n^(eps_factor * 2^-n)

private:
  Vec2 band_field(size_t n, const Point2& x, const Rat& dprev) const;
  void plan_bands(size_t n);  // decide bulges for stage n+1 over S_n blocks
  bool certify_band_block(size_t n, size_t i, size_t j, const Vec2& w) const;

  CoverSpec cover_;
  std::vector<StageGeometry> geo_;
};

// L infinity unit vector; requires v != 0
inline Vec2 unit_inf(const Vec2& v) {
  Rat m = v.norm_inf();
  return {v.x / m, v.y / m};
}

}  // namespace bfp
