#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>

namespace bfp {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. Canonical reduced form with positive denominator is
// maintained by the backing boost type; all arithmetic is exact.
class Rat {
public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}
  Rat(const BigInt& n) : v_(n) {}
  Rat(long n, long d) : v_(BigInt(n), BigInt(d)) {}
  Rat(const BigInt& n, const BigInt& d) : v_(n, d) {
    if (d == 0) throw std::invalid_argument("Rat: zero denominator");
  }

  static Rat from_string(const std::string& s);

  BigInt num() const { return boost::multiprecision::numerator(v_); }
  BigInt den() const { return boost::multiprecision::denominator(v_); }

  // 2^-k for k >= 0
  static Rat pow2(long k) {
    BigInt one = 1;
    if (k >= 0) return Rat(one << k, 1);
    return Rat(one, one << (-k));
  }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.v_ + b.v_); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.v_ - b.v_); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.v_ * b.v_); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.v_ == 0) throw std::invalid_argument("Rat: division by zero");
    return Rat(a.v_ / b.v_);
  }
  Rat operator-() const { return Rat(-v_); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  int sign() const { return v_.sign(); }
  Rat abs() const { return v_ < 0 ? Rat(-v_) : *this; }

  // serialized exact form "p/q"
  std::string str() const { return num().str() + "/" + den().str(); }

  // decimal rendering with fixed fractional digits, round toward zero;
  // only for SVG/plot coordinates, never for stored artifacts
  std::string decimal(int digits) const;

  double to_double() const { return v_.convert_to<double>(); }

private:
  explicit Rat(const boost::multiprecision::cpp_rational& v) : v_(v) {}
  boost::multiprecision::cpp_rational v_;
};

inline Rat min(const Rat& a, const Rat& b) { return a <= b ? a : b; }
inline Rat max(const Rat& a, const Rat& b) { return a >= b ? a : b; }
inline Rat clamp(const Rat& x, const Rat& lo, const Rat& hi) {
  return min(max(x, lo), hi);
}

inline Rat Rat::from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(BigInt(s), BigInt(1));
  return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

inline std::string Rat::decimal(int digits) const {
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  BigInt scaled = num() * scale / den();  // truncates toward zero
  bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  std::string d = scaled.str();
  while ((int)d.size() <= digits) d.insert(d.begin(), '0');
  std::string out = d.substr(0, d.size() - digits) + "." + d.substr(d.size() - digits);
  return neg ? "-" + out : out;
}

// Point in the unit square, exact coordinates.
struct Point2 {
  Rat x, y;
  friend bool operator==(const Point2& a, const Point2& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }
};

inline Rat linf(const Point2& a, const Point2& b) {
  return max((a.x - b.x).abs(), (a.y - b.y).abs());
}

// displacement/vector value
struct Vec2 {
  Rat x, y;
  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(const Rat& s, const Vec2& v) { return {s * v.x, s * v.y}; }
  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
  Rat norm_inf() const { return max(x.abs(), y.abs()); }
  bool is_zero() const { return x.sign() == 0 && y.sign() == 0; }
};

inline Vec2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator+(const Point2& p, const Vec2& v) { return {p.x + v.x, p.y + v.y}; }
inline Rat cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

// counter-clockwise quarter turn about the center of the unit square
inline Point2 rotate90(const Point2& p) { return Point2{Rat(1) - p.y, p.x}; }

// Closed axis-aligned box; degenerate (zero width/height) boxes are allowed,
// they represent segments and points.
struct Box2 {
  Rat x_lo, x_hi, y_lo, y_hi;
  bool valid() const { return x_lo <= x_hi && y_lo <= y_hi; }
  bool contains(const Point2& p) const {
    return x_lo <= p.x && p.x <= x_hi && y_lo <= p.y && p.y <= y_hi;
  }
  bool contains_strict_interior(const Point2& p) const {
    return x_lo < p.x && p.x < x_hi && y_lo < p.y && p.y < y_hi;
  }
  Rat width() const { return x_hi - x_lo; }
  Rat height() const { return y_hi - y_lo; }
  friend bool operator==(const Box2& a, const Box2& b) {
    return a.x_lo == b.x_lo && a.x_hi == b.x_hi && a.y_lo == b.y_lo && a.y_hi == b.y_hi;
  }
};

}  // namespace bfp
