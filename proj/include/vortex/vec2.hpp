#pragma once

#include <cmath>

namespace vortex {

inline constexpr double two_pi = 6.283185307179586476925286766559;

/// Point or displacement in the plane covering the torus.
struct Vec2 {
  double x1 = 0.0;
  double x2 = 0.0;

  Vec2 operator+(Vec2 o) const { return {x1 + o.x1, x2 + o.x2}; }
  Vec2 operator-(Vec2 o) const { return {x1 - o.x1, x2 - o.x2}; }
  Vec2 operator*(double s) const { return {x1 * s, x2 * s}; }
  Vec2& operator+=(Vec2 o) {
    x1 += o.x1;
    x2 += o.x2;
    return *this;
  }
  double norm() const { return std::hypot(x1, x2); }
  double sup() const { return std::max(std::abs(x1), std::abs(x2)); }
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }

/// Componentwise reduction to (-pi, pi]; used for torus distances.
inline double wrap_angle(double a) {
  double r = std::remainder(a, two_pi);
  return r <= -3.141592653589793 ? r + two_pi : r;
}

inline Vec2 wrap_displacement(Vec2 d) { return {wrap_angle(d.x1), wrap_angle(d.x2)}; }

/// 2x2 real matrix, row major.
struct Mat2 {
  double a11 = 0.0, a12 = 0.0;
  double a21 = 0.0, a22 = 0.0;

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

  double det() const { return a11 * a22 - a12 * a21; }

  Mat2 operator*(const Mat2& o) const {
    return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
            a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
  }
  Mat2 operator*(double s) const { return {a11 * s, a12 * s, a21 * s, a22 * s}; }
  Mat2 operator+(const Mat2& o) const {
    return {a11 + o.a11, a12 + o.a12, a21 + o.a21, a22 + o.a22};
  }
  Mat2 operator-(const Mat2& o) const {
    return {a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22};
  }
  Vec2 operator*(Vec2 v) const { return {a11 * v.x1 + a12 * v.x2, a21 * v.x1 + a22 * v.x2}; }

  Mat2 transpose() const { return {a11, a21, a12, a22}; }

  Mat2 inverse() const {
    double d = det();
    return {a22 / d, -a12 / d, -a21 / d, a11 / d};
  }

  double frobenius() const {
    return std::sqrt(a11 * a11 + a12 * a12 + a21 * a21 + a22 * a22);
  }
};

/// Canonical symplectic matrix: J*(a,b) = (b,-a).
inline Mat2 symplectic_j() { return {0.0, 1.0, -1.0, 0.0}; }

inline Vec2 apply_j(Vec2 grad) { return {grad.x2, -grad.x1}; }

}  // namespace vortex
