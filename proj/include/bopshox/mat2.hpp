#pragma once

#include <array>
#include <cmath>

namespace bopshox {

// Dense real 2x2 matrix with value semantics.  All the linear algebra this
// project needs fits in closed form at this size.
struct Mat2 {
  double a11 = 0.0, a12 = 0.0;
  double a21 = 0.0, a22 = 0.0;

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2 diag(double d1, double d2) { return {d1, 0.0, 0.0, d2}; }

  double det() const { return a11 * a22 - a12 * a21; }

  Mat2 transpose() const { return {a11, a21, a12, a22}; }

  Mat2 inverse() const {
    const double d = det();
    return {a22 / d, -a12 / d, -a21 / d, a11 / d};
  }

  std::array<double, 2> apply(double x, double y) const {
    return {a11 * x + a12 * y, a21 * x + a22 * y};
  }

  double max_abs() const {
    return std::max(std::max(std::fabs(a11), std::fabs(a12)),
                    std::max(std::fabs(a21), std::fabs(a22)));
  }
};

inline Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
          a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

inline Mat2 operator-(const Mat2& a, const Mat2& b) {
  return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
}

}  // namespace bopshox
