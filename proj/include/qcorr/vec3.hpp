#pragma once

#include <array>
#include <cmath>

namespace qcorr {

/// Plain 3-vector used for Bloch vectors, observable axes and correlation
/// diagonals. Value type, no invariants of its own.
struct Vec3 {
  std::array<double, 3> c{0.0, 0.0, 0.0};

  constexpr Vec3() = default;
  constexpr Vec3(double x, double y, double z) : c{x, y, z} {}

  constexpr double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  constexpr double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }

  constexpr Vec3 operator+(const Vec3& o) const { return {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2]}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2]}; }
  constexpr Vec3 operator-() const { return {-c[0], -c[1], -c[2]}; }
  constexpr Vec3 operator*(double s) const { return {c[0] * s, c[1] * s, c[2] * s}; }
  constexpr Vec3 operator/(double s) const { return {c[0] / s, c[1] / s, c[2] / s}; }

  friend constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }
};

constexpr double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

/// Component-wise product; contracting a diagonal matrix with a vector.
constexpr Vec3 hadamard(const Vec3& a, const Vec3& b) {
  return {a[0] * b[0], a[1] * b[1], a[2] * b[2]};
}

constexpr double squared_norm(const Vec3& v) { return dot(v, v); }

inline double norm(const Vec3& v) { return std::sqrt(squared_norm(v)); }

inline Vec3 normalized(const Vec3& v) {
  const double n = norm(v);
  return v / n;
}

/// Reflection through the axis `u` (unit): v -> 2(v.u)u - v. This is the
/// Bloch-sphere action of a pi rotation about u.
inline Vec3 pi_rotation(const Vec3& v, const Vec3& u) {
  return u * (2.0 * dot(v, u)) - v;
}

inline constexpr Vec3 kXAxis{1.0, 0.0, 0.0};
inline constexpr Vec3 kYAxis{0.0, 1.0, 0.0};
inline constexpr Vec3 kZAxis{0.0, 0.0, 1.0};

}  // namespace qcorr
