#pragma once

#include <cmath>

// Minimal 3D vector / unit-quaternion arithmetic used by the ego-frame
// transform. Kept dependency-free so the frame math can be cross-checked
// against an external linear-algebra library in the tests.

namespace cradle {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
inline Vec3 operator-(const Vec3& v) { return {-v.x, -v.y, -v.z}; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

// Quaternion with scalar part first. Rotations assume |q| = 1.
struct Quat {
  double w = 1.0, x = 0.0, y = 0.0, z = 0.0;
};

inline Quat operator*(const Quat& a, const Quat& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

inline Quat conjugate(const Quat& q) { return {q.w, -q.x, -q.y, -q.z}; }

inline double norm(const Quat& q) {
  return std::sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z);
}

inline Quat normalized(const Quat& q) {
  const double n = norm(q);
  return {q.w / n, q.x / n, q.y / n, q.z / n};
}

// Flips the sign so the scalar part is non-negative. The double cover makes
// q and -q the same rotation; observations use the canonical representative.
inline Quat canonical(const Quat& q) {
  if (q.w < 0.0) return {-q.w, -q.x, -q.y, -q.z};
  return q;
}

// Rotates v by unit quaternion q (q v q*).
inline Vec3 rotate(const Quat& q, const Vec3& v) {
  const Vec3 u{q.x, q.y, q.z};
  const Vec3 t = 2.0 * cross(u, v);
  return v + q.w * t + cross(u, t);
}

inline Vec3 rotate_inverse(const Quat& q, const Vec3& v) { return rotate(conjugate(q), v); }

inline Quat quat_from_axis_angle(const Vec3& axis, double angle) {
  const double n = norm(axis);
  if (n == 0.0) return {};
  const double half = 0.5 * angle;
  const double s = std::sin(half) / n;
  return {std::cos(half), s * axis.x, s * axis.y, s * axis.z};
}

// Shortest signed angular difference a - b, wrapped to (-pi, pi].
inline double wrap_angle(double a) {
  const double two_pi = 2.0 * M_PI;
  double r = std::fmod(a + M_PI, two_pi);
  if (r <= 0.0) r += two_pi;
  return r - M_PI;
}

inline double angle_diff(double a, double b) { return wrap_angle(a - b); }

}  // namespace cradle
