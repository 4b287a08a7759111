#pragma once

#include <cmath>

// Arithmetic of reduced quaternions a0 + a1*e1 + a2*e2 and of the vector
// subspace R*e1 + R*e2.  The e3 component appears only transiently in full
// quaternion products, since the reduced algebra is not closed under
// multiplication.

namespace contrakernel {

struct Vec2 {
  double v1 = 0.0;
  double v2 = 0.0;

  Vec2 operator+(const Vec2& o) const { return {v1 + o.v1, v2 + o.v2}; }
  Vec2 operator-(const Vec2& o) const { return {v1 - o.v1, v2 - o.v2}; }
  Vec2 operator-() const { return {-v1, -v2}; }
  Vec2 operator*(double c) const { return {v1 * c, v2 * c}; }
  double norm() const { return std::hypot(v1, v2); }
};

inline Vec2 operator*(double c, const Vec2& v) { return v * c; }

struct ReducedQuaternion {
  double a0 = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;

  ReducedQuaternion() = default;
  ReducedQuaternion(double s, double e1, double e2) : a0(s), a1(e1), a2(e2) {}
  ReducedQuaternion(double s, const Vec2& v) : a0(s), a1(v.v1), a2(v.v2) {}

  ReducedQuaternion operator+(const ReducedQuaternion& o) const {
    return {a0 + o.a0, a1 + o.a1, a2 + o.a2};
  }
  ReducedQuaternion operator-(const ReducedQuaternion& o) const {
    return {a0 - o.a0, a1 - o.a1, a2 - o.a2};
  }
  ReducedQuaternion operator-() const { return {-a0, -a1, -a2}; }
  ReducedQuaternion operator*(double c) const { return {a0 * c, a1 * c, a2 * c}; }
  double norm() const { return std::sqrt(a0 * a0 + a1 * a1 + a2 * a2); }
};

inline ReducedQuaternion operator*(double c, const ReducedQuaternion& q) { return q * c; }

struct Quaternion {
  double a0 = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;

  double norm() const { return std::sqrt(a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3); }
};

inline double sc(const ReducedQuaternion& q) { return q.a0; }
inline Vec2 vec(const ReducedQuaternion& q) { return {q.a1, q.a2}; }
inline ReducedQuaternion conj(const ReducedQuaternion& q) { return {q.a0, -q.a1, -q.a2}; }

// Standard quaternion product with e1*e2 = e3.
inline Quaternion quat_mul(const Quaternion& a, const Quaternion& b) {
  return {a.a0 * b.a0 - a.a1 * b.a1 - a.a2 * b.a2 - a.a3 * b.a3,
          a.a0 * b.a1 + a.a1 * b.a0 + a.a2 * b.a3 - a.a3 * b.a2,
          a.a0 * b.a2 - a.a1 * b.a3 + a.a2 * b.a0 + a.a3 * b.a1,
          a.a0 * b.a3 + a.a1 * b.a2 - a.a2 * b.a1 + a.a3 * b.a0};
}

inline Quaternion embed(const ReducedQuaternion& q) { return {q.a0, q.a1, q.a2, 0.0}; }
inline Quaternion embed(const Vec2& v) { return {0.0, v.v1, v.v2, 0.0}; }

// Linear involution v* = v2*e1 + v1*e2, equal to -e1*v*e2.
inline Vec2 star(const Vec2& v) { return {v.v2, v.v1}; }

// Quarter turn v2*e1 - v1*e2, equal to the product v*e3.  It pairs the
// vector parts of monogenic functions with the basic contragenics.
inline Vec2 perp(const Vec2& v) { return {v.v2, -v.v1}; }

}  // namespace contrakernel
