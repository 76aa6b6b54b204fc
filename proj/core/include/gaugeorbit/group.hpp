#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "gaugeorbit/errors.hpp"

namespace gaugeorbit {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Numerical policy shared by the classifiers and canonical forms.
///   eps_unit     accepted unit-norm slack on input quaternions
///   eps_null     singular values / axis cross products below this count as zero
///   eps_eq       element equality
///   eps_generic  margin under which a configuration counts as numerically thin
struct Tolerance {
  double eps_unit = 1e-9;
  double eps_null = 1e-7;
  double eps_eq = 1e-8;
  double eps_generic = 1e-6;

  void validate() const;  // throws std::invalid_argument
};

struct Vec3 {
  double x = 0, y = 0, z = 0;

  friend constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend constexpr Vec3 operator*(double s, Vec3 v) { return {s * v.x, s * v.y, s * v.z}; }
  friend constexpr Vec3 operator-(Vec3 v) { return {-v.x, -v.y, -v.z}; }
  friend constexpr bool operator==(Vec3 a, Vec3 b) = default;
};

constexpr double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 v) { return std::sqrt(dot(v, v)); }

/// Unit quaternion w + xI + yJ + zK, i.e. the 2x2 matrix
/// [[w + ix, y + iz], [-y + iz, w - ix]].
struct Quat {
  double w = 1, x = 0, y = 0, z = 0;

  constexpr Vec3 vec() const { return {x, y, z}; }
  constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }

  // Values already unit to working precision are returned bit-identical, so
  // folding a product over exact identity factors does not perturb the
  // remaining factor.
  Quat normalized() const;

  friend constexpr bool operator==(const Quat&, const Quat&) = default;
};

inline constexpr Quat kQuatOne{1, 0, 0, 0};
inline constexpr Quat kQuatI{0, 1, 0, 0};
inline constexpr Quat kQuatJ{0, 0, 1, 0};
inline constexpr Quat kQuatK{0, 0, 0, 1};

/// Throws NonUnitInput when |q|^2 deviates from 1 by more than ~2*eps_unit.
void require_unit(const Quat& q, double eps_unit, const char* where);

/// Quaternion product a*b, renormalized. Throws NonUnitInput.
Quat compose(const Quat& a, const Quat& b);

/// Conjugate quaternion (w, -x, -y, -z). Throws NonUnitInput.
Quat inverse(const Quat& a);

/// Conjugation c^+ a c via
///   a0 + a_vec + 2( <a,c> c - <c,c> a + c0 (a x c) ).
/// The real part of the result equals the real part of a. Throws NonUnitInput.
Quat adjoint(const Quat& a, const Quat& c);

/// Half the matrix trace, i.e. the w component clamped to [-1, 1]; a complete
/// conjugation invariant of a single element.
double trace_class(const Quat& a);

/// The linear action of adjoint(., c) on imaginary parts; valid for any
/// 3-vector, not just unit ones.
Vec3 rotate_by(const Quat& c, const Vec3& a);

/// cos(theta) + sin(theta) * axis_hat. |axis| must be nonzero.
Quat axis_angle(double theta, Vec3 axis);

/// Exponential chart at the identity: v -> cos|v| + sin|v| * v_hat.
Quat su2_exp(Vec3 v);

/// Euclidean distance in R^4. +1 and -1 are distinct group elements and far
/// apart in this metric.
double dist(const Quat& a, const Quat& b);

/// Characters of the spin-1/2 and spin-1 representations.
inline double chi_half(const Quat& q) { return 2.0 * q.w; }
inline double chi_one(const Quat& q) { return 4.0 * q.w * q.w - 1.0; }

/// Element of the circle group. Stored as a 64-bit fraction of a full turn so
/// that composition and inversion are exact; the public angle is radians in
/// [0, 2*pi). Constructing from radians quantizes to the nearest turn unit
/// (relative error below 1e-19).
class U1Element {
 public:
  constexpr U1Element() = default;

  static U1Element from_angle(double radians);
  static constexpr U1Element from_turns(std::uint64_t t) {
    U1Element e;
    e.turns_ = t;
    return e;
  }

  double angle() const;  // [0, 2*pi)
  constexpr std::uint64_t turns() const { return turns_; }

  friend constexpr bool operator==(U1Element, U1Element) = default;

 private:
  std::uint64_t turns_ = 0;
};

U1Element compose(U1Element a, U1Element b);  // exact
U1Element inverse(U1Element a);               // exact

/// Wrapped angular distance in radians, in [0, pi].
double dist(U1Element a, U1Element b);

/// Ordered tuples of group elements under simultaneous conjugation. k is
/// fixed by construction; operations reject empty tuples.
using SU2Tuple = std::vector<Quat>;
using U1Tuple = std::vector<U1Element>;

/// Componentwise conjugation (t o g)_i = g^-1 t_i g.
SU2Tuple conjugate_tuple(std::span<const Quat> t, const Quat& g);

/// Max componentwise distance.
double tuple_dist(std::span<const Quat> a, std::span<const Quat> b);
double tuple_dist(std::span<const U1Element> a, std::span<const U1Element> b);

}  // namespace gaugeorbit
