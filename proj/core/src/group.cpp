#include "gaugeorbit/group.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace gaugeorbit {

namespace {

constexpr double kNormSkipBand = 32 * std::numeric_limits<double>::epsilon();

// 2*pi / 2^64 and its reciprocal.
constexpr double kTurnToRadians = kTwoPi * 0x1p-64;
constexpr double kRadiansToTurn = 0x1p64 / kTwoPi;

}  // namespace

void Tolerance::validate() const {
  if (!(eps_unit > 0) || !(eps_null > 0) || !(eps_eq > 0) || !(eps_generic > 0))
    throw std::invalid_argument("Tolerance: all thresholds must be strictly positive");
  if (eps_eq < eps_unit)
    throw std::invalid_argument("Tolerance: eps_eq must be >= eps_unit");
}

Quat Quat::normalized() const {
  const double n2 = norm2();
  if (std::abs(n2 - 1.0) <= kNormSkipBand) return *this;
  const double inv = 1.0 / std::sqrt(n2);
  return {w * inv, x * inv, y * inv, z * inv};
}

void require_unit(const Quat& q, double eps_unit, const char* where) {
  // |n^2 - 1| ~ 2 * | |q| - 1 | near the unit sphere.
  if (std::abs(q.norm2() - 1.0) > 2.0 * eps_unit)
    throw NonUnitInput(std::string(where) + ": quaternion is not unit length");
}

Quat compose(const Quat& a, const Quat& b) {
  const double eps = Tolerance{}.eps_unit;
  require_unit(a, eps, "compose");
  require_unit(b, eps, "compose");
  const Quat r{a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
               a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
               a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
               a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  return r.normalized();
}

Quat inverse(const Quat& a) {
  require_unit(a, Tolerance{}.eps_unit, "inverse");
  return {a.w, -a.x, -a.y, -a.z};
}

Vec3 rotate_by(const Quat& c, const Vec3& a) {
  const Vec3 cv = c.vec();
  return a + 2.0 * (dot(a, cv) * cv - dot(cv, cv) * a + c.w * cross(a, cv));
}

Quat adjoint(const Quat& a, const Quat& c) {
  const double eps = Tolerance{}.eps_unit;
  require_unit(a, eps, "adjoint");
  require_unit(c, eps, "adjoint");
  const Vec3 v = rotate_by(c, a.vec());
  return Quat{a.w, v.x, v.y, v.z}.normalized();
}

double trace_class(const Quat& a) {
  require_unit(a, Tolerance{}.eps_unit, "trace_class");
  return std::clamp(a.w, -1.0, 1.0);
}

Quat axis_angle(double theta, Vec3 axis) {
  const double n = norm(axis);
  if (n == 0.0) throw std::invalid_argument("axis_angle: zero axis");
  const double s = std::sin(theta) / n;
  return Quat{std::cos(theta), s * axis.x, s * axis.y, s * axis.z}.normalized();
}

Quat su2_exp(Vec3 v) {
  const double n = norm(v);
  if (n == 0.0) return kQuatOne;
  const double s = std::sin(n) / n;
  return Quat{std::cos(n), s * v.x, s * v.y, s * v.z}.normalized();
}

double dist(const Quat& a, const Quat& b) {
  const double dw = a.w - b.w, dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
  return std::sqrt(dw * dw + dx * dx + dy * dy + dz * dz);
}

U1Element U1Element::from_angle(double radians) {
  if (!std::isfinite(radians)) throw std::invalid_argument("U1Element: non-finite angle");
  double a = std::fmod(radians, kTwoPi);
  if (a < 0) a += kTwoPi;
  if (a >= kTwoPi) a = 0;
  const double scaled = a * kRadiansToTurn;
  if (scaled >= 0x1p64) return from_turns(~0ull);
  return from_turns(static_cast<std::uint64_t>(scaled));
}

double U1Element::angle() const {
  double a = static_cast<double>(turns_) * kTurnToRadians;
  if (a >= kTwoPi) a = std::nextafter(kTwoPi, 0.0);
  return a;
}

U1Element compose(U1Element a, U1Element b) {
  return U1Element::from_turns(a.turns() + b.turns());
}

U1Element inverse(U1Element a) { return U1Element::from_turns(0ull - a.turns()); }

double dist(U1Element a, U1Element b) {
  const std::uint64_t d = a.turns() - b.turns();
  const std::uint64_t m = std::min(d, 0ull - d);
  return static_cast<double>(m) * kTurnToRadians;
}

SU2Tuple conjugate_tuple(std::span<const Quat> t, const Quat& g) {
  SU2Tuple out;
  out.reserve(t.size());
  for (const Quat& q : t) out.push_back(adjoint(q, g));
  return out;
}

double tuple_dist(std::span<const Quat> a, std::span<const Quat> b) {
  if (a.size() != b.size()) throw DomainMismatch("tuple_dist: length mismatch");
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, dist(a[i], b[i]));
  return d;
}

double tuple_dist(std::span<const U1Element> a, std::span<const U1Element> b) {
  if (a.size() != b.size()) throw DomainMismatch("tuple_dist: length mismatch");
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, dist(a[i], b[i]));
  return d;
}

}  // namespace gaugeorbit
