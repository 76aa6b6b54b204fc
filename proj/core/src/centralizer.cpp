#include "gaugeorbit/centralizer.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace gaugeorbit {

std::string to_string(OrbitType t) {
  switch (t) {
    case OrbitType::Full: return "full";
    case OrbitType::U1: return "u1";
    case OrbitType::Center: return "center";
  }
  return "invalid";
}

OrbitType orbit_type_from_string(const std::string& s) {
  if (s == "full") return OrbitType::Full;
  if (s == "u1") return OrbitType::U1;
  if (s == "center") return OrbitType::Center;
  throw std::invalid_argument("unknown orbit type: " + s);
}

Vec3 canonical_axis(Vec3 d) {
  if (d.x != 0) return d.x > 0 ? d : -d;
  if (d.y != 0) return d.y > 0 ? d : -d;
  if (d.z != 0) return d.z > 0 ? d : -d;
  throw std::invalid_argument("canonical_axis: zero vector");
}

CentralizerDesc centralizer_su2(const Quat& a, const Tolerance& tol) {
  require_unit(a, tol.eps_unit, "centralizer_su2");
  const Vec3 v = a.vec();
  const double n = norm(v);
  if (n <= tol.eps_null) return {CentralizerKind::Full, std::nullopt};
  return {CentralizerKind::Line, canonical_axis((1.0 / n) * v)};
}

CentralizerDesc centralizer_tuple(std::span<const Quat> t, const Tolerance& tol) {
  if (t.empty()) throw std::invalid_argument("centralizer_tuple: empty tuple");
  std::optional<Vec3> ref;
  for (const Quat& q : t) {
    const CentralizerDesc d = centralizer_su2(q, tol);
    if (d.kind == CentralizerKind::Full) continue;
    if (!ref) {
      ref = d.axis;
      continue;
    }
    if (norm(cross(*ref, *d.axis)) >= tol.eps_null) return {CentralizerKind::Center, std::nullopt};
  }
  if (!ref) return {CentralizerKind::Full, std::nullopt};
  return {CentralizerKind::Line, ref};
}

namespace {

Eigen::MatrixXd stacked_commutant_map(std::span<const Quat> t) {
  Eigen::MatrixXd m(3 * static_cast<Eigen::Index>(t.size()), 3);
  const Vec3 basis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (int j = 0; j < 3; ++j) {
      const Vec3 r = rotate_by(t[i], basis[j]) - basis[j];
      m(3 * static_cast<Eigen::Index>(i) + 0, j) = r.x;
      m(3 * static_cast<Eigen::Index>(i) + 1, j) = r.y;
      m(3 * static_cast<Eigen::Index>(i) + 2, j) = r.z;
    }
  }
  return m;
}

}  // namespace

int commutant_dim(std::span<const Quat> t, const Tolerance& tol) {
  if (t.empty()) throw std::invalid_argument("commutant_dim: empty tuple");
  for (const Quat& q : t) require_unit(q, tol.eps_unit, "commutant_dim");
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked_commutant_map(t));
  int dim = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) < tol.eps_null) ++dim;
  return dim;
}

double commutant_margin(std::span<const Quat> t) {
  if (t.empty()) throw std::invalid_argument("commutant_margin: empty tuple");
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked_commutant_map(t));
  return svd.singularValues()(svd.singularValues().size() - 1);
}

bool is_generic(std::span<const Quat> t, const Tolerance& tol) {
  return centralizer_tuple(t, tol).kind == CentralizerKind::Center;
}

bool is_generic(std::span<const U1Element> t, const Tolerance&) {
  if (t.empty()) throw std::invalid_argument("is_generic: empty tuple");
  return true;
}

OrbitType orbit_type_of(CentralizerKind kind) {
  switch (kind) {
    case CentralizerKind::Full: return OrbitType::Full;
    case CentralizerKind::Line: return OrbitType::U1;
    case CentralizerKind::Center: return OrbitType::Center;
  }
  throw std::logic_error("orbit_type_of: invalid kind");
}

OrbitType orbit_type(std::span<const Quat> t, const Tolerance& tol) {
  return orbit_type_of(centralizer_tuple(t, tol).kind);
}

OrbitType orbit_type(std::span<const U1Element> t, const Tolerance&) {
  if (t.empty()) throw std::invalid_argument("orbit_type: empty tuple");
  return OrbitType::Center;
}

Quat sample_centralizer_element(const CentralizerDesc& desc, CounterRng& rng) {
  switch (desc.kind) {
    case CentralizerKind::Full: return haar_su2(rng);
    case CentralizerKind::Line: return axis_angle(kTwoPi * rng.uniform(), *desc.axis);
    case CentralizerKind::Center: return rng.coin_flip() ? kQuatOne : Quat{-1, 0, 0, 0};
  }
  throw std::logic_error("sample_centralizer_element: invalid kind");
}

}  // namespace gaugeorbit
