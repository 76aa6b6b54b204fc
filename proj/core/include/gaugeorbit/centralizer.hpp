#pragma once

#include <optional>
#include <span>
#include <string>

#include "gaugeorbit/group.hpp"
#include "gaugeorbit/rng.hpp"

namespace gaugeorbit {

/// The three subgroups of SU(2) that arise as centralizers: the whole group,
/// a one-parameter circle subgroup {cos t + sin t * axis}, or the center
/// {+1, -1}. The axis is present iff kind == Line, unit length, with sign
/// fixed so that the first nonzero coordinate is positive.
enum class CentralizerKind { Full, Line, Center };

struct CentralizerDesc {
  CentralizerKind kind = CentralizerKind::Full;
  std::optional<Vec3> axis;
};

/// Conjugacy class of a tuple's centralizer. Center is the generic (maximal)
/// type; Full is the smallest.
enum class OrbitType { Full, U1, Center };

std::string to_string(OrbitType t);            // "full" | "u1" | "center"
OrbitType orbit_type_from_string(const std::string& s);

/// Flips the sign so the first nonzero coordinate is positive; axis and -axis
/// describe the same circle subgroup.
Vec3 canonical_axis(Vec3 d);

/// Centralizer of a single element: the whole group when the imaginary part
/// vanishes (within eps_null), otherwise the circle around its axis.
CentralizerDesc centralizer_su2(const Quat& a, const Tolerance& tol = {});

/// Intersection of the per-element centralizers. Full if every element is
/// central; Line(d) if all non-central elements share one axis (cross product
/// below eps_null); Center otherwise.
CentralizerDesc centralizer_tuple(std::span<const Quat> t, const Tolerance& tol = {});

/// Independent oracle: dimension of {X in su(2) : Ad(g_i) X = X for all i},
/// computed as the nullspace dimension of the stacked linear maps
/// Ad(g_i) - id on R^3 (singular values below eps_null count as zero).
/// 3 <=> Full, 1 <=> Line, 0 <=> Center.
int commutant_dim(std::span<const Quat> t, const Tolerance& tol = {});

/// Smallest singular value of the stacked commutant map; the margin by which
/// a tuple clears (or misses) the generic classification.
double commutant_margin(std::span<const Quat> t);

bool is_generic(std::span<const Quat> t, const Tolerance& tol = {});
bool is_generic(std::span<const U1Element> t, const Tolerance& tol = {});  // abelian: always true

OrbitType orbit_type(std::span<const Quat> t, const Tolerance& tol = {});
OrbitType orbit_type(std::span<const U1Element> t, const Tolerance& tol = {});  // Center

OrbitType orbit_type_of(CentralizerKind kind);

/// Haar-like sample from a described subgroup (used by stabilizer tests).
Quat sample_centralizer_element(const CentralizerDesc& desc, CounterRng& rng);

}  // namespace gaugeorbit
