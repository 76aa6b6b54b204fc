#pragma once

#include <array>
#include <complex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gaugeorbit/centralizer.hpp"
#include "gaugeorbit/group.hpp"

namespace gaugeorbit {

/// Parameters of the unique representative of a generic pair orbit:
/// (diag(lambda, lambda*), [[x, s], [-s, x*]]) with s = sqrt(1 - |x|^2),
/// |lambda| = 1, Im(lambda) > 0, |x| < 1.
struct StandardFormPair {
  std::complex<double> lambda;
  std::complex<double> x;

  Quat first() const;   // lambda as a quaternion (w, x slots)
  Quat second() const;  // x + sqrt(1 - |x|^2) J
};

/// Group element g with t o g equal to the canonical tuple componentwise
/// (within eps_eq). Unique up to a sign, which acts trivially.
struct ConjugationWitness {
  Quat g;
};

struct CanonicalTuple {
  std::vector<Quat> tuple;
  std::pair<int, int> pivot;  // 0-based component indices, i < j
  ConjugationWitness witness;
  double margin = 0;      // pivot genericity margin
  bool low_margin = false;  // pivot chosen by largest-margin fallback
};

/// Gauge-fixes a generic pair:
///   lambda = a0 + |a_vec| i
///   x      = b0 + (<a_vec, b_vec> / |a_vec|) i
/// and returns the explicit conjugator, assembled from
///   eps   = a1 / |a_vec|
///   delta = (a2 + a3 i) / sqrt(a2^2 + a3^2)   (fixed to 1 when a2 = a3 = 0)
///   C     = (1/sqrt 2) [[ i sqrt(1+eps), delta sqrt(1-eps) ],
///                       [ -delta* sqrt(1-eps), -i sqrt(1+eps) ]]
///   beta^2 = (bt2 + bt3 i) / sqrt(bt2^2 + bt3^2)  with bt = C^+ B C,
///            beta the principal square root
///   g      = C * diag(beta, beta*).
/// Throws NotGeneric when the pair's centralizer is not the center.
std::pair<StandardFormPair, ConjugationWitness> standard_form_pair(const Quat& a, const Quat& b,
                                                                   const Tolerance& tol = {});

/// Closed form of the conjugation of m by the standard-form conjugator of the
/// generic pair (a, b):
///   m0 + (<a,m>/|a|) I + (<axb, axm>/(|axb| |a|)) J + (<axb, m>/|axb|) K.
/// Throws NotGeneric when |a_vec| or |a_vec x b_vec| vanishes.
Quat transport_component(const Quat& m, const Quat& a, const Quat& b, const Tolerance& tol = {});

/// Genericity margin of an index pair: min(|vec(t_i)|, |vec(t_i) x vec(t_j)|).
double pair_margin(const Quat& a, const Quat& b);

/// Lexicographically smallest pair (i, j), i < j, whose components form a
/// generic pair with margin above eps_generic; falls back to the
/// largest-margin generic pair when none clears the bar. Throws NotGeneric
/// when the tuple itself is not generic.
std::pair<int, int> pivot_select(std::span<const Quat> t, const Tolerance& tol = {});

/// Canonical form: pivot components in standard form, every other component
/// transported by the pivot conjugator. Identical (within eps_eq) for all
/// conjugates of t that select the same pivot.
CanonicalTuple canonicalize(std::span<const Quat> t, const Tolerance& tol = {});

/// Same, with the pivot imposed; the pair must be generic.
CanonicalTuple canonicalize_with_pivot(std::span<const Quat> t, std::pair<int, int> pivot,
                                       const Tolerance& tol = {});

/// Decides simultaneous conjugacy of two generic tuples via their canonical
/// forms. On success returns g with t2 = t1 o g, verified by direct
/// conjugation (WitnessVerificationFailed if the composed witness misses by
/// more than 10*eps_eq).
std::optional<Quat> gauge_equivalent_tuples(std::span<const Quat> t1, std::span<const Quat> t2,
                                            const Tolerance& tol = {});

/// Global chart of the generic pair quotient: lambda = e^(i theta) with
/// theta in (0, pi), x as in the standard form.
struct ChartK2 {
  double theta;
  std::complex<double> x;
};

ChartK2 quotient_chart_k2(std::span<const Quat> pair, const Tolerance& tol = {});

/// Inverse of the chart: the standard-form pair itself. Throws OutOfChart
/// unless theta in (0, pi) and |x| < 1.
std::array<Quat, 2> section_k2(double theta, std::complex<double> x);

}  // namespace gaugeorbit
