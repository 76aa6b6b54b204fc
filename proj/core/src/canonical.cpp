#include "gaugeorbit/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gaugeorbit {

namespace {

void require_generic_pair(const Quat& a, const Quat& b, const Tolerance& tol, const char* where) {
  const Quat pair[2] = {a, b};
  const CentralizerDesc z = centralizer_tuple(pair, tol);
  if (z.kind != CentralizerKind::Center)
    throw NotGeneric(std::string(where) +
                     ": pair is not generic (orbit type: " + to_string(orbit_type_of(z.kind)) + ")");
}

}  // namespace

Quat StandardFormPair::first() const {
  return Quat{lambda.real(), lambda.imag(), 0, 0}.normalized();
}

Quat StandardFormPair::second() const {
  const double s = std::sqrt(std::max(0.0, 1.0 - std::norm(x)));
  return Quat{x.real(), x.imag(), s, 0}.normalized();
}

std::pair<StandardFormPair, ConjugationWitness> standard_form_pair(const Quat& a, const Quat& b,
                                                                   const Tolerance& tol) {
  require_generic_pair(a, b, tol, "standard_form_pair");

  const Vec3 av = a.vec();
  const Vec3 bv = b.vec();
  const double na = norm(av);

  StandardFormPair form;
  form.lambda = {a.w, na};
  form.x = {b.w, dot(av, bv) / na};

  const double eps = a.x / na;
  const double hd = std::hypot(a.y, a.z);
  const std::complex<double> delta =
      hd == 0.0 ? std::complex<double>{1, 0} : std::complex<double>{a.y / hd, a.z / hd};
  const double cp = std::sqrt(std::max(0.0, 1.0 + eps) / 2.0);
  const double cm = std::sqrt(std::max(0.0, 1.0 - eps) / 2.0);
  const Quat c = Quat{0, cp, delta.real() * cm, delta.imag() * cm}.normalized();

  const Quat bt = adjoint(b, c);
  const double hb = std::hypot(bt.y, bt.z);
  if (hb == 0.0)
    throw NotGeneric("standard_form_pair: conjugated second component is diagonal");
  const std::complex<double> beta =
      std::sqrt(std::complex<double>{bt.y / hb, bt.z / hb});  // principal branch
  const Quat witness = compose(c, Quat{beta.real(), beta.imag(), 0, 0}.normalized());

  const double check = std::max(dist(adjoint(a, witness), form.first()),
                                dist(adjoint(b, witness), form.second()));
  if (check > 10 * tol.eps_eq)
    throw WitnessVerificationFailed("standard_form_pair: conjugator misses the standard form by " +
                                    std::to_string(check));
  return {form, ConjugationWitness{witness}};
}

Quat transport_component(const Quat& m, const Quat& a, const Quat& b, const Tolerance& tol) {
  require_unit(m, tol.eps_unit, "transport_component");
  const Vec3 av = a.vec();
  const Vec3 axb = cross(av, b.vec());
  const double na = norm(av);
  const double nab = norm(axb);
  if (na <= tol.eps_null || nab <= tol.eps_null)
    throw NotGeneric("transport_component: pair is not generic");
  const Vec3 mv = m.vec();
  return Quat{m.w, dot(av, mv) / na, dot(axb, cross(av, mv)) / (nab * na), dot(axb, mv) / nab}
      .normalized();
}

double pair_margin(const Quat& a, const Quat& b) {
  return std::min(norm(a.vec()), norm(cross(a.vec(), b.vec())));
}

namespace {

struct PivotChoice {
  std::pair<int, int> pivot;
  double margin;
  bool cleared;
};

PivotChoice pivot_select_ex(std::span<const Quat> t, const Tolerance& tol) {
  if (!is_generic(t, tol))
    throw NotGeneric("pivot_select: tuple is not generic (orbit type: " +
                     to_string(orbit_type(t, tol)) + ")");
  const int k = static_cast<int>(t.size());
  PivotChoice best{{-1, -1}, -1.0, false};
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const Quat pair[2] = {t[i], t[j]};
      if (centralizer_tuple(pair, tol).kind != CentralizerKind::Center) continue;
      const double m = pair_margin(t[i], t[j]);
      if (m > tol.eps_generic) return {{i, j}, m, true};
      if (m > best.margin) best = {{i, j}, m, false};
    }
  }
  if (best.pivot.first < 0)
    throw NotGeneric("pivot_select: no generic pair found");  // unreachable for generic tuples
  return best;
}

}  // namespace

std::pair<int, int> pivot_select(std::span<const Quat> t, const Tolerance& tol) {
  return pivot_select_ex(t, tol).pivot;
}

namespace {

CanonicalTuple canonicalize_impl(std::span<const Quat> t, const PivotChoice& choice,
                                 const Tolerance& tol) {
  const auto [i, j] = choice.pivot;
  auto [form, witness] = standard_form_pair(t[i], t[j], tol);

  CanonicalTuple out;
  out.tuple.resize(t.size());
  out.pivot = choice.pivot;
  out.witness = witness;
  out.margin = choice.margin;
  out.low_margin = !choice.cleared;
  out.tuple[i] = form.first();
  out.tuple[j] = form.second();
  for (int l = 0; l < static_cast<int>(t.size()); ++l) {
    if (l == i || l == j) continue;
    out.tuple[l] = transport_component(t[l], t[i], t[j], tol);
  }

  double check = 0;
  for (std::size_t l = 0; l < t.size(); ++l)
    check = std::max(check, dist(adjoint(t[l], witness.g), out.tuple[l]));
  if (check > 10 * tol.eps_eq)
    throw WitnessVerificationFailed("canonicalize: witness misses the canonical tuple by " +
                                    std::to_string(check));
  return out;
}

}  // namespace

CanonicalTuple canonicalize(std::span<const Quat> t, const Tolerance& tol) {
  return canonicalize_impl(t, pivot_select_ex(t, tol), tol);
}

CanonicalTuple canonicalize_with_pivot(std::span<const Quat> t, std::pair<int, int> pivot,
                                       const Tolerance& tol) {
  const auto [i, j] = pivot;
  if (i < 0 || j <= i || j >= static_cast<int>(t.size()))
    throw std::invalid_argument("canonicalize_with_pivot: bad pivot indices");
  const Quat pair[2] = {t[i], t[j]};
  if (centralizer_tuple(pair, tol).kind != CentralizerKind::Center)
    throw NotGeneric("canonicalize_with_pivot: pivot pair is not generic");
  const double m = pair_margin(t[i], t[j]);
  return canonicalize_impl(t, PivotChoice{pivot, m, m > tol.eps_generic}, tol);
}

std::optional<Quat> gauge_equivalent_tuples(std::span<const Quat> t1, std::span<const Quat> t2,
                                            const Tolerance& tol) {
  if (t1.size() != t2.size())
    throw DomainMismatch("gauge_equivalent_tuples: tuple lengths differ");
  const CanonicalTuple c1 = canonicalize(t1, tol);
  const CanonicalTuple c2 = canonicalize(t2, tol);
  if (tuple_dist(c1.tuple, c2.tuple) > tol.eps_eq) return std::nullopt;

  const Quat g = compose(c1.witness.g, inverse(c2.witness.g));
  double check = 0;
  for (std::size_t l = 0; l < t1.size(); ++l)
    check = std::max(check, dist(adjoint(t1[l], g), t2[l]));
  if (check > 10 * tol.eps_eq)
    throw WitnessVerificationFailed("gauge_equivalent_tuples: composed witness misses by " +
                                    std::to_string(check));
  return g;
}

ChartK2 quotient_chart_k2(std::span<const Quat> pair, const Tolerance& tol) {
  if (pair.size() != 2) throw DomainMismatch("quotient_chart_k2: expected a pair");
  const auto [form, witness] = standard_form_pair(pair[0], pair[1], tol);
  return {std::atan2(form.lambda.imag(), form.lambda.real()), form.x};
}

std::array<Quat, 2> section_k2(double theta, std::complex<double> x) {
  if (!(theta > 0) || !(theta < kPi)) throw OutOfChart("section_k2: theta must lie in (0, pi)");
  if (!(std::abs(x) < 1)) throw OutOfChart("section_k2: |x| must be < 1");
  const StandardFormPair form{{std::cos(theta), std::sin(theta)}, x};
  return {form.first(), form.second()};
}

}  // namespace gaugeorbit
