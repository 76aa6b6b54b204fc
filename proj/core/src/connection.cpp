#include "gaugeorbit/connection.hpp"

#include <algorithm>
#include <cmath>

namespace gaugeorbit {

OrbitType connection_orbit_type(const Graph& g, const Connection<Quat>& c, const Tolerance& tol) {
  const FundamentalSystem fs = fundamental_system(g);
  const std::vector<Quat> tup = reduction_map(g, c, fs);
  if (tup.empty()) return OrbitType::Full;  // trivial holonomy group
  return orbit_type(tup, tol);
}

OrbitType connection_orbit_type(const Graph& g, const Connection<U1Element>& c, const Tolerance&) {
  validate_connection(g, c);
  if (!is_connected(g)) throw Disconnected("connection_orbit_type: graph is not connected");
  return OrbitType::Center;
}

StabilizerDesc stabilizer_description(const Graph& g, const Connection<Quat>& c,
                                      const Tolerance& tol) {
  const FundamentalSystem fs = fundamental_system(g);
  const std::vector<Quat> tup = reduction_map(g, c, fs);
  StabilizerDesc desc;
  desc.centralizer = tup.empty() ? CentralizerDesc{CentralizerKind::Full, std::nullopt}
                                 : centralizer_tuple(tup, tol);
  const auto paths = tree_paths(g);
  for (const auto& v : g.vertices()) desc.transports[v] = holonomy(g, c, paths.at(v));
  return desc;
}

GaugeTransform<Quat> stabilizer_element(const StabilizerDesc& desc, const Quat& g_m) {
  GaugeTransform<Quat> t;
  for (const auto& [v, h] : desc.transports) t.values[v] = compose(compose(inverse(h), g_m), h);
  return t;
}

namespace {

// Membership of z in the centralizer of the described subgroup:
//   Z(Full) = {+1, -1},  Z(Line(d)) = Line(d),  Z(Center) = SU(2).
bool in_double_centralizer(const CentralizerDesc& desc, const Quat& z, const Tolerance& tol) {
  switch (desc.kind) {
    case CentralizerKind::Full:
      return std::min(dist(z, kQuatOne), dist(z, Quat{-1, 0, 0, 0})) <= tol.eps_eq;
    case CentralizerKind::Line:
      return norm(cross(z.vec(), *desc.axis)) <= tol.eps_null;
    case CentralizerKind::Center:
      return true;
  }
  return false;
}

// Membership of q in the normalizer of the described subgroup:
//   N(Full) = N(Center) = SU(2),  N(Line(d)) = {q : Ad(q) d = +/- d}.
bool in_normalizer_of(const CentralizerDesc& desc, const Quat& q, const Tolerance& tol) {
  if (desc.kind != CentralizerKind::Line) return true;
  const Vec3 image = rotate_by(q, *desc.axis);
  return norm(cross(image, *desc.axis)) <= tol.eps_null;
}

}  // namespace

bool is_in_normalizer(const Graph& g, const Connection<Quat>& c, const GaugeTransform<Quat>& t,
                      const Tolerance& tol) {
  validate_transform(g, t);
  const StabilizerDesc desc = stabilizer_description(g, c, tol);
  const Quat& g_m = t.values.at(g.base());
  if (!in_normalizer_of(desc.centralizer, g_m, tol)) return false;
  const Quat g_m_inv = inverse(g_m);
  for (const auto& v : g.vertices()) {
    const Quat& h = desc.transports.at(v);
    const Quat z = compose(compose(compose(h, t.values.at(v)), inverse(h)), g_m_inv);
    if (!in_double_centralizer(desc.centralizer, z, tol)) return false;
  }
  return true;
}

bool is_in_normalizer(const Graph& g, const Connection<U1Element>& c,
                      const GaugeTransform<U1Element>& t, const Tolerance&) {
  validate_connection(g, c);
  validate_transform(g, t);
  if (!is_connected(g)) throw Disconnected("is_in_normalizer: graph is not connected");
  return true;  // abelian: every subgroup is normal
}

std::optional<GaugeTransform<Quat>> gauge_equivalent_connections(const Graph& g,
                                                                 const Connection<Quat>& c1,
                                                                 const Connection<Quat>& c2,
                                                                 const Tolerance& tol) {
  auto [c1g, t1] = tree_gauge(g, c1);
  auto [c2g, t2] = tree_gauge(g, c2);
  const FundamentalSystem fs = fundamental_system(g);
  const std::vector<Quat> tup1 = reduction_map(g, c1g, fs);
  const std::vector<Quat> tup2 = reduction_map(g, c2g, fs);

  GaugeTransform<Quat> witness;
  if (tup1.empty()) {
    // Tree-only graph: the holonomy content is trivial and every pair is
    // equivalent through the tree transforms alone.
    witness = compose_transforms(t1, inverse_transform(t2));
  } else {
    if (!is_generic(tup1, tol) || !is_generic(tup2, tol))
      throw NotGeneric("gauge_equivalent_connections: non-generic connection (orbit type: " +
                       to_string(orbit_type(tup1.empty() ? tup2 : tup1, tol)) + ")");
    const std::optional<Quat> w = gauge_equivalent_tuples(tup1, tup2, tol);
    if (!w) return std::nullopt;
    witness = compose_transforms(compose_transforms(t1, constant_transform(g, *w)),
                                 inverse_transform(t2));
  }

  const Connection<Quat> moved = apply_gauge(g, c1, witness);
  double err = 0;
  for (const auto& e : g.edges())
    err = std::max(err, dist(moved.holonomies.at(e.id), c2.holonomies.at(e.id)));
  if (err > 10 * tol.eps_eq)
    throw WitnessVerificationFailed("gauge_equivalent_connections: assembled transform misses by " +
                                    std::to_string(err));
  return witness;
}

std::optional<GaugeTransform<U1Element>> gauge_equivalent_connections(
    const Graph& g, const Connection<U1Element>& c1, const Connection<U1Element>& c2,
    const Tolerance&) {
  auto [c1g, t1] = tree_gauge(g, c1);
  auto [c2g, t2] = tree_gauge(g, c2);
  const FundamentalSystem fs = fundamental_system(g);
  if (reduction_map(g, c1g, fs) != reduction_map(g, c2g, fs)) return std::nullopt;
  return compose_transforms(t1, inverse_transform(t2));
}

Connection<U1Element> abelian_canonical(const Graph& g, const Connection<U1Element>& c) {
  return tree_gauge(g, c).first;
}

}  // namespace gaugeorbit
