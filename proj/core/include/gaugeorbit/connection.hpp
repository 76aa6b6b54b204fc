#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "gaugeorbit/centralizer.hpp"
#include "gaugeorbit/graph.hpp"
#include "gaugeorbit/group.hpp"

namespace gaugeorbit {

/// Edge-holonomy assignment on a fixed graph. Total on the edge set.
template <class G>
struct Connection {
  std::map<std::string, G> holonomies;
};

/// Group-valued function on the vertices, acting on holonomies by
/// h(e) -> g(src)^-1 h(e) g(dst). A right action under pointwise products.
template <class G>
struct GaugeTransform {
  std::map<std::string, G> values;
};

template <class G>
void validate_connection(const Graph& g, const Connection<G>& c) {
  if (c.holonomies.size() != g.edges().size())
    throw DomainMismatch("connection does not match the graph's edge set");
  for (const auto& e : g.edges())
    if (!c.holonomies.count(e.id))
      throw DomainMismatch("connection is missing edge " + e.id);
}

template <class G>
void validate_transform(const Graph& g, const GaugeTransform<G>& t) {
  if (t.values.size() != g.vertices().size())
    throw DomainMismatch("gauge transform does not match the graph's vertex set");
  for (const auto& v : g.vertices())
    if (!t.values.count(v)) throw DomainMismatch("gauge transform is missing vertex " + v);
}

/// Oriented product of edge holonomies along the path; reversed steps
/// contribute inverses. Steps must chain head to tail.
template <class G>
G holonomy(const Graph& g, const Connection<G>& c, const PathSpec& p) {
  G acc{};
  const std::string* at = nullptr;
  for (const PathStep& step : p.steps) {
    if (step.orientation != 1 && step.orientation != -1)
      throw InvalidPath("holonomy: orientation must be +1 or -1");
    const auto& e = g.edge(step.edge);
    const std::string& from = step.orientation == 1 ? e.src : e.dst;
    const std::string& to = step.orientation == 1 ? e.dst : e.src;
    if (at && *at != from) throw InvalidPath("holonomy: steps do not compose at " + from);
    const auto it = c.holonomies.find(e.id);
    if (it == c.holonomies.end()) throw DomainMismatch("holonomy: missing edge " + e.id);
    acc = step.orientation == 1 ? compose(acc, it->second) : compose(acc, inverse(it->second));
    at = &to;
  }
  return acc;
}

template <class G>
Connection<G> apply_gauge(const Graph& g, const Connection<G>& c, const GaugeTransform<G>& t) {
  validate_connection(g, c);
  validate_transform(g, t);
  Connection<G> out;
  for (const auto& e : g.edges())
    out.holonomies[e.id] =
        compose(compose(inverse(t.values.at(e.src)), c.holonomies.at(e.id)), t.values.at(e.dst));
  return out;
}

/// Pointwise product (t1 . t2)(x) = t1(x) t2(x).
template <class G>
GaugeTransform<G> compose_transforms(const GaugeTransform<G>& t1, const GaugeTransform<G>& t2) {
  if (t1.values.size() != t2.values.size())
    throw DomainMismatch("compose_transforms: domain mismatch");
  GaugeTransform<G> out;
  for (const auto& [v, g1] : t1.values) {
    const auto it = t2.values.find(v);
    if (it == t2.values.end()) throw DomainMismatch("compose_transforms: domain mismatch at " + v);
    out.values[v] = compose(g1, it->second);
  }
  return out;
}

template <class G>
GaugeTransform<G> inverse_transform(const GaugeTransform<G>& t) {
  GaugeTransform<G> out;
  for (const auto& [v, g] : t.values) out.values[v] = inverse(g);
  return out;
}

template <class G>
GaugeTransform<G> constant_transform(const Graph& g, const G& value) {
  GaugeTransform<G> out;
  for (const auto& v : g.vertices()) out.values[v] = value;
  return out;
}

/// Tuple of fundamental-loop holonomies, in loop order.
template <class G>
std::vector<G> reduction_map(const Graph& g, const Connection<G>& c, const FundamentalSystem& fs) {
  validate_connection(g, c);
  std::vector<G> out;
  out.reserve(fs.loops.size());
  for (const PathSpec& loop : fs.loops) out.push_back(holonomy(g, c, loop));
  return out;
}

/// Connection whose loop tuple equals the target exactly: identity on tree
/// edges, target values on the free edges. Throws RankMismatch when the
/// target length differs from the cycle rank.
template <class G>
Connection<G> construct_connection(const Graph& g, std::span<const G> target) {
  const FundamentalSystem fs = fundamental_system(g);
  if (target.size() != fs.loops.size())
    throw RankMismatch("construct_connection: target length " + std::to_string(target.size()) +
                       " != cycle rank " + std::to_string(fs.loops.size()));
  Connection<G> c;
  for (const auto& e : g.edges()) c.holonomies[e.id] = G{};
  for (std::size_t i = 0; i < fs.free_edge.size(); ++i)
    c.holonomies[fs.free_edge[i]] = target[i];
  return c;
}

/// Gauge to the representative with identity on every tree edge, via the
/// transform x -> h(tree path to x)^-1. The base component is the identity,
/// so the loop tuple is unchanged.
template <class G>
std::pair<Connection<G>, GaugeTransform<G>> tree_gauge(const Graph& g, const Connection<G>& c) {
  validate_connection(g, c);
  const FundamentalSystem fs = fundamental_system(g);
  const auto paths = tree_paths(g);

  GaugeTransform<G> t;
  for (const auto& v : g.vertices()) t.values[v] = inverse(holonomy(g, c, paths.at(v)));

  Connection<G> out;
  for (const auto& e : g.edges()) out.holonomies[e.id] = G{};
  for (std::size_t i = 0; i < fs.free_edge.size(); ++i)
    out.holonomies[fs.free_edge[i]] = holonomy(g, c, fs.loops[i]);
  return {std::move(out), std::move(t)};
}

/// Orbit type of the loop tuple; the fundamental loops generate every loop at
/// the base, so this is the type of the connection itself.
OrbitType connection_orbit_type(const Graph& g, const Connection<Quat>& c,
                                const Tolerance& tol = {});
OrbitType connection_orbit_type(const Graph& g, const Connection<U1Element>& c,
                                const Tolerance& tol = {});

/// Holonomy centralizer plus the tree-path transports h(path to x). A gauge
/// transform fixes c exactly when its base component g_m lies in the
/// centralizer and its value at x is h(path)^-1 g_m h(path).
struct StabilizerDesc {
  CentralizerDesc centralizer;
  std::map<std::string, Quat> transports;
};

StabilizerDesc stabilizer_description(const Graph& g, const Connection<Quat>& c,
                                      const Tolerance& tol = {});

/// The stabilizer element induced by a centralizer element g_m.
GaugeTransform<Quat> stabilizer_element(const StabilizerDesc& desc, const Quat& g_m);

/// Membership in the normalizer of the stabilizer: the base component must
/// normalize the holonomy centralizer Z, and at every vertex
/// h(path) g_x h(path)^-1 g_m^-1 must centralize Z.
bool is_in_normalizer(const Graph& g, const Connection<Quat>& c, const GaugeTransform<Quat>& t,
                      const Tolerance& tol = {});
bool is_in_normalizer(const Graph& g, const Connection<U1Element>& c,
                      const GaugeTransform<U1Element>& t, const Tolerance& tol = {});

/// Decides gauge equivalence. SU(2): tree-gauge both sides and compare the
/// canonical forms of the loop tuples (NotGeneric for non-generic inputs);
/// the returned transform is verified before being handed out. U(1): loop
/// tuples must match exactly.
std::optional<GaugeTransform<Quat>> gauge_equivalent_connections(const Graph& g,
                                                                 const Connection<Quat>& c1,
                                                                 const Connection<Quat>& c2,
                                                                 const Tolerance& tol = {});
std::optional<GaugeTransform<U1Element>> gauge_equivalent_connections(
    const Graph& g, const Connection<U1Element>& c1, const Connection<U1Element>& c2,
    const Tolerance& tol = {});

/// Tree-gauged representative; for the circle group this map is exactly
/// gauge-invariant because the group arithmetic is exact.
Connection<U1Element> abelian_canonical(const Graph& g, const Connection<U1Element>& c);

}  // namespace gaugeorbit
