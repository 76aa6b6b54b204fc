#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gaugeorbit/centralizer.hpp"
#include "gaugeorbit/graph.hpp"
#include "gaugeorbit/group.hpp"

namespace gaugeorbit {

enum class GroupBackend { Su2, U1 };

std::string to_string(GroupBackend b);                 // "su2" | "u1"
GroupBackend backend_from_string(const std::string&);  // throws std::invalid_argument

/// Smallest tuple length admitting generic elements: 2 for SU(2), 1 for U(1).
int analytic_kmin(GroupBackend b);

/// Orbit-type frequencies of Haar-iid k-tuples. Samples whose commutant
/// margin sits inside the threshold band are counted in ambiguous_fraction
/// (they still carry a type in fractions). Deterministic in (seed, samples).
struct CensusReport {
  GroupBackend backend = GroupBackend::Su2;
  int k = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::map<OrbitType, std::uint64_t> counts;
  std::map<OrbitType, double> fractions;
  double ambiguous_fraction = 0;
};

CensusReport stratum_census(GroupBackend backend, int k, std::uint64_t samples, std::uint64_t seed,
                            const Tolerance& tol = {});

/// One named scalar check. pass <=> |observed - expected| <= tolerance.
struct ProbeReport {
  std::string name;
  double observed = 0;
  double expected = 0;
  double tolerance = 0;
  bool pass = false;
  std::map<std::string, double> details;
};

ProbeReport make_probe(std::string name, double observed, double expected, double tolerance);

/// Character-moment statistics of the fundamental-loop tuple of Haar-iid edge
/// assignments: means of chi_{1/2} and chi_1 per loop and the cross moments
/// chi_{1/2}(i) chi_{1/2}(j), all expected 0 with tolerance 4/sqrt(samples);
/// the trivial character mean is exactly 1.
std::vector<ProbeReport> pushforward_haar_test(const Graph& g, std::uint64_t samples,
                                               std::uint64_t seed);

/// Histogram of trace_class over Haar samples against the exactly integrated
/// bin masses of (2/pi) sqrt(1 - t^2) on [-1, 1]. observed = sup bin
/// deviation. Bin contents and the mirror-symmetry statistic are in details.
ProbeReport quotient_density_histogram(std::uint64_t samples, int bins, std::uint64_t seed);

/// Numerical rank of the parametrization Jacobian of one explicitly
/// parametrized family of tuples, by central finite differences (singular
/// values above 1e-5 count). Families:
///   k2-full               -> 0     k3-line-line-line     -> 5
///   k2-full-line          -> 3     k3-two-line-one-line  -> 7
///   k2-line-line          -> 4     k3-generic            -> 9
///   k2-generic            -> 6
/// Throws UnknownStratum for other names.
ProbeReport dimension_probe(std::string_view stratum_spec, double step, std::uint64_t seed);

/// 3k minus the probed rank of the largest non-generic family; expected
/// 2(k-1), which also meets the per-factor lower bound k * 1.
ProbeReport codim_check(int k);

/// Smallest k <= k_max for which a Haar sample is generic (double-checked by
/// both classifiers). For SU(2), k = 1 is additionally swept to confirm that
/// no single element is generic. Throws NotFound when k_max is exhausted.
int kmin_search(GroupBackend backend, int k_max, std::uint64_t samples, std::uint64_t seed,
                const Tolerance& tol = {});

/// Traces the generic path t -> (I, g2(t), K), where g2 rotates by pi/3
/// around an axis that sweeps through the first component's axis at t = 1/2,
/// and canonicalizes every step. The pivot rule switches pairs at the sweep
/// crossing and the canonical section jumps there by order one, while the
/// frozen-pivot rerun of the same path moves by O(step). observed = the
/// maximum consecutive-step jump, or -1 when a side condition fails (the
/// jump not at a pivot switch, or the frozen rerun not smooth); details carry
/// every measured quantity. Throws PathLeftGenericStratum if the tuple path
/// ever drops below eps_generic commutant margin.
ProbeReport gribov_discontinuity_probe(int steps, const Tolerance& tol = {});

/// Bundled graphs used by the statistical probes: one-vertex loop bouquets
/// (ranks 1..3), the theta graph, and a 2x2 plaquette lattice based at a
/// corner.
Graph make_bouquet(int loops);
Graph make_theta();
Graph make_square_lattice(int n);
std::vector<std::pair<std::string, Graph>> probe_corpus();

}  // namespace gaugeorbit
