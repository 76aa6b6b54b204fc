#include "gaugeorbit/rng.hpp"

#include <cmath>

#include "gaugeorbit/group.hpp"

namespace gaugeorbit {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix64(seed ^ mix64(stream + kGamma))) {}

std::uint64_t CounterRng::next_u64() { return mix64(key_ + (++counter_) * kGamma); }

double CounterRng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1p-53; }

bool CounterRng::coin_flip() { return (next_u64() & 1) != 0; }

std::array<double, 2> CounterRng::normal_pair() {
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log1p(-u1));
  return {r * std::cos(kTwoPi * u2), r * std::sin(kTwoPi * u2)};
}

Quat haar_su2(CounterRng& rng) {
  for (;;) {
    const auto [g0, g1] = rng.normal_pair();
    const auto [g2, g3] = rng.normal_pair();
    const double n = std::sqrt(g0 * g0 + g1 * g1 + g2 * g2 + g3 * g3);
    if (n < 1e-150) continue;
    return Quat{g0 / n, g1 / n, g2 / n, g3 / n}.normalized();
  }
}

U1Element haar_u1(CounterRng& rng) { return U1Element::from_turns(rng.next_u64()); }

template <>
Quat haar_sample<Quat>(CounterRng& rng) {
  return haar_su2(rng);
}

template <>
U1Element haar_sample<U1Element>(CounterRng& rng) {
  return haar_u1(rng);
}

}  // namespace gaugeorbit
