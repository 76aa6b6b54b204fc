#pragma once

#include <array>
#include <cstdint>

namespace gaugeorbit {

struct Quat;
class U1Element;

/// Counter-based random stream. Every output is a pure function of
/// (seed, stream, draw index), so parallel consumers get reproducible,
/// scheduling-independent results by using disjoint stream ids — typically
/// one stream per sample index.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();
  double uniform();                      // [0, 1)
  std::array<double, 2> normal_pair();   // Box-Muller, consumes two uniforms
  bool coin_flip();

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Haar-uniform samples. The SU(2) sampler normalizes four independent
/// standard normals; the U(1) sampler is exactly uniform on the turn grid.
Quat haar_su2(CounterRng& rng);
U1Element haar_u1(CounterRng& rng);

template <class G>
G haar_sample(CounterRng& rng);
template <>
Quat haar_sample<Quat>(CounterRng& rng);
template <>
U1Element haar_sample<U1Element>(CounterRng& rng);

}  // namespace gaugeorbit
