#pragma once

#include <array>
#include <cstdint>

namespace kinetics {

/// One step of the splitmix64 sequence starting from state `v`:
/// advance by the 64-bit golden ratio, then apply the published
/// xor-shift/multiply finalizer. mix(0) == 0xE220A8397B1DCDAF.
std::uint64_t splitmix64_mix(std::uint64_t v);

/// Seedable 64-bit random stream: xoshiro256++ (Blackman & Vigna), state
/// initialized from the seed with four splitmix64 steps.
///
/// The integer sequence for a given seed is part of the public contract and
/// is pinned by test vectors; it is pure integer arithmetic and identical on
/// every platform. Derived floating-point draws additionally depend on libm
/// (exp/log/lgamma), so they are bit-identical on a fixed toolchain.
///
/// A stream is single-threaded; hand each concurrent simulation its own.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  /// Next raw 64-bit value.
  std::uint64_t next_u64();

  /// Uniform on the open interval (0,1): ((x >> 11) + 0.5) * 2^-53,
  /// never exactly 0 or 1 so log(u) is always finite.
  double draw_uniform();

  /// Standard normal via Box-Muller; consumes two uniforms per pair and
  /// caches the second value.
  double draw_normal();

  /// Poisson(mean). Inversion by sequential search below mean 10, Hormann's
  /// PTRS transformed rejection above.
  std::uint64_t draw_poisson(double mean);

 private:
  std::array<std::uint64_t, 4> s_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace kinetics
