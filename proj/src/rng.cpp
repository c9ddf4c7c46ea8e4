#include "kinetics/rng.hpp"

#include <cmath>
#include <numbers>

namespace kinetics {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

std::uint64_t splitmix64_mix(std::uint64_t v) {
  std::uint64_t z = v + kGolden;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

RngStream::RngStream(std::uint64_t seed) {
  std::uint64_t state = seed;
  for (auto& word : s_) {
    state += kGolden;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    word = z ^ (z >> 31);
  }
  // xoshiro must not start from the all-zero state.
  if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = kGolden;
}

std::uint64_t RngStream::next_u64() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double RngStream::draw_uniform() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::draw_normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = draw_uniform();
  const double u2 = draw_uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

std::uint64_t RngStream::draw_poisson(double mean) {
  if (mean <= 0.0) return 0;

  if (mean < 10.0) {
    // Inversion by sequential search of the CDF. The iteration cap guards
    // against the accumulated pmf topping out just below 1 in floating
    // point when u is drawn extremely close to 1.
    const double u = draw_uniform();
    double pmf = std::exp(-mean);
    double cdf = pmf;
    std::uint64_t k = 0;
    while (u > cdf && k < 256) {
      ++k;
      pmf *= mean / static_cast<double>(k);
      cdf += pmf;
    }
    return k;
  }

  // Hormann's PTRS transformed rejection for large means.
  const double log_mean = std::log(mean);
  const double b = 0.931 + 2.53 * std::sqrt(mean);
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);

  for (;;) {
    const double u = draw_uniform() - 0.5;
    const double v = draw_uniform();
    const double u_shifted = 0.5 - std::abs(u);
    const double kf = std::floor((2.0 * a / u_shifted + b) * u + mean + 0.43);
    if (kf < 0.0) continue;

    if (u_shifted >= 0.07 && v <= v_r) return static_cast<std::uint64_t>(kf);
    if (u_shifted < 0.013 && v > u_shifted) continue;

    const double lhs =
        std::log(v * inv_alpha / (a / (u_shifted * u_shifted) + b));
    const double rhs = -mean + kf * log_mean - std::lgamma(kf + 1.0);
    if (lhs <= rhs) return static_cast<std::uint64_t>(kf);
  }
}

}  // namespace kinetics
