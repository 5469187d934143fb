#pragma once

// Philox4x32-10 counter-based generator (Salmon et al., SC'11) and the
// Gaussian draws built on it. Every output is a pure function of
// (counter, key); there is no sequential state.

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>

namespace avgdist {

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

inline PhiloxCounter philox4x32_10(PhiloxCounter ctr, PhiloxKey key) {
  constexpr std::uint64_t m0 = 0xD2511F53u;
  constexpr std::uint64_t m1 = 0xCD9E8D57u;
  constexpr std::uint32_t w0 = 0x9E3779B9u;
  constexpr std::uint32_t w1 = 0xBB67AE85u;
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += w0;
      key[1] += w1;
    }
    const std::uint64_t p0 = m0 * ctr[0];
    const std::uint64_t p1 = m1 * ctr[2];
    ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
           static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
  }
  return ctr;
}

namespace detail {

// Uniform on the open interval (0, 1) from 64 random bits (53 used).
inline double open_unit(std::uint32_t hi, std::uint32_t lo) {
  const std::uint64_t bits = ((static_cast<std::uint64_t>(hi) << 32) | lo) >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

}  // namespace detail

/// Fills out with independent standard normals keyed by
/// (seed, sample_index, attempt). Each Philox block yields two normals via
/// Box-Muller.
inline void gaussian_vector(std::span<double> out, std::uint64_t sample_index, std::uint64_t seed,
                            std::uint32_t attempt = 0) {
  const PhiloxKey key = {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  for (std::size_t block = 0; 2 * block < out.size(); ++block) {
    const PhiloxCounter ctr = {static_cast<std::uint32_t>(sample_index),
                               static_cast<std::uint32_t>(sample_index >> 32),
                               static_cast<std::uint32_t>(block), attempt};
    const auto w = philox4x32_10(ctr, key);
    const double u1 = detail::open_unit(w[0], w[1]);
    const double u2 = detail::open_unit(w[2], w[3]);
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    out[2 * block] = radius * std::cos(angle);
    if (2 * block + 1 < out.size()) out[2 * block + 1] = radius * std::sin(angle);
  }
}

}  // namespace avgdist
