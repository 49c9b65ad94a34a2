#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace bslab::rng {

// Philox-4x32 with 10 rounds: a counter-based generator. There is no
// sequential state; every (seed, stream, block) triple is hashed to four
// 32-bit words independently, so draws can be produced in any order and any
// partitioning of work across threads or processes yields identical output.
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static constexpr std::uint32_t mult0 = 0xD2511F53u;
  static constexpr std::uint32_t mult1 = 0xCD9E8D57u;
  static constexpr std::uint32_t weyl0 = 0x9E3779B9u;  // frac(golden ratio)
  static constexpr std::uint32_t weyl1 = 0xBB67AE85u;  // frac(sqrt 3)

  // 10 rounds; the key is bumped by the Weyl constants between rounds.
  static constexpr Counter generate(Counter c, Key k) noexcept {
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        k[0] += weyl0;
        k[1] += weyl1;
      }
      const std::uint64_t p0 = std::uint64_t{mult0} * c[0];
      const std::uint64_t p1 = std::uint64_t{mult1} * c[2];
      const auto lo0 = static_cast<std::uint32_t>(p0);
      const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
      const auto lo1 = static_cast<std::uint32_t>(p1);
      const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
      c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
    }
    return c;
  }
};

// One counter block -> two uniforms -> one Box-Muller pair of standard
// normals. u1 lives in (0, 1] so log(u1) stays finite; u2 lives in [0, 1).
inline std::array<double, 2> normal_pair(std::uint64_t seed, std::uint64_t stream,
                                         std::uint64_t block) noexcept {
  const Philox4x32::Key key{static_cast<std::uint32_t>(seed),
                            static_cast<std::uint32_t>(seed >> 32)};
  const Philox4x32::Counter ctr{
      static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32),
      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  const auto w = Philox4x32::generate(ctr, key);
  const std::uint64_t x1 = (std::uint64_t{w[1]} << 32) | w[0];
  const std::uint64_t x2 = (std::uint64_t{w[3]} << 32) | w[2];
  constexpr double scale = 0x1.0p-53;
  const double u1 = static_cast<double>((x1 >> 11) + 1) * scale;
  const double u2 = static_cast<double>(x2 >> 11) * scale;
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

// n-th standard normal of a stream. Consecutive indices share a counter block
// in pairs, so sequential generation costs one Philox call per two draws.
inline double nth_normal(std::uint64_t seed, std::uint64_t stream,
                         std::uint64_t n) noexcept {
  return normal_pair(seed, stream, n / 2)[n % 2];
}

}  // namespace bslab::rng
