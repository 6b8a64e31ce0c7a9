#pragma once

#include <array>
#include <cmath>
#include <cstdint>

#include "corrdet/errors.hpp"
#include "corrdet/stats.hpp"

namespace corrdet {

/// Philox 4x32, 10 rounds (Salmon et al., SC 2011). Counter-based: the output
/// block is a pure function of (counter, key), so draws can be addressed by
/// position instead of sequence order.
struct Philox4x32 {
  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

  static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                            std::array<std::uint32_t, 2> key) {
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
      const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
      const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
      const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
      const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
      const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
      ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    return ctr;
  }
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Stream key for replicate `rep` of cell `cell` under a master seed.
/// Workers never share generator state; every replicate owns a stream.
inline std::uint64_t derive_stream(std::uint64_t master_seed,
                                   std::uint64_t cell, std::uint64_t rep) {
  std::uint64_t h = splitmix64(master_seed);
  h = splitmix64(h ^ cell);
  h = splitmix64(h ^ rep);
  return h;
}

/// Deterministic generator for one addressed element of a stream.
/// (key, element) select the substream; successive draws advance a local
/// counter, so rejection sampling stays reproducible per element.
class CounterRng {
 public:
  CounterRng(std::uint64_t stream_key, std::uint64_t element)
      : key_{static_cast<std::uint32_t>(stream_key),
             static_cast<std::uint32_t>(stream_key >> 32)},
        base_{static_cast<std::uint32_t>(element),
              static_cast<std::uint32_t>(element >> 32)} {}

  std::uint32_t next_u32() {
    if (have_ == 0) {
      buf_ = Philox4x32::block({base_[0], base_[1], block_index_, 0u}, key_);
      ++block_index_;
      have_ = 4;
    }
    return buf_[4 - have_--];
  }

  /// Uniform in the open interval (0,1), 53 usable bits.
  double u01() {
    const std::uint64_t hi = next_u32();
    const std::uint64_t lo = next_u32();
    const std::uint64_t bits = (hi << 32) | lo;
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
  }

  double normal() { return normal_quantile(u01()); }

  /// Marsaglia-Tsang for shape >= 1, boosted for shape < 1. Unit scale.
  double gamma(double shape) {
    if (!(shape > 0.0)) {
      throw InvalidParameter("gamma: shape must be positive");
    }
    if (shape < 1.0) {
      const double u = u01();
      return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = u01();
      const double x2 = x * x;
      if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
      if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

  /// Beta(b, b) via two gamma variates.
  double beta_symmetric(double b) {
    const double g1 = gamma(b);
    const double g2 = gamma(b);
    return g1 / (g1 + g2);
  }

 private:
  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 2> base_;
  std::array<std::uint32_t, 4> buf_{};
  std::uint32_t block_index_ = 0;
  int have_ = 0;
};

}  // namespace corrdet
