// Copyright 2026 the ifbm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>

namespace ifbm {

// splitmix64 step: advances the state by the golden-ratio increment and
// returns a finalized output word.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// xoshiro256++ core generator.
class Xoshiro256 {
 public:
  explicit Xoshiro256(std::uint64_t seed_state) {
    for (auto& w : s_) w = splitmix64_next(seed_state);
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 0x9E3779B97F4A7C15ULL;
  }

  std::uint64_t next() {
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

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::uint64_t s_[4];
};

// Counter-style per-sample stream. The stream for sample i of a campaign with
// a given master seed is

//   state0 = finalize(master_seed XOR finalize(i * 2^64/phi + 1))
//   xoshiro256++ seeded with four splitmix64 outputs drawn from state0,
//
// where finalize is the splitmix64 output function. Distinct sample indices
// therefore get statistically independent streams, any sample can be
// regenerated in isolation, and campaigns are shardable across workers or
// machines without coordination.
class PathRng {
 public:
  PathRng(std::uint64_t master_seed, std::uint64_t sample_index)
      : gen_(seed_state(master_seed, sample_index)) {}

  // Uniform on [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(gen_.next() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller; the second variate of each pair is cached.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    // u1 in (0, 1] so the logarithm is finite.
    const double u1 = (static_cast<double>(gen_.next() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  static std::uint64_t seed_state(std::uint64_t master_seed, std::uint64_t sample_index) {
    std::uint64_t h = sample_index * 0x9E3779B97F4A7C15ULL + 1;
    std::uint64_t tmp = h;
    h = splitmix64_next(tmp);
    std::uint64_t st = master_seed ^ h;
    std::uint64_t tmp2 = st;
    return splitmix64_next(tmp2);
  }

  Xoshiro256 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace ifbm
