// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string_view>

namespace asr {

// Deterministic splitmix64 stream. Every stochastic operation takes one of
// these explicitly; there is no global RNG. Substreams are derived from the
// originating seed (not the consumed state), so derivation order is
// independent of how much the parent stream has been used.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();
  double uniform();              // [0, 1)
  int uniform_int(int n);        // {0, ..., n-1}, n >= 1
  double normal();               // N(0, 1)
  bool bernoulli(double p);

  Rng derive(std::string_view label) const;
  Rng derive(std::uint64_t salt) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace asr
