#ifndef WIGCS_CORE_RNG_HPP
#define WIGCS_CORE_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace wigcs {

// Deterministic random source ("wigcs-rng v1").
//
// Every random draw in the library flows through this class so that a seed
// reproduces the same experiment on any platform. std::mt19937_64 itself is
// fully specified by the standard; the standard *distributions* are not, so
// the bounded-integer and Gaussian draws are implemented here instead.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform integer in [0, n), unbiased via rejection sampling.
  std::uint64_t below(std::uint64_t n);

  // Uniform double in [0, 1) with 53 random mantissa bits.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller; the second value of each pair is cached.
  double normal();

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// First k entries of a seeded Fisher-Yates shuffle of {0, ..., n-1}:
// k distinct indices drawn uniformly, in shuffle order.
std::vector<int> shuffled_prefix(Rng& rng, int n, int k);

}  // namespace wigcs

#endif
