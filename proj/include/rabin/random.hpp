#pragma once

#include <gmpxx.h>

namespace rabin {

// Fresh seed from the operating system's entropy source.
unsigned long entropy_seed();

// Seedable source of uniform big integers (Mersenne twister underneath).
// Deliberately explicit: every randomized operation takes one of these as an
// argument, nothing draws from hidden global state. Not safe to share between
// threads without external coordination.
class RandomSource {
 public:
  explicit RandomSource(unsigned long seed) : state_(gmp_randinit_mt) {
    state_.seed(seed);
  }

  static RandomSource from_entropy() { return RandomSource(entropy_seed()); }

  // Uniform in [0, 2^nbits).
  mpz_class bits(unsigned long nbits) { return state_.get_z_bits(nbits); }

  // Uniform in [0, bound), bound >= 1.
  mpz_class below(const mpz_class& bound) { return state_.get_z_range(bound); }

  // Uniform in [lo, hi), hi > lo.
  mpz_class in_range(const mpz_class& lo, const mpz_class& hi) {
    return lo + state_.get_z_range(hi - lo);
  }

  RandomSource(const RandomSource&) = delete;
  RandomSource& operator=(const RandomSource&) = delete;

 private:
  gmp_randclass state_;
};

}  // namespace rabin
