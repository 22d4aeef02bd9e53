#pragma once

#include <cstdint>
#include <vector>

#include "rabin/schemes.hpp"

namespace rabin {

struct FactorResult {
  Int p;  // the recovered divisor
  Int q;  // its cofactor, p * q == N
};

// Two roots of the same square that are neither equal nor negatives of each
// other: gcd(x - z, N) is a proper factor. Throws TrivialPairError when the
// pair is useless (z == +-x mod N).
FactorResult factor_from_roots(const Int& x, const Int& z, const Int& n);

// A square root of unity K other than +-1: gcd(K + 1, N) splits N.
FactorResult factor_from_unity_root(const Int& k, const Int& n);

// Chosen-bit attack against variant I: encrypt a random message honestly,
// flip b1, let the holder of sk decrypt. The returned root has the same
// parity but the opposite Jacobi symbol, and the pair factors N.
FactorResult bitflip_attack_demo(const PrivateKey& sk, RandomSource& rng);

// The naive single-bit identification table: position i holds
// (i mod p + i mod q) mod 2 for i in [0, N). Desk scale only: N <= 2^20 or
// ScaleLimitError.
std::vector<std::uint8_t> toy_parity_list(const PrivateKey& sk);

// Evaluates the interpolating polynomial
//   L(x) = sum_j (1 - (x-j)^(P-1)) ((j mod p + j mod q) mod 2)
// over GF(P) by direct summation; agrees with toy_parity_list on [1, N).
// Requires P prime and P > N (PreconditionError), N <= 2^10
// (ScaleLimitError).
int toy_parity_polynomial(const Int& x, const PrivateKey& sk,
                          const Int& big_p);

}  // namespace rabin
