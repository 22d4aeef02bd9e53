#pragma once

#include <array>
#include <utility>

#include "rabin/numtheory.hpp"

namespace rabin {

struct PublicKey {
  Int n;
};

// Two distinct odd primes with the CRT idempotents precomputed. Immutable
// after construction.
class PrivateKey {
 public:
  // Explicit primes; validates that p, q are distinct odd (probable) primes.
  static PrivateKey from_primes(const Int& p, const Int& q);

  // Two fresh primes of `bits` bits each. blum = true: both == 3 mod 4.
  // blum = false: p == 1 mod 4 and q's residue class drawn from {1, 3}.
  static PrivateKey generate(unsigned long bits, bool blum, RandomSource& rng);

  const Int& p() const { return p_; }
  const Int& q() const { return q_; }
  const Int& n() const { return n_; }
  const Int& psi1() const { return psi1_; }
  const Int& psi2() const { return psi2_; }
  bool is_blum() const { return blum_; }

  PublicKey public_key() const { return PublicKey{n_}; }

 private:
  PrivateKey(Int p, Int q);

  Int p_, q_, n_, psi1_, psi2_;
  bool blum_;
};

// keygen(bits, blum, rng) -> (private, public).
std::pair<PrivateKey, PublicKey> keygen(unsigned long bits, bool blum,
                                        RandomSource& rng);

// The four square roots of a quadratic residue C, canonically labeled:
// u1 and v1 are the even residues mod p and mod q, so x1's residues are both
// even, x4's both odd, x2 and x3 mixed. x4 = N - x1 and x3 = N - x2.
struct RootQuad {
  Int x1, x2, x3, x4;
  Int u1, u2;  // roots of C mod p, u1 even
  Int v1, v2;  // roots of C mod q, v1 even
};

// Roots of x^2 = C mod N via the CRT. Uses c^((p+1)/4) for primes == 3 mod 4
// and Tonelli-Shanks otherwise; rng is consumed only in the latter case.
// Throws DegenerateInputError (carrying the gcd) when gcd(C, N) != 1, and
// NonResidueError when C has no root mod p or mod q.
RootQuad square_roots(const Int& c, const PrivateKey& sk, RandomSource& rng);

// Blum-key-only overload; no randomness needed. Throws WrongKeyClassError on
// a non-Blum key.
RootQuad square_roots(const Int& c, const PrivateKey& sk);

struct RootLabel {
  int b_p;  // (x mod p) mod 2
  int b_q;  // (x mod q) mod 2
};

// The two-bit labels of x1..x4; always exactly {00, 01, 10, 11}.
std::array<RootLabel, 4> root_labels(const RootQuad& rq, const PrivateKey& sk);

// The group of square roots of unity {1, a, -a, -1} with a = psi1 - psi2.
struct UnitRoots {
  Int one, a, minus_a, minus_one;
};

UnitRoots unit_roots(const PrivateKey& sk);

}  // namespace rabin
