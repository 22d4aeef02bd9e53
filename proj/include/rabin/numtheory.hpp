#pragma once

#include <gmpxx.h>

#include "rabin/errors.hpp"
#include "rabin/random.hpp"

namespace rabin {

// Arbitrary-precision signed integer. Every operation below that returns a
// residue returns the canonical representative in [0, modulus).
using Int = mpz_class;

struct ExtGcd {
  Int g;  // gcd(a, b) >= 1
  Int u;  // u*a + v*b == g
  Int v;
};

// Generalized Euclidean algorithm. Throws DegenerateInputError if both
// arguments are zero.
ExtGcd ext_gcd(const Int& a, const Int& b);

// base^exp mod modulus, result in [0, modulus). Negative exponents go through
// the modular inverse and throw NotInvertibleError (carrying the gcd) when
// gcd(base, modulus) != 1.
Int mod_pow(const Int& base, const Int& exp, const Int& modulus);

// b in [1, n) with a*b == 1 mod n, n >= 2. Throws NotInvertibleError carrying
// gcd(a, n) when no inverse exists; for a Rabin modulus that gcd is a prime
// factor.
Int mod_inverse(const Int& a, const Int& n);

// Jacobi symbol (a/n) for odd n >= 1, by quadratic reciprocity, without
// factoring n. Returns 0 iff gcd(a, n) > 1.
int jacobi(const Int& a, const Int& n);

// Miller-Rabin. `false` is always correct; `true` errs with probability at
// most 4^-rounds. Below 2^64 a fixed witness set makes the answer exact and
// the rng is never consulted.
bool is_probable_prime(const Int& n, int rounds, RandomSource& rng);

// Random probable prime with exactly `bits` bits (top bit set), congruent to
// residue_mod_4 (1 or 3) modulo 4. Rejected candidates are redrawn whole, not
// incremented.
Int gen_prime(unsigned long bits, int residue_mod_4, RandomSource& rng);

// Square root of c modulo a prime p == 3 mod 4, as c^((p+1)/4). The result is
// squared and checked; a non-residue c raises NonResidueError.
Int sqrt_mod_blum(const Int& c, const Int& p);

// Tonelli-Shanks square root of c modulo an odd prime p, gcd(c, p) = 1.
// The non-residue search draws uniformly from [2, p-1); that search is the
// only probabilistic step. Non-residue c raises NonResidueError (detected via
// the Legendre symbol up front).
Int tonelli_shanks(const Int& c, const Int& p, RandomSource& rng);

struct CrtBasis {
  Int psi1;  // == 1 mod p, == 0 mod q
  Int psi2;  // == 0 mod p, == 1 mod q
};

// CRT idempotents for N = p*q: psi1 + psi2 == 1, psi1*psi2 == 0, and each is
// its own square mod N. Throws DegenerateInputError when p == q or the inputs
// share a factor.
CrtBasis crt_basis(const Int& p, const Int& q);

}  // namespace rabin
