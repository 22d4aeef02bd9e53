#pragma once

#include "rabin/keys.hpp"

namespace rabin {

// All encrypt functions expect 1 <= m < N with gcd(m, N) = 1 and throw
// DegenerateInputError otherwise (the gcd field exposes the factor when the
// caller stumbled onto one). All decrypt functions re-square the recovered
// root and throw IntegrityError on mismatch.

// ---- Williams ----
// Public key carries S with (S/N) = -1 so multiplying by S flips the Jacobi
// symbol. Needs a Blum modulus for the single-exponentiation decryption.

struct WilliamsPublicKey {
  Int n;
  Int s;
};

struct WilliamsCiphertext {
  Int c;
  int c1;  // 1 iff (m/N) was -1, i.e. m got scaled by S
  int c2;  // parity of the scaled message
};

// Smallest S >= 2 with (S/N) = -1. Throws WrongKeyClassError on non-Blum keys.
WilliamsPublicKey williams_setup(const PrivateKey& sk);

// Additionally requires (m/N) != 0 and gcd(2, m adjustments) implicit in the
// coprimality check.
WilliamsCiphertext williams_encrypt(const Int& m, const WilliamsPublicKey& pk);

Int williams_decrypt(const WilliamsCiphertext& ct, const PrivateKey& sk,
                     const WilliamsPublicKey& pk);

// ---- Jacobi variant I ----
// Blum keys only: the two roots of equal parity have opposite Jacobi symbols,
// so (parity, Jacobi) pins down one of the four.

struct VariantICiphertext {
  Int c;
  int b0;  // m mod 2
  int b1;  // 1 iff (m/N) = +1
};

VariantICiphertext v1_encrypt(const Int& m, const PublicKey& pk);

Int v1_decrypt(const VariantICiphertext& ct, const PrivateKey& sk);

// ---- Jacobi variant II ----
// The identification bits ride inside the ciphertext: C = m^2 (-1)^b1 xi^b0
// where (xi/p) = 1, (xi/q) = -1. The receiver reads b0 and b1 back off the
// Jacobi symbols of C before stripping them.

struct VariantIIPublicKey {
  Int n;
  Int xi;
};

struct VariantIICiphertext {
  Int c;
};

// xi = alpha^2 psi1 - psi2 mod N. alpha must be coprime to N. Blum keys only.
VariantIIPublicKey v2_setup(const PrivateKey& sk, const Int& alpha = 1);

VariantIICiphertext v2_encrypt(const Int& m, const VariantIIPublicKey& pk);

Int v2_decrypt(const VariantIICiphertext& ct, const PrivateKey& sk,
               const VariantIIPublicKey& pk);

// ---- Dedekind-sum variant ----
// b1 is the parity of the numerator of s(m, N). Needs N == 1 mod 4 (both
// primes in the same class), which keeps the reduced denominator odd so the
// numerator parity is well defined.

struct DedekindCiphertext {
  Int c;
  int b0;  // m mod 2
  int b1;  // parity of s(m, N)
};

DedekindCiphertext dedekind_encrypt(const Int& m, const PublicKey& pk);

// Blum keys only (root extraction is deterministic there).
Int dedekind_decrypt(const DedekindCiphertext& ct, const PrivateKey& sk);

// ---- Group-isomorphism variant ----
// For keys outside the Blum class. P = mu N + 1 is prime, g1 has order N in
// GF(P)*, g2 = g1^(psi1 - psi2). The sender stores where g1^m first differs
// from g2^m and from g2^-m; exactly one root reproduces both observations.

struct GisoPublicKey {
  Int n;
  Int big_p;
  Int g1, g2;
};

struct GisoCiphertext {
  Int c;
  int b0;            // m mod 2
  int d1;            // bit of g1^m at position p1
  int d2;            // bit of g1^m at position p2
  unsigned long p1;  // lowest bit position where g1^m and g2^m differ
  unsigned long p2;  // same versus g2^-m
};

// Scans mu = 2, 4, 6, ... for P = mu N + 1 prime, then finds the smallest
// primitive root of GF(P) using the factorization of P - 1 = mu N.
GisoPublicKey giso_setup(const PrivateKey& sk, RandomSource& rng);

GisoCiphertext giso_encrypt(const Int& m, const GisoPublicKey& pk);

Int giso_decrypt(const GisoCiphertext& ct, const PrivateKey& sk,
                 const GisoPublicKey& pk, RandomSource& rng);

}  // namespace rabin
