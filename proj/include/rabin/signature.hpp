#pragma once

#include "rabin/keys.hpp"

namespace rabin {

// Deterministic-padding signature: U = R^2 (f1 psi1 + f2 psi2) mod N makes
// m U a quadratic residue by construction, and S is the canonical even-even
// root of m U. Verification is S^2 == m U mod N plus range checks; the
// verifier never needs R or the f_i.

struct Signature {
  Int u;
  Int s;
};

// U with f_i = 1 when m mod p_i is a residue, else m mod p_i. Any key class.
Int pad_factor(const Int& m, const PrivateKey& sk, RandomSource& rng);

// Same with a caller-fixed R (test fixtures want R = 1).
Int pad_factor_with_r(const Int& m, const PrivateKey& sk, const Int& r);

// Blum-only alternative: f_i = legendre(m mod p_i, p_i) in {1, -1}.
Int blum_pad_factor(const Int& m, const PrivateKey& sk, RandomSource& rng);

Int blum_pad_factor_with_r(const Int& m, const PrivateKey& sk, const Int& r);

// Signs 1 <= m < N with gcd(m, N) = 1. R is drawn fresh from Z_N* per call,
// so repeated signatures of one message differ. blum_pad selects the
// Legendre-symbol padding (Blum keys only).
Signature sign(const Int& m, const PrivateKey& sk, RandomSource& rng,
               bool blum_pad = false);

// S^2 == m U mod N with U, S in [1, N). Never consults the private key.
bool verify(const Int& m, const Signature& sig, const PublicKey& pk);

}  // namespace rabin
