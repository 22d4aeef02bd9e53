#include "rabin/signature.hpp"

namespace rabin {

namespace {

Int normalize(Int x, const Int& n) {
  x %= n;
  if (x < 0) x += n;
  return x;
}

void check_coprime(const Int& m, const Int& n, const char* what) {
  Int g;
  mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
  if (g != 1)
    throw DegenerateInputError(
        std::string("sign: ") + what + " shares a factor with the modulus", g);
}

Int draw_r(const PrivateKey& sk, RandomSource& rng) {
  for (;;) {
    Int r = rng.in_range(1, sk.n());
    Int g;
    mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), sk.n().get_mpz_t());
    if (g == 1) return r;
  }
}

// U = R^2 (f1 psi1 + f2 psi2) mod N. m f1 is a residue mod p and m f2 one
// mod q, so m U is a residue mod N whatever class m falls in.
Int pad_u(const Int& m, const PrivateKey& sk, const Int& r, bool blum_pad) {
  check_coprime(m, sk.n(), "message");
  Int m1 = normalize(m, sk.p());
  Int m2 = normalize(m, sk.q());
  Int f1, f2;
  if (blum_pad) {
    f1 = jacobi(m1, sk.p());
    f2 = jacobi(m2, sk.q());
  } else {
    f1 = jacobi(m1, sk.p()) == 1 ? Int(1) : m1;
    f2 = jacobi(m2, sk.q()) == 1 ? Int(1) : m2;
  }
  Int pad = normalize(f1 * sk.psi1() + f2 * sk.psi2(), sk.n());
  return normalize(r * r % sk.n() * pad, sk.n());
}

}  // namespace

Int pad_factor(const Int& m, const PrivateKey& sk, RandomSource& rng) {
  return pad_u(m, sk, draw_r(sk, rng), false);
}

Int pad_factor_with_r(const Int& m, const PrivateKey& sk, const Int& r) {
  check_coprime(r, sk.n(), "pad randomizer");
  return pad_u(m, sk, r, false);
}

Int blum_pad_factor(const Int& m, const PrivateKey& sk, RandomSource& rng) {
  if (!sk.is_blum())
    throw WrongKeyClassError("sign: Legendre padding needs a Blum key");
  return pad_u(m, sk, draw_r(sk, rng), true);
}

Int blum_pad_factor_with_r(const Int& m, const PrivateKey& sk, const Int& r) {
  if (!sk.is_blum())
    throw WrongKeyClassError("sign: Legendre padding needs a Blum key");
  check_coprime(r, sk.n(), "pad randomizer");
  return pad_u(m, sk, r, true);
}

Signature sign(const Int& m, const PrivateKey& sk, RandomSource& rng,
               bool blum_pad) {
  Int u = blum_pad ? blum_pad_factor(m, sk, rng) : pad_factor(m, sk, rng);
  Int mu = normalize(m * u, sk.n());
  RootQuad rq = square_roots(mu, sk, rng);
  return {u, rq.x1};
}

bool verify(const Int& m, const Signature& sig, const PublicKey& pk) {
  if (sig.u < 1 || sig.u >= pk.n || sig.s < 1 || sig.s >= pk.n) return false;
  return sig.s * sig.s % pk.n == normalize(m * sig.u, pk.n);
}

}  // namespace rabin
