#include "rabin/keys.hpp"

#include <utility>

namespace rabin {

namespace {

Int normalize(Int x, const Int& n) {
  x %= n;
  if (x < 0) x += n;
  return x;
}

constexpr int kDistinctPrimeAttempts = 4096;

}  // namespace

PrivateKey::PrivateKey(Int p, Int q) : p_(std::move(p)), q_(std::move(q)) {
  n_ = p_ * q_;
  CrtBasis b = crt_basis(p_, q_);
  psi1_ = b.psi1;
  psi2_ = b.psi2;
  blum_ = p_ % 4 == 3 && q_ % 4 == 3;
}

PrivateKey PrivateKey::from_primes(const Int& p, const Int& q) {
  if (p < 3 || q < 3 || mpz_even_p(p.get_mpz_t()) || mpz_even_p(q.get_mpz_t()))
    throw PreconditionError("key: both factors must be odd primes >= 3");
  if (p == q)
    throw DegenerateInputError("key: factors must be distinct", p);
  RandomSource rng = RandomSource::from_entropy();
  if (!is_probable_prime(p, 32, rng) || !is_probable_prime(q, 32, rng))
    throw PreconditionError("key: both factors must be prime");
  return PrivateKey(p, q);
}

PrivateKey PrivateKey::generate(unsigned long bits, bool blum,
                                RandomSource& rng) {
  if (bits < 4)
    throw PreconditionError("key: need at least 4 bits per prime");
  Int p = gen_prime(bits, blum ? 3 : 1, rng);
  // At tiny sizes a residue class can hold a single prime, so a distinct
  // second draw may be impossible; give up after a bounded number of tries
  // rather than spinning.
  for (int i = 0; i < kDistinctPrimeAttempts; ++i) {
    int cls = blum ? 3 : (rng.below(2) == 0 ? 1 : 3);
    Int q = gen_prime(bits, cls, rng);
    if (q != p) return PrivateKey(std::move(p), std::move(q));
  }
  throw DegenerateInputError(
      "key: could not find two distinct primes at this size");
}

std::pair<PrivateKey, PublicKey> keygen(unsigned long bits, bool blum,
                                        RandomSource& rng) {
  PrivateKey sk = PrivateKey::generate(bits, blum, rng);
  PublicKey pk = sk.public_key();
  return {std::move(sk), std::move(pk)};
}

namespace {

RootQuad roots_impl(const Int& c, const PrivateKey& sk, RandomSource* rng) {
  const Int& n = sk.n();
  Int cc = normalize(c, n);
  Int g;
  mpz_gcd(g.get_mpz_t(), cc.get_mpz_t(), n.get_mpz_t());
  if (g != 1)
    throw DegenerateInputError(
        "square_roots: input shares a factor with the modulus", g);
  auto prime_root = [&](const Int& prime) {
    Int cp = cc % prime;
    return prime % 4 == 3 ? sqrt_mod_blum(cp, prime)
                          : tonelli_shanks(cp, prime, *rng);
  };
  Int rp = prime_root(sk.p());
  Int rq = prime_root(sk.q());
  RootQuad out;
  // Canonical labeling: u1 and v1 are the even representatives.
  out.u1 = mpz_even_p(rp.get_mpz_t()) ? rp : sk.p() - rp;
  out.u2 = sk.p() - out.u1;
  out.v1 = mpz_even_p(rq.get_mpz_t()) ? rq : sk.q() - rq;
  out.v2 = sk.q() - out.v1;
  out.x1 = (out.u1 * sk.psi1() + out.v1 * sk.psi2()) % n;
  out.x2 = (out.u1 * sk.psi1() + out.v2 * sk.psi2()) % n;
  out.x3 = (out.u2 * sk.psi1() + out.v1 * sk.psi2()) % n;
  out.x4 = (out.u2 * sk.psi1() + out.v2 * sk.psi2()) % n;
  return out;
}

}  // namespace

RootQuad square_roots(const Int& c, const PrivateKey& sk, RandomSource& rng) {
  return roots_impl(c, sk, &rng);
}

RootQuad square_roots(const Int& c, const PrivateKey& sk) {
  if (!sk.is_blum())
    throw WrongKeyClassError(
        "square_roots: deterministic extraction needs a Blum key");
  return roots_impl(c, sk, nullptr);
}

std::array<RootLabel, 4> root_labels(const RootQuad& rq,
                                     const PrivateKey& sk) {
  auto label = [&](const Int& x) {
    Int bp = x % sk.p() % 2;
    Int bq = x % sk.q() % 2;
    return RootLabel{static_cast<int>(bp.get_ui()),
                     static_cast<int>(bq.get_ui())};
  };
  return {label(rq.x1), label(rq.x2), label(rq.x3), label(rq.x4)};
}

UnitRoots unit_roots(const PrivateKey& sk) {
  Int a = normalize(sk.psi1() - sk.psi2(), sk.n());
  return {1, a, sk.n() - a, sk.n() - 1};
}

}  // namespace rabin
