#include "rabin/analysis.hpp"

namespace rabin {

namespace {

Int normalize(Int x, const Int& n) {
  x %= n;
  if (x < 0) x += n;
  return x;
}

}  // namespace

FactorResult factor_from_roots(const Int& x, const Int& z, const Int& n) {
  if (n < 2) throw PreconditionError("factor: modulus must be >= 2");
  Int xr = normalize(x, n);
  Int zr = normalize(z, n);
  if (zr == xr || zr == normalize(n - xr, n))
    throw TrivialPairError("factor: z == +-x yields only trivial divisors");
  if (xr * xr % n != zr * zr % n)
    throw PreconditionError("factor: inputs are not roots of the same square");
  Int g;
  Int diff = xr - zr;
  mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
  return {g, n / g};
}

FactorResult factor_from_unity_root(const Int& k, const Int& n) {
  if (n < 2) throw PreconditionError("factor: modulus must be >= 2");
  Int kr = normalize(k, n);
  if (kr == 1 || kr == n - 1)
    throw TrivialPairError("factor: +-1 yields only trivial divisors");
  if (kr * kr % n != 1)
    throw PreconditionError("factor: input is not a square root of unity");
  Int g;
  Int kp1 = kr + 1;
  mpz_gcd(g.get_mpz_t(), kp1.get_mpz_t(), n.get_mpz_t());
  return {g, n / g};
}

FactorResult bitflip_attack_demo(const PrivateKey& sk, RandomSource& rng) {
  // The attacker encrypts honestly, lies about the Jacobi bit, and lets the
  // key holder decrypt. The answer is the same-parity root of the opposite
  // Jacobi symbol, never +-m, so the pair factors N every time.
  Int m;
  do {
    m = rng.in_range(1, sk.n());
  } while (gcd(m, sk.n()) != 1);
  VariantICiphertext ct = v1_encrypt(m, sk.public_key());
  ct.b1 ^= 1;
  Int z = v1_decrypt(ct, sk);
  return factor_from_roots(m, z, sk.n());
}

std::vector<std::uint8_t> toy_parity_list(const PrivateKey& sk) {
  if (sk.n() > 1048576)
    throw ScaleLimitError(
        "parity list: the table is as large as N itself; refusing N > 2^20");
  unsigned long n = sk.n().get_ui();
  unsigned long p = sk.p().get_ui();
  unsigned long q = sk.q().get_ui();
  std::vector<std::uint8_t> out(n);
  for (unsigned long i = 0; i < n; ++i)
    out[i] = static_cast<std::uint8_t>((i % p + i % q) & 1);
  return out;
}

int toy_parity_polynomial(const Int& x, const PrivateKey& sk,
                          const Int& big_p) {
  if (sk.n() > 1024)
    throw ScaleLimitError(
        "parity polynomial: evaluation is quadratic in N; refusing N > 2^10");
  if (big_p <= sk.n())
    throw PreconditionError(
        "parity polynomial: interpolation prime must exceed the modulus");
  RandomSource rng = RandomSource::from_entropy();
  if (!is_probable_prime(big_p, 32, rng))
    throw PreconditionError(
        "parity polynomial: interpolation modulus must be prime");
  unsigned long n = sk.n().get_ui();
  unsigned long p = sk.p().get_ui();
  unsigned long q = sk.q().get_ui();
  Int pm1 = big_p - 1;
  // L(x) = sum_j (1 - (x-j)^(P-1)) parity(j); each term is parity(j) when
  // x == j mod P and 0 otherwise, so the sum lands back in {0, 1}.
  Int acc = 0;
  for (unsigned long j = 1; j < n; ++j) {
    if (((j % p + j % q) & 1) == 0) continue;
    acc += 1 - mod_pow(x - j, pm1, big_p);
  }
  return static_cast<int>(normalize(acc, big_p).get_ui());
}

}  // namespace rabin
