#include "rabin/numtheory.hpp"

#include <array>

namespace rabin {

namespace {

Int normalize(Int x, const Int& n) {
  x %= n;
  if (x < 0) x += n;
  return x;
}

}  // namespace

ExtGcd ext_gcd(const Int& a, const Int& b) {
  if (a == 0 && b == 0)
    throw DegenerateInputError("ext_gcd: gcd(0, 0) is undefined");
  ExtGcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.u.get_mpz_t(), r.v.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return r;
}

Int mod_pow(const Int& base, const Int& exp, const Int& modulus) {
  if (modulus < 1) throw InvalidModulusError("mod_pow: modulus must be >= 1");
  if (modulus == 1) return 0;
  Int r;
  if (exp < 0) {
    // mpz_powm on a negative exponent aborts when the base is not invertible;
    // route through mod_inverse so the failure carries the gcd instead.
    Int inv = mod_inverse(base, modulus);
    Int e = -exp;
    mpz_powm(r.get_mpz_t(), inv.get_mpz_t(), e.get_mpz_t(),
             modulus.get_mpz_t());
    return r;
  }
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(),
           modulus.get_mpz_t());
  return r;
}

Int mod_inverse(const Int& a, const Int& n) {
  if (n < 2) throw InvalidModulusError("mod_inverse: modulus must be >= 2");
  ExtGcd eg = ext_gcd(a, n);
  if (eg.g != 1)
    throw NotInvertibleError(
        "mod_inverse: argument shares a factor with the modulus", eg.g);
  return normalize(eg.u, n);
}

int jacobi(const Int& a, const Int& n) {
  if (n < 1 || mpz_even_p(n.get_mpz_t()))
    throw InvalidModulusError("jacobi: modulus must be odd and positive");
  return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

namespace {

// One Miller-Rabin round. n odd, n - 1 = d * 2^r with d odd, a the base.
// Returns true when a proves n composite.
bool mr_composite(const Int& n, const Int& nm1, const Int& d, unsigned long r,
                  const Int& a) {
  Int x = mod_pow(a, d, n);
  if (x == 1 || x == nm1) return false;
  for (unsigned long i = 1; i < r; ++i) {
    x = x * x % n;
    if (x == nm1) return false;
  }
  return true;
}

// Enough for every n < 3.3 * 10^24, in particular all 64-bit inputs.
constexpr std::array<unsigned long, 12> kSmallWitnesses = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool is_probable_prime(const Int& n, int rounds, RandomSource& rng) {
  if (rounds < 1)
    throw PreconditionError("is_probable_prime: rounds must be >= 1");
  if (n < 2) return false;
  for (unsigned long w : kSmallWitnesses) {
    if (n == w) return true;
    if (n % w == 0) return false;
  }
  Int nm1 = n - 1;
  unsigned long r = mpz_scan1(nm1.get_mpz_t(), 0);
  Int d = nm1 >> r;
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
    for (unsigned long w : kSmallWitnesses)
      if (mr_composite(n, nm1, d, r, w)) return false;
    return true;
  }
  for (int i = 0; i < rounds; ++i) {
    Int a = rng.in_range(2, nm1);
    if (mr_composite(n, nm1, d, r, a)) return false;
  }
  return true;
}

Int gen_prime(unsigned long bits, int residue_mod_4, RandomSource& rng) {
  if (bits < 4) throw PreconditionError("gen_prime: need at least 4 bits");
  if (residue_mod_4 != 1 && residue_mod_4 != 3)
    throw PreconditionError("gen_prime: residue class must be 1 or 3");
  for (;;) {
    Int c = rng.bits(bits);
    mpz_setbit(c.get_mpz_t(), bits - 1);
    mpz_clrbit(c.get_mpz_t(), 0);
    mpz_clrbit(c.get_mpz_t(), 1);
    c += residue_mod_4;
    if (is_probable_prime(c, 32, rng)) return c;
  }
}

Int sqrt_mod_blum(const Int& c, const Int& p) {
  if (p < 3 || p % 4 != 3)
    throw PreconditionError("sqrt_mod_blum: prime must be 3 mod 4");
  Int cc = normalize(c, p);
  Int r = mod_pow(cc, (p + 1) / 4, p);
  if (r * r % p != cc)
    throw NonResidueError("sqrt_mod_blum: input is not a quadratic residue");
  return r;
}

Int tonelli_shanks(const Int& c, const Int& p, RandomSource& rng) {
  if (p < 3 || mpz_even_p(p.get_mpz_t()))
    throw PreconditionError("tonelli_shanks: modulus must be an odd prime");
  Int cc = normalize(c, p);
  if (jacobi(cc, p) != 1)
    throw NonResidueError("tonelli_shanks: input is not a quadratic residue");
  // p - 1 = q * 2^s, q odd
  Int q = p - 1;
  unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
  q >>= s;
  // The 2-Sylow generator is needed only when the loop below can run, which
  // never happens for s = 1 (t = c^q is the Legendre symbol, already 1).
  // Skipping the draw also keeps the [2, p-1) sampler away from p = 3.
  Int b = 0;
  if (s >= 2) {
    Int z;
    do {
      z = rng.in_range(2, p - 1);
    } while (jacobi(z, p) != -1);
    b = mod_pow(z, q, p);
  }
  Int t = mod_pow(cc, q, p);
  Int r = mod_pow(cc, (q + 1) / 2, p);
  unsigned long m = s;
  while (t != 1) {
    unsigned long i = 0;
    Int t2 = t;
    while (t2 != 1) {
      t2 = t2 * t2 % p;
      ++i;
    }
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b % p;
    r = r * b % p;
    b = b * b % p;
    t = t * b % p;
    m = i;
  }
  return r;
}

CrtBasis crt_basis(const Int& p, const Int& q) {
  ExtGcd eg = ext_gcd(p, q);
  if (eg.g != 1)
    throw DegenerateInputError("crt_basis: arguments share a factor", eg.g);
  Int n = p * q;
  CrtBasis b;
  b.psi1 = normalize(eg.v * q, n);
  b.psi2 = normalize(eg.u * p, n);
  return b;
}

}  // namespace rabin
