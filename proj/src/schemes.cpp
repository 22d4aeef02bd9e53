#include "rabin/schemes.hpp"

#include <array>
#include <vector>

#include "rabin/dedekind.hpp"

namespace rabin {

namespace {

Int normalize(Int x, const Int& n) {
  x %= n;
  if (x < 0) x += n;
  return x;
}

int parity(const Int& x) { return mpz_odd_p(x.get_mpz_t()) ? 1 : 0; }

void check_message(const Int& m, const Int& n) {
  if (m < 1 || m >= n)
    throw PreconditionError("encrypt: message must lie in [1, N)");
  Int g;
  mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
  if (g != 1)
    throw DegenerateInputError(
        "encrypt: message shares a factor with the modulus", g);
}

void require_blum(const PrivateKey& sk, const char* who) {
  if (!sk.is_blum())
    throw WrongKeyClassError(std::string(who) + ": Blum key required");
}

}  // namespace

// ---- Williams ----

WilliamsPublicKey williams_setup(const PrivateKey& sk) {
  require_blum(sk, "williams");
  for (Int s = 2;; ++s)
    if (jacobi(s, sk.n()) == -1) return {sk.n(), s};
}

WilliamsCiphertext williams_encrypt(const Int& m,
                                    const WilliamsPublicKey& pk) {
  check_message(m, pk.n);
  int c1 = (1 - jacobi(m, pk.n)) / 2;
  Int mbar = c1 ? normalize(pk.s * m, pk.n) : m;
  return {normalize(mbar * mbar, pk.n), c1, parity(mbar)};
}

Int williams_decrypt(const WilliamsCiphertext& ct, const PrivateKey& sk,
                     const WilliamsPublicKey& pk) {
  require_blum(sk, "williams");
  const Int& n = sk.n();
  Int c = normalize(ct.c, n);
  Int d = ((sk.p() - 1) * (sk.q() - 1) / 4 + 1) / 2;
  Int root = mod_pow(c, d, n);
  // The candidates root and n - root have opposite parity (n odd); c2 picks
  // the scaled message.
  Int mbar = parity(root) == ct.c2 ? root : n - root;
  if (mbar * mbar % n != c)
    throw IntegrityError("williams: ciphertext fails the root check");
  return ct.c1 ? normalize(mbar * mod_inverse(pk.s, n), n) : mbar;
}

// ---- Jacobi variant I ----

VariantICiphertext v1_encrypt(const Int& m, const PublicKey& pk) {
  check_message(m, pk.n);
  return {normalize(m * m, pk.n), parity(m), (1 + jacobi(m, pk.n)) / 2};
}

Int v1_decrypt(const VariantICiphertext& ct, const PrivateKey& sk) {
  RootQuad rq;
  try {
    rq = square_roots(normalize(ct.c, sk.n()), sk);
  } catch (const NonResidueError&) {
    throw IntegrityError("variant I: ciphertext is not a quadratic residue");
  }
  for (const Int* x : {&rq.x1, &rq.x2, &rq.x3, &rq.x4}) {
    if (parity(*x) != ct.b0) continue;
    if ((1 + jacobi(*x, sk.n())) / 2 == ct.b1) return *x;
  }
  throw IntegrityError("variant I: no root matches the identification bits");
}

// ---- Jacobi variant II ----

VariantIIPublicKey v2_setup(const PrivateKey& sk, const Int& alpha) {
  require_blum(sk, "variant II");
  const Int& n = sk.n();
  Int g;
  mpz_gcd(g.get_mpz_t(), alpha.get_mpz_t(), n.get_mpz_t());
  if (g != 1)
    throw DegenerateInputError(
        "variant II: alpha shares a factor with the modulus", g);
  Int xi = normalize(alpha * alpha % n * sk.psi1() - sk.psi2(), n);
  if (jacobi(xi, sk.p()) != 1 || jacobi(xi, sk.q()) != -1)
    throw IntegrityError("variant II: xi fails its symbol conditions");
  return {n, xi};
}

VariantIICiphertext v2_encrypt(const Int& m, const VariantIIPublicKey& pk) {
  check_message(m, pk.n);
  int b0 = parity(m);
  int b1 = (1 - jacobi(m, pk.n)) / 2;
  Int c = normalize(m * m, pk.n);
  if (b1) c = pk.n - c;
  if (b0) c = normalize(c * pk.xi, pk.n);
  return {c};
}

Int v2_decrypt(const VariantIICiphertext& ct, const PrivateKey& sk,
               const VariantIIPublicKey& pk) {
  require_blum(sk, "variant II");
  const Int& n = sk.n();
  Int c = normalize(ct.c, n);
  int jn = jacobi(c, n);
  int jq = jacobi(c, sk.q());
  if (jn == 0 || jq == 0)
    throw IntegrityError(
        "variant II: ciphertext shares a factor with the modulus");
  // (C/N) = (-1)^b0 since only the xi factor flips the full symbol, and
  // (C/q) = (-1)^(b0+b1) since both xi and -1 flip the symbol mod q.
  int b0 = (1 - jn) / 2;
  int b1 = ((1 - jq) / 2) ^ b0;
  Int stripped = c;
  if (b0) stripped = normalize(stripped * mod_inverse(pk.xi, n), n);
  if (b1) stripped = n - stripped;
  RootQuad rq;
  try {
    rq = square_roots(stripped, sk);
  } catch (const NonResidueError&) {
    throw IntegrityError("variant II: stripped ciphertext is not a residue");
  }
  int want = b1 ? -1 : 1;
  for (const Int* x : {&rq.x1, &rq.x2, &rq.x3, &rq.x4})
    if (parity(*x) == b0 && jacobi(*x, n) == want) return *x;
  throw IntegrityError("variant II: no root matches the recovered bits");
}

// ---- Dedekind-sum variant ----

DedekindCiphertext dedekind_encrypt(const Int& m, const PublicKey& pk) {
  if (pk.n % 4 != 1)
    throw PreconditionError("dedekind scheme: modulus must be 1 mod 4");
  check_message(m, pk.n);
  return {normalize(m * m, pk.n), parity(m), dedekind_parity(m, pk.n)};
}

Int dedekind_decrypt(const DedekindCiphertext& ct, const PrivateKey& sk) {
  RootQuad rq;
  try {
    rq = square_roots(normalize(ct.c, sk.n()), sk);
  } catch (const NonResidueError&) {
    throw IntegrityError("dedekind: ciphertext is not a quadratic residue");
  }
  for (const Int* x : {&rq.x1, &rq.x2, &rq.x3, &rq.x4}) {
    if (parity(*x) != ct.b0) continue;
    if (dedekind_parity(*x, sk.n()) == ct.b1) return *x;
  }
  throw IntegrityError("dedekind: no root matches the identification bits");
}

// ---- Group-isomorphism variant ----

GisoPublicKey giso_setup(const PrivateKey& sk, RandomSource& rng) {
  const Int& n = sk.n();
  Int big_p, mu;
  for (mu = 2;; mu += 2) {
    big_p = mu * n + 1;
    if (is_probable_prime(big_p, 32, rng)) break;
  }
  // P - 1 = mu * N; its prime factors are p, q and the factors of mu, which
  // stays small enough for trial division.
  std::vector<Int> factors{sk.p(), sk.q()};
  Int rest = mu;
  for (Int d = 2; d * d <= rest; ++d) {
    if (rest % d != 0) continue;
    factors.push_back(d);
    while (rest % d == 0) rest /= d;
  }
  if (rest > 1) factors.push_back(rest);
  Int pm1 = big_p - 1;
  Int g = 2;
  for (;; ++g) {
    bool primitive = true;
    for (const Int& r : factors) {
      if (mod_pow(g, pm1 / r, big_p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) break;
  }
  Int g1 = mod_pow(g, mu, big_p);
  Int g2 = mod_pow(g1, normalize(sk.psi1() - sk.psi2(), n), big_p);
  return {n, big_p, g1, g2};
}

namespace {

unsigned long lowest_diff_bit(const Int& a, const Int& b) {
  Int d = a ^ b;
  return mpz_scan1(d.get_mpz_t(), 0);
}

}  // namespace

GisoCiphertext giso_encrypt(const Int& m, const GisoPublicKey& pk) {
  check_message(m, pk.n);
  Int a = mod_pow(pk.g1, m, pk.big_p);
  Int b = mod_pow(pk.g2, m, pk.big_p);
  Int binv = mod_inverse(b, pk.big_p);
  // a == b would force q | m and a == binv would force p | m; the coprimality
  // check rules both out, so the differing positions exist.
  GisoCiphertext ct;
  ct.c = normalize(m * m, pk.n);
  ct.b0 = parity(m);
  ct.p1 = lowest_diff_bit(a, b);
  ct.d1 = mpz_tstbit(a.get_mpz_t(), ct.p1);
  ct.p2 = lowest_diff_bit(a, binv);
  ct.d2 = mpz_tstbit(a.get_mpz_t(), ct.p2);
  return ct;
}

Int giso_decrypt(const GisoCiphertext& ct, const PrivateKey& sk,
                 const GisoPublicKey& pk, RandomSource& rng) {
  RootQuad rq;
  try {
    rq = square_roots(normalize(ct.c, sk.n()), sk, rng);
  } catch (const NonResidueError&) {
    throw IntegrityError("giso: ciphertext is not a quadratic residue");
  }
  // Of the two parity-b0 candidates, the true message maps to the observed
  // bits and the other maps to g2^m or g2^-m, which differs at p1 or p2.
  const Int* chosen = nullptr;
  int matches = 0;
  for (const Int* x : {&rq.x1, &rq.x2, &rq.x3, &rq.x4}) {
    if (parity(*x) != ct.b0) continue;
    Int w = mod_pow(pk.g1, *x, pk.big_p);
    if (mpz_tstbit(w.get_mpz_t(), ct.p1) == ct.d1 &&
        mpz_tstbit(w.get_mpz_t(), ct.p2) == ct.d2) {
      chosen = x;
      ++matches;
    }
  }
  if (matches != 1)
    throw IntegrityError("giso: identification bits match " +
                         std::to_string(matches) + " roots");
  return *chosen;
}

}  // namespace rabin
