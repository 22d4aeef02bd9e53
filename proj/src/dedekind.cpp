#include "rabin/dedekind.hpp"

#include <vector>

namespace rabin {

namespace {

// mpq_class(num, den) does not canonicalize; arithmetic assumes it has been.
Rational frac(const Int& num, const Int& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

void check_args(const Int& h, const Int& k) {
  if (k < 1) throw PreconditionError("dedekind sum: k must be >= 1");
  Int g;
  mpz_gcd(g.get_mpz_t(), h.get_mpz_t(), k.get_mpz_t());
  if (g != 1)
    throw CoprimalityError("dedekind sum: arguments must be coprime");
}

}  // namespace

Rational sawtooth(const Rational& x) {
  if (x.get_den() == 1) return Rational(0);
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return x - fl - frac(1, 2);
}

Rational dedekind_sum_direct(const Int& h, const Int& k) {
  check_args(h, k);
  Rational sum(0);
  for (Int j = 1; j < k; ++j)
    sum += sawtooth(frac(h * j, k)) * sawtooth(frac(j, k));
  return sum;
}

Rational dedekind_sum(const Int& h, const Int& k) {
  check_args(h, k);
  if (h < 0) return -dedekind_sum(-h, k);
  if (k == 1) return Rational(0);
  Int hr = h % k;
  // Euclidean remainder chain k = r0 > r1 = hr > r2 > ... > rm = 1 > 0.
  std::vector<Int> r{k, hr};
  while (r.back() != 1) r.push_back(r[r.size() - 2] % r.back());
  // Reciprocity, s(a, b) = -1/4 + (a^2 + b^2 + 1)/(12ab) - s(b mod a, a),
  // folded from the base s(0, 1) = 0 upward. Every intermediate is itself a
  // reduced Dedekind sum s(r[i], r[i-1]), so numerators and denominators stay
  // bounded by the chain values instead of compounding.
  Rational s(0);
  for (size_t i = r.size() - 1; i >= 1; --i)
    s = frac(r[i] * r[i] + r[i - 1] * r[i - 1] + 1, 12 * r[i] * r[i - 1]) - s -
        frac(1, 4);
  return s;
}

int dedekind_parity(const Int& h, const Int& k) {
  if (k % 4 != 1)
    throw PreconditionError("dedekind parity: k must be 1 mod 4");
  // The reduced denominator is odd for such k, so the sum mod 2 is just the
  // numerator's parity.
  Rational s = dedekind_sum(h, k);
  return mpz_odd_p(s.get_num().get_mpz_t()) ? 1 : 0;
}

}  // namespace rabin
