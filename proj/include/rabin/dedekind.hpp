#pragma once

#include <gmpxx.h>

#include "rabin/numtheory.hpp"

namespace rabin {

// Exact reduced fraction: gcd(|num|, den) = 1, den >= 1, zero is 0/1.
// mpq_class keeps results canonical through arithmetic.
using Rational = mpq_class;

// Sawtooth function of period 1: x - floor(x) - 1/2 for non-integer x, else 0.
// Result lies in (-1/2, 1/2).
Rational sawtooth(const Rational& x);

// Dedekind sum s(h, k) as the literal sum of sawtooth products over
// j = 1..k-1 (the j = k term vanishes). O(k) rational operations; this is the
// test oracle, not the production path. Requires k >= 1, gcd(h, k) = 1.
Rational dedekind_sum_direct(const Int& h, const Int& k);

// Dedekind sum s(h, k) via the reciprocity identity
//   s(h, k) = -1/4 + (h^2 + k^2 + 1) / (12 h k) - s(k mod h, h)
// iterated along the Euclidean remainder chain and folded back from the base,
// so every intermediate value is itself a reduced Dedekind sum. O(log k)
// rational operations. h may be negative (handled by s(-h,k) = -s(h,k)) or
// >= k (reduced first). Requires k >= 1, gcd(h, k) = 1.
Rational dedekind_sum(const Int& h, const Int& k);

// s(h, k) mod 2 for k == 1 mod 4: the reduced denominator is odd for such k,
// so the sum taken mod 2 is just the numerator's parity. Throws
// PreconditionError when k != 1 mod 4.
int dedekind_parity(const Int& h, const Int& k);

}  // namespace rabin
