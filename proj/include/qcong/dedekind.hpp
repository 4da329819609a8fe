#pragma once

#include "qcong/arith.hpp"
#include "qcong/mat2.hpp"

namespace qcong {

// Dedekind sum s(d, c) = sum_{r=1}^{c-1} ((r/c)) ((dr/c)) evaluated with the
// literal sawtooth x - floor(x) - 1/2. On coprime (d, c) this matches the
// classical convention; for gcd(d, c) > 1 the inner factor can hit -1/2 at
// integers and the literal value is returned as written.
Rational dedekind_sum(const Int& d, const Int& c);

// Log-time evaluator via the reciprocity recursion; requires gcd(d, c) = 1.
// Equals dedekind_sum(d mod c, c).
Rational dedekind_sum_fast(const Int& d, const Int& c);

// s(-d + lambda c, m c) - s(-d, m c) - lambda (1 - a^2) / (12 m) for
// A = [[a,b],[c,d]] with det 1, m | c, c > 0, (a, 6) = 1, (m, 6) = 1.
// The shift identity says this is an even integer.
Rational lemma22_defect(const Int& m, const Int& lambda, const Mat2& A);

} // namespace qcong
