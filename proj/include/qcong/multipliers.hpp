#pragma once

#include <complex>

#include "qcong/arith.hpp"
#include "qcong/mat2.hpp"

namespace qcong {

// Eta multiplier: eta(Az) = xi(A) (cz+d)^{1/2} eta(z). Matrices with c < 0
// are negated first; translations (c = 0) reduce to the plain q^{b/24} shift.
UnitRoot xi(const Mat2& A);

// Multiplier of the completed f-transform on matrices with 2 | c:
//   i^{-1/2} (-1)^{(c+1+ad)/2}
//        e(-s(-d,c)/2 - (a+d)/24c - a/4 + 3cd/8).
UnitRoot w_of(const Mat2& A);

// Multipliers of the completed omega-transform: w1 needs 2 | c, w2 needs
// 2 | d. Both are assembled exactly from the stated closed forms; the 3a/c
// term of w2 is kept literally as a rational exponent.
UnitRoot w1_of(const Mat2& A);
UnitRoot w2_of(const Mat2& A);

struct EtaCheck {
    long double residual = 0;
    long double tol = 0;
    long long terms = 0;
    bool ok() const { return residual < tol; }
};

// Numerically verifies eta(Az) = xi(A) (cz+d)^{1/2} eta(z) through the
// truncated q-product with `terms` factors (0 picks the count from the
// q-decay at both z and Az; an explicit count that cannot meet tol raises
// precision_error). Principal branch square root; long double throughout.
EtaCheck verify_eta_numeric(const Mat2& A, std::complex<long double> z,
                            long long terms, long double tol);

// Exact cusp leading constant K = unit / sqrt(radical) of the twisted
// expansions, obtained by collapsing the ell-term sum: every term must carry
// one common root of unity, and that unit must satisfy u^{48 Q ell^2} = 1.
// Non-collapse raises diagnostic_error (a transcription bug, not an input
// error).
struct LeadingConstant {
    UnitRoot unit;
    Int radical; // K = unit * radical^{-1/2}
};

// f-case: requires (Q, 6 ell) = 1, prime ell >= 5, and
// t = (1 - Q^2)/24 (mod ell). radical = Q.
LeadingConstant leading_constant_f(long long Q, long long ell, long long t);

// omega-case: requires 4 | Q, (Q, 3 ell) = 1, prime ell >= 5, and
// t = -(Q^2 + 32)/48 (mod ell). radical = 2Q.
LeadingConstant leading_constant_omega(long long Q, long long ell, long long t);

// Smallest nonnegative t satisfying the respective congruence above.
long long leading_f_default_t(long long Q, long long ell);
long long leading_omega_default_t(long long Q, long long ell);

} // namespace qcong
