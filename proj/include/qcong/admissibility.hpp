#pragma once

#include <string>

#include "qcong/arith.hpp"
#include "qcong/qseries.hpp"

namespace qcong {

// Divisor of m built from the 2- and 3-adic valuations of m and B: writing
// m = 2^u 3^v m' and B = 2^r 3^s B' with (m',6) = (B',6) = 1,
//   m_B = 2^{min(r,u)} 3^{min(s,v)} m'.
Int m_B(const Int& m, const Int& B);

// Q_{m,B} = 2^alpha 3^beta m' with alpha = 0 / min(r,u) / u as r = 0 / 1,2 /
// >= 3, and beta = 0 or v as s = 0 or >= 1.
Int Q_mB(const Int& m, const Int& B);

enum class Theorem { f, omega, eta, general };
enum class Outcome { ruled_out, necessary_conditions_met, out_of_hypothesis };
enum class Reason {
    none,
    ell_does_not_divide_m,
    legendre_clash,
    ell_divides_BN,
    ell_divides_N_24n0_plus_B,
    mB_shares_factor_with_N,
    B_nonnegative,
};

const char* to_string(Theorem t);
const char* to_string(Outcome o);
const char* to_string(Reason r);

// Decision record for a candidate congruence a(m n + t) = 0 (mod ell).
// symbol_zero marks the two-tier conclusion: the necessary conditions hold,
// but ell divides the progression symbol argument, so the stronger
// weakly-holomorphic conclusion is not available.
struct ProgressionVerdict {
    Theorem theorem = Theorem::f;
    Int m, t, ell;
    Outcome outcome = Outcome::out_of_hypothesis;
    Reason reason = Reason::none;
    bool symbol_zero = false;
};

// Necessary conditions for a(m n + t) = 0 (mod ell) on f(q): ell | m and
// (24t - 1 / ell) != (-1 / ell).
ProgressionVerdict verdict_f(const Int& m, const Int& t, const Int& ell);

// Analogue for omega(q): ell | m and (3t + 2 / ell) != (-1 / ell).
ProgressionVerdict verdict_omega(const Int& m, const Int& t, const Int& ell);

// Eta-quotient case: hypotheses B < 0, ell does not divide B N, and
// (m_B, N) = 1; conclusion ell | m and (24t + B / ell) != (B / ell).
ProgressionVerdict verdict_eta(const EtaQuotientSpec& spec, const Int& m,
                               const Int& t, const Int& ell);

// General weakly holomorphic case with pole order n0: hypotheses ell does not
// divide N (24 n0 + B) and (m_B, N) = 1; conclusion ell | m and
// (24t + B / ell) != (24 n0 + B / ell).
ProgressionVerdict verdict_general(const Int& B, const Int& N, const Int& n0,
                                   const Int& m, const Int& t, const Int& ell);

// The k-color criterion at k = ell - 3: true iff (8t + 1 / ell) != 1.
bool andrews_condition(const Int& ell, const Int& t);

// Case parameters of the general reduction: M = 24N/(B,3) and eps = alpha when
// 2 || B or 4 || B, else M = 24N/(B,24) and eps = 0; Q is the ell-free part of
// Q_{m,B} and R = Q / 2^eps.
struct WhParams {
    Int M;
    int epsilon = 0;
    Int Q;
    Int R;
};

WhParams wh_params(const Int& B, const Int& N, const Int& m, const Int& ell);

} // namespace qcong
