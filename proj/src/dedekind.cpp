#include "qcong/dedekind.hpp"

#include "qcong/errors.hpp"

namespace qcong {

namespace {

Rational dedekind_sum_small(long long d, long long c) {
    // 4 c^2 s(d,c) = sum (2r - c)(2<dr>_c - c), accumulated in 128 bits
    __int128 acc = 0;
    const long long dm = ((d % c) + c) % c;
    long long rd = 0; // <d r>_c
    for (long long r = 1; r < c; ++r) {
        rd += dm;
        if (rd >= c)
            rd -= c;
        acc += static_cast<__int128>(2 * r - c) * (2 * rd - c);
    }
    const bool neg = acc < 0;
    const unsigned __int128 mag =
        neg ? static_cast<unsigned __int128>(-acc) : static_cast<unsigned __int128>(acc);
    Int num(static_cast<unsigned long>(mag >> 64));
    num <<= 64;
    num += static_cast<unsigned long>(mag);
    if (neg)
        num = -num;
    return make_rational(num, 4 * to_int(c) * to_int(c));
}

} // namespace

Rational dedekind_sum(const Int& d, const Int& c) {
    if (c < 1)
        throw precondition_error("dedekind_sum: c must be >= 1");
    if (c == 1)
        return Rational(0);
    if (c.fits_slong_p() && d.fits_slong_p() && c < (Int(1) << 30))
        return dedekind_sum_small(d.get_si(), c.get_si());
    Int acc = 0;
    Int dm = d % c;
    if (dm < 0)
        dm += c;
    Int rd = 0;
    for (Int r = 1; r < c; ++r) {
        rd += dm;
        if (rd >= c)
            rd -= c;
        acc += (2 * r - c) * (2 * rd - c);
    }
    return make_rational(acc, Int(4) * c * c);
}

Rational dedekind_sum_fast(const Int& d, const Int& c) {
    if (c < 1)
        throw precondition_error("dedekind_sum_fast: c must be >= 1");
    Int g;
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), c.get_mpz_t());
    if (g != 1)
        throw precondition_error("dedekind_sum_fast: arguments must be coprime");
    // s(d,c) = -1/4 + (d^2 + c^2 + 1)/(12 d c) - s(c mod d, d), Euclid-style
    Rational acc(0);
    Int dd = d % c;
    if (dd < 0)
        dd += c;
    Int cc = c;
    int sign = 1;
    while (cc > 1) {
        // here 0 <= dd < cc, gcd = 1; dd = 0 only when cc = 1
        acc += sign * (Rational(-1, 4) +
                       make_rational(dd * dd + cc * cc + 1, 12 * dd * cc));
        Int next = cc % dd;
        cc = dd;
        dd = next;
        sign = -sign;
    }
    acc.canonicalize();
    return acc;
}

Rational lemma22_defect(const Int& m, const Int& lambda, const Mat2& A) {
    if (m < 1)
        throw precondition_error("lemma22_defect: m must be >= 1");
    if (gcd(m, Int(6)) != 1)
        throw precondition_error("lemma22_defect: m must be coprime to 6");
    if (A.det() != 1)
        throw precondition_error("lemma22_defect: matrix must have det 1");
    if (A.c <= 0 || A.c % m != 0)
        throw precondition_error("lemma22_defect: need c > 0 with m | c");
    if (gcd(A.a, Int(6)) != 1)
        throw precondition_error("lemma22_defect: need (a, 6) = 1");
    const Int mc = m * A.c;
    const Rational lhs = dedekind_sum_fast(-A.d + lambda * A.c, mc);
    const Rational rhs = dedekind_sum_fast(-A.d, mc);
    Rational defect = lhs - rhs - Rational(lambda) * make_rational(1 - A.a * A.a, 12 * m);
    defect.canonicalize();
    return defect;
}

} // namespace qcong
