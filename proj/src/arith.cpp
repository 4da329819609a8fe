#include "qcong/arith.hpp"

#include <cmath>

#include "qcong/errors.hpp"

namespace qcong {

Rational make_rational(const Int& num, const Int& den) {
    if (den == 0)
        throw precondition_error("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

int jacobi(const Int& a, const Int& n) {
    if (n <= 0 || mpz_even_p(n.get_mpz_t()))
        throw precondition_error("jacobi: modulus must be odd and positive");
    return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

Int inv_mod(const Int& a, const Int& m) {
    if (m <= 0)
        throw precondition_error("inv_mod: modulus must be positive");
    if (m == 1)
        return 0;
    Int r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw precondition_error("inv_mod: argument not invertible for this modulus");
    return r;
}

bool is_prime(const Int& n) {
    if (n < 2)
        return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Rational frac_part(const Rational& x) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    Rational r = x - Rational(fl);
    r.canonicalize();
    return r;
}

UnitRoot UnitRoot::from_exponent(const Rational& e) {
    UnitRoot u;
    u.e_ = frac_part(e);
    return u;
}

UnitRoot UnitRoot::from_exponent(long num, long den) {
    return from_exponent(make_rational(Int(num), Int(den)));
}

std::complex<long double> UnitRoot::to_complex() const {
    // The exponent lives in [0,1): a double mantissa is plenty for the
    // residual tolerances used by the numeric checks.
    const long double x = 2.0L * 3.14159265358979323846264338327950288L
                          * static_cast<long double>(e_.get_d());
    return {std::cos(x), std::sin(x)};
}

std::string UnitRoot::str() const {
    return "e(" + e_.get_str() + ")";
}

} // namespace qcong
