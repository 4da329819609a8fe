#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

namespace qcong {

using Int = mpz_class;
using Rational = mpq_class;

// mpz_class has no long long constructor; long is 64-bit on this target.
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }

// Canonical rational num/den with den > 0 and gcd(num, den) = 1.
Rational make_rational(const Int& num, const Int& den);

// Jacobi symbol (a/n) for odd n >= 1; equals the Legendre symbol when n is an
// odd prime. jacobi(a, 1) = 1 (empty product).
int jacobi(const Int& a, const Int& n);

// Inverse of a modulo m, returned in [0, m). Requires gcd(a, m) = 1.
Int inv_mod(const Int& a, const Int& m);

bool is_prime(const Int& n);

// x - floor(x), in [0, 1).
Rational frac_part(const Rational& x);

// Exact root of unity e^{2 pi i * exponent}, exponent kept reduced in [0, 1).
// Equality is structural on the stored exponent.
class UnitRoot {
public:
    UnitRoot() : e_(0) {}

    static UnitRoot from_exponent(const Rational& e);
    static UnitRoot from_exponent(long num, long den);

    const Rational& exponent() const { return e_; }
    bool is_one() const { return e_ == 0; }

    UnitRoot operator*(const UnitRoot& o) const { return from_exponent(e_ + o.e_); }
    UnitRoot inverse() const { return from_exponent(-e_); }
    UnitRoot pow(const Int& n) const { return from_exponent(Rational(n) * e_); }

    bool operator==(const UnitRoot& o) const { return e_ == o.e_; }
    bool operator!=(const UnitRoot& o) const { return !(*this == o); }

    std::complex<long double> to_complex() const;
    // "e(3/8)" denotes exp(2 pi i * 3/8).
    std::string str() const;

private:
    Rational e_;
};

inline UnitRoot unitroot_pow(const UnitRoot& u, const Int& n) { return u.pow(n); }

} // namespace qcong
