#include "qcong/multipliers.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "qcong/dedekind.hpp"
#include "qcong/errors.hpp"

namespace qcong {

namespace {

void require_det_one(const Mat2& A) {
    if (A.det() != 1)
        throw precondition_error("multiplier: matrix must have det 1");
}

UnitRoot jacobi_sign(int symbol) {
    if (symbol == 0)
        throw diagnostic_error("multiplier: vanishing Jacobi symbol on coprime entries");
    return symbol == 1 ? UnitRoot() : UnitRoot::from_exponent(1, 2);
}

} // namespace

UnitRoot xi(const Mat2& M) {
    require_det_one(M);
    const Mat2 A = M.normalized();
    if (A.c == 0) {
        // A = [[1,b],[0,1]]: eta(z + b) = e(b/24) eta(z)
        return UnitRoot::from_exponent(make_rational(A.b, Int(24)));
    }
    Rational e;
    int symbol;
    if (A.c % 2 == 0) {
        symbol = jacobi(A.c, abs(A.d));
        const Int br = (A.a + A.d) * A.c - A.b * A.d * (A.c * A.c - 1) + 3 * A.d - 3 -
                       3 * A.c * A.d;
        e = make_rational(br, Int(24));
    } else {
        symbol = jacobi(A.d, A.c);
        const Int br = (A.a + A.d) * A.c - A.b * A.d * (A.c * A.c - 1) - 3 * A.c;
        e = make_rational(br, Int(24));
    }
    return jacobi_sign(symbol) * UnitRoot::from_exponent(e);
}

UnitRoot w_of(const Mat2& M) {
    require_det_one(M);
    const Mat2 A = M.normalized();
    if (A.c == 0) {
        // the completed f-transform has expansion q^{-1/24}(1 + ...), so the
        // translation shift is e(-b/24)
        return UnitRoot::from_exponent(make_rational(-A.b, Int(24)));
    }
    if (A.c % 2 != 0)
        throw precondition_error("w: matrix must have even c");
    const Int par = (A.c + 1 + A.a * A.d); // even since ad is odd
    Rational e = make_rational(Int(-1), Int(8)) + make_rational(par, Int(4)) -
                 dedekind_sum_fast(-A.d, A.c) / 2 -
                 make_rational(A.a + A.d, 24 * A.c) - make_rational(A.a, Int(4)) +
                 make_rational(3 * A.c * A.d, Int(8));
    return UnitRoot::from_exponent(e);
}

UnitRoot w1_of(const Mat2& M) {
    require_det_one(M);
    const Mat2 A = M.normalized();
    if (A.c == 0) {
        // the completed omega-transform has expansion 2 q^{2/3}(1 + ...)
        return UnitRoot::from_exponent(make_rational(2 * A.b, Int(3)));
    }
    if (A.c % 2 != 0)
        throw precondition_error("w1: matrix must have even c");
    Rational e = make_rational(Int(1), Int(8)) + make_rational(A.a - 1, Int(4)) -
                 dedekind_sum_fast(-A.d, A.c / 2) / 2 +
                 make_rational(3 * A.a * A.b, Int(4)) -
                 make_rational(A.a + A.d, 12 * A.c);
    return UnitRoot::from_exponent(e);
}

UnitRoot w2_of(const Mat2& M) {
    require_det_one(M);
    const Mat2 A = M.normalized();
    if (A.c == 0)
        throw precondition_error("w2: matrix must have d even and c > 0");
    if (A.d % 2 != 0)
        throw precondition_error("w2: matrix must have even d");
    Rational e = make_rational(Int(-1), Int(8)) +
                 make_rational(32 * A.a - A.d, 48 * A.c) -
                 dedekind_sum_fast(-A.d / 2, A.c) / 2 -
                 make_rational(2 * A.a + A.b - 3 - 3 * A.a * A.b, Int(4)) -
                 make_rational(3 * A.a, 4 * A.c);
    return UnitRoot::from_exponent(e);
}

namespace {

using C = std::complex<long double>;
constexpr long double kTwoPi = 2.0L * 3.14159265358979323846264338327950288L;

C cis(long double x) { return {std::cos(x), std::sin(x)}; }

// eta via the truncated product q^{1/24} prod_{n<=terms} (1 - q^n)
C eta_product(C z, long long terms) {
    const C q = cis(kTwoPi * z.real()) * std::exp(-kTwoPi * z.imag());
    C val = cis(kTwoPi * z.real() / 24.0L) * std::exp(-kTwoPi * z.imag() / 24.0L);
    C qn(1.0L, 0.0L);
    for (long long n = 1; n <= terms; ++n) {
        qn *= q;
        val *= (C(1.0L, 0.0L) - qn);
    }
    return val;
}

// |q|^{terms+1}/(1-|q|): bound on the neglected tail of sum log(1 - q^n)
long double tail_bound(C z, long long terms) {
    const long double aq = std::exp(-kTwoPi * z.imag());
    if (aq >= 1.0L)
        return 1e30L;
    return std::pow(aq, static_cast<long double>(terms) + 1.0L) / (1.0L - aq);
}

// factors needed to push the tail of log eta under eps at this point
long long terms_needed(C z, long double eps) {
    const long double aq = std::exp(-kTwoPi * z.imag());
    const long double need = (std::log(eps) + std::log(1.0L - aq)) / std::log(aq);
    long long t = static_cast<long long>(need) + 2;
    return t < 64 ? 64 : t;
}

} // namespace

EtaCheck verify_eta_numeric(const Mat2& M, std::complex<long double> z,
                            long long terms, long double tol) {
    require_det_one(M);
    if (!(z.imag() > 0))
        throw precondition_error("verify_eta: z must lie in the upper half-plane");
    if (!(tol > 0))
        throw precondition_error("verify_eta: tol must be positive");
    const Mat2 A = M.normalized();
    const C a(static_cast<long double>(A.a.get_d()), 0);
    const C b(static_cast<long double>(A.b.get_d()), 0);
    const C c(static_cast<long double>(A.c.get_d()), 0);
    const C d(static_cast<long double>(A.d.get_d()), 0);
    const C cz_d = c * z + d;
    const C Az = (a * z + b) / cz_d;

    const bool automatic = terms <= 0;
    if (automatic)
        terms = std::max(terms_needed(z, tol / 8.0L), terms_needed(Az, tol / 8.0L));

    const UnitRoot mult = xi(A);
    for (;;) {
        const C lhs = eta_product(Az, terms);
        const C rhs = mult.to_complex() * std::sqrt(cz_d) * eta_product(z, terms);
        // |f_trunc| (e^tail - 1) bounds the truncation error at each point
        const long double tz = tail_bound(z, terms);
        const long double taz = tail_bound(Az, terms);
        const long double est = std::abs(lhs) * std::expm1(std::min(taz, 60.0L)) +
                                std::abs(rhs) * std::expm1(std::min(tz, 60.0L));
        if (est < tol / 2.0L) {
            EtaCheck out;
            out.residual = std::abs(lhs - rhs);
            out.tol = tol;
            out.terms = terms;
            return out;
        }
        if (!automatic || terms > (1LL << 24))
            throw precision_error("verify_eta: truncated product cannot reach the "
                                  "requested tolerance; increase terms");
        terms *= 2;
    }
}

namespace {

void require_prime_ell(long long ell) {
    if (ell < 5 || !is_prime(to_int(ell)))
        throw hypothesis_error("leading constant: ell must be a prime >= 5");
}

LeadingConstant collapse(std::vector<UnitRoot> terms, long long ell,
                         const Int& order, const Int& radical) {
    if (static_cast<long long>(terms.size()) != ell)
        throw diagnostic_error("leading constant: expected exactly ell terms, got " +
                               std::to_string(terms.size()));
    for (const auto& u : terms)
        if (u != terms.front())
            throw diagnostic_error(
                "leading constant: term exponents do not coincide: " +
                terms.front().str() + " vs " + u.str());
    if (!terms.front().pow(order).is_one())
        throw diagnostic_error("leading constant: unit is not a " +
                               order.get_str() + "-th root of unity");
    return LeadingConstant{terms.front(), radical};
}

} // namespace

LeadingConstant leading_constant_f(long long Q, long long ell, long long t) {
    require_prime_ell(ell);
    const Int Qz = to_int(Q), Lz = to_int(ell), Tz = to_int(t);
    if (Q < 1 || std::gcd(Q, 6 * ell) != 1)
        throw hypothesis_error("leading constant (f): need (Q, 6 ell) = 1");
    if (((1 - Qz * Qz) / 24 - Tz) % Lz != 0)
        throw hypothesis_error("leading constant (f): need t = (1 - Q^2)/24 mod ell");
    std::vector<UnitRoot> terms;
    for (long long lam = 0; lam < Q * ell; ++lam) {
        const Int lz = to_int(lam);
        const Int h = 1 + 2 * Lz * lz;
        if (gcd(h, Qz) != Qz)
            continue;
        Mat2 A;
        A.a = h / Qz;
        A.b = -2 * lz * lz;
        A.c = 2 * Lz * Lz;
        A.d = Qz * (1 - 2 * Lz * lz);
        const UnitRoot twist =
            UnitRoot::from_exponent(make_rational(-lz * (24 * Tz - 1), 24 * Qz * Lz));
        const UnitRoot qshift =
            UnitRoot::from_exponent(make_rational(-Qz * lz, 24 * Lz));
        terms.push_back(twist * w_of(A) * qshift);
    }
    const Int order = 48 * Qz * Lz * Lz;
    return collapse(std::move(terms), ell, order, Qz);
}

LeadingConstant leading_constant_omega(long long Q, long long ell, long long t) {
    require_prime_ell(ell);
    const Int Qz = to_int(Q), Lz = to_int(ell), Tz = to_int(t);
    if (Q < 4 || Q % 4 != 0 || std::gcd(Q, 3 * ell) != 1)
        throw hypothesis_error("leading constant (omega): need 4 | Q and (Q, 3 ell) = 1");
    if (((Qz * Qz + 32) / 48 + Tz) % Lz != 0)
        throw hypothesis_error(
            "leading constant (omega): need t = -(Q^2 + 32)/48 mod ell");
    std::vector<UnitRoot> terms;
    for (long long lam = 0; lam < Q * ell; ++lam) {
        const Int lz = to_int(lam);
        const Int h = 1 + Lz * lz;
        if (gcd(h, Qz) != Qz)
            continue;
        Mat2 B;
        B.a = h / Qz;
        B.b = -lz * lz;
        B.c = Lz * Lz;
        B.d = Qz * (1 - Lz * lz);
        const UnitRoot twist =
            UnitRoot::from_exponent(make_rational(-lz * (3 * Tz + 2), 3 * Qz * Lz));
        const UnitRoot qshift =
            UnitRoot::from_exponent(make_rational(-Qz * lz, 48 * Lz));
        terms.push_back(twist * w2_of(B) * qshift);
    }
    const Int order = 48 * Qz * Lz * Lz;
    return collapse(std::move(terms), ell, order, 2 * Qz);
}

long long leading_f_default_t(long long Q, long long ell) {
    const Int Qz = to_int(Q);
    Int t = (1 - Qz * Qz) / 24 % to_int(ell);
    if (t < 0)
        t += to_int(ell);
    return t.get_si();
}

long long leading_omega_default_t(long long Q, long long ell) {
    const Int Qz = to_int(Q);
    Int t = -((Qz * Qz + 32) / 48) % to_int(ell);
    if (t < 0)
        t += to_int(ell);
    return t.get_si();
}

} // namespace qcong
