#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qcong/dedekind.hpp"
#include "qcong/errors.hpp"
#include "qcong/multipliers.hpp"

using namespace qcong;
using qcong::testing::random_sl2;

namespace {

const UnitRoot z24 = UnitRoot::from_exponent(1, 24);

// exponent denominator divides 48c after reduction
void check_denominator(const UnitRoot& u, const Int& c) {
    Int rem = (to_int(48) * c) % u.exponent().get_den();
    CHECK(rem == 0);
}

} // namespace

TEST_CASE("xi: pinned matrix and translations") {
    CHECK(xi(Mat2{to_int(1), to_int(0), to_int(1), to_int(1)}) == UnitRoot::from_exponent(23, 24));
    CHECK(xi(Mat2{to_int(0), to_int(-1), to_int(1), to_int(0)}) == UnitRoot::from_exponent(7, 8));
    CHECK(xi(Mat2::shift()) == z24);
    CHECK(xi(Mat2{to_int(-1), to_int(5), to_int(0), to_int(-1)}) ==
          UnitRoot::from_exponent(-5, 24));
    CHECK_THROWS_AS(xi(Mat2{to_int(2), to_int(0), to_int(0), to_int(2)}), precondition_error);
}

TEST_CASE("xi: negating the matrix changes nothing") {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 50; ++i) {
        const Mat2 A = random_sl2(rng, 40);
        const Mat2 neg{-A.a, -A.b, -A.c, -A.d};
        CHECK(xi(A) == xi(neg));
    }
}

TEST_CASE("xi: right-shift cocycle xi(AT) = xi(A) zeta24") {
    std::mt19937_64 rng(67);
    for (int i = 0; i < 100; ++i) {
        const Mat2 A = random_sl2(rng, 50);
        const Mat2 AT = A * Mat2::shift();
        CHECK(xi(AT) == xi(A) * z24);
        check_denominator(xi(A), A.c);
    }
}

TEST_CASE("w: shift cocycles on both sides") {
    std::mt19937_64 rng(71);
    const UnitRoot z24inv = z24.inverse();
    for (int i = 0; i < 100; ++i) {
        const Mat2 A = random_sl2(rng, 50, 2);
        const UnitRoot w = w_of(A);
        CHECK(w_of(A * Mat2::shift()) == w * z24inv);
        CHECK(w_of(Mat2::shift() * A) == w * z24inv);
        check_denominator(w, A.c);
    }
    CHECK_THROWS_AS(w_of(Mat2{to_int(1), to_int(0), to_int(1), to_int(1)}), precondition_error);
}

TEST_CASE("w1: translation shift matches the 2/3 offset") {
    std::mt19937_64 rng(73);
    const UnitRoot shift_unit = UnitRoot::from_exponent(2, 3);
    for (int i = 0; i < 50; ++i) {
        const Mat2 A = random_sl2(rng, 50, 2);
        const UnitRoot w1 = w1_of(A);
        CHECK(w1_of(A * Mat2::shift()) == w1 * shift_unit);
        CHECK(w1_of(A * Mat2::shift() * Mat2::shift()) ==
              w1 * shift_unit * shift_unit);
        check_denominator(w1, A.c);
    }
}

TEST_CASE("w2: parity gate and denominator bound") {
    std::mt19937_64 rng(79);
    int done = 0;
    while (done < 50) {
        Mat2 A = random_sl2(rng, 50);
        if (A.d % 2 != 0) {
            // slide d by c (odd c) to make it even when possible
            if (A.c % 2 == 0)
                continue;
            A = Mat2{A.a, A.a + A.b, A.c, A.c + A.d};
            if (A.d % 2 != 0)
                continue;
        }
        const UnitRoot w2 = w2_of(A);
        check_denominator(w2, A.c);
        ++done;
    }
    CHECK_THROWS_AS(w2_of(Mat2{to_int(1), to_int(0), to_int(2), to_int(1)}), precondition_error);
}

TEST_CASE("verify_eta_numeric: translation and inversion") {
    const std::complex<long double> z(0.25L, 0.75L);
    const EtaCheck t = verify_eta_numeric(Mat2::shift(), z, 0, 1e-12L);
    CHECK(t.ok());
    const EtaCheck s =
        verify_eta_numeric(Mat2{to_int(0), to_int(-1), to_int(1), to_int(0)},
                           std::complex<long double>(0.0L, 1.0L), 200, 1e-10L);
    CHECK(s.ok());
}

TEST_CASE("verify_eta_numeric: random matrices at tol 1e-9") {
    std::mt19937_64 rng(83);
    const std::complex<long double> z(0.25L, 0.75L);
    for (int i = 0; i < 50; ++i) {
        const Mat2 A = random_sl2(rng, 50);
        const EtaCheck chk = verify_eta_numeric(A, z, 0, 1e-9L);
        CHECK(chk.ok());
        // doubling the term count must not flip the outcome
        const EtaCheck chk2 = verify_eta_numeric(A, z, 2 * chk.terms, 1e-9L);
        CHECK(chk2.ok());
    }
}

TEST_CASE("verify_eta_numeric: refuses an impossible tolerance/terms pair") {
    // c = 50 drives Im(Az) so low that 64 factors cannot reach 1e-9
    const Mat2 A{to_int(49), to_int(48), to_int(50), to_int(49)};
    CHECK_THROWS_AS(
        verify_eta_numeric(A, std::complex<long double>(0.25L, 0.75L), 64, 1e-9L),
        precision_error);
}

TEST_CASE("leading constant, f case: desk-scale instances collapse") {
    for (const auto& [Q, ell] : {std::pair{1LL, 5LL}, {1LL, 7LL}, {5LL, 7LL}, {7LL, 5LL}}) {
        const long long t = leading_f_default_t(Q, ell);
        const LeadingConstant lc = leading_constant_f(Q, ell, t);
        CHECK(lc.radical == to_int(Q));
        CHECK(lc.unit.pow(48 * to_int(Q) * to_int(ell) * to_int(ell)).is_one());
    }
    // spec-pinned congruence classes for t
    CHECK(leading_f_default_t(1, 5) == 0);
    CHECK(leading_f_default_t(5, 7) == 6);
    CHECK(leading_f_default_t(1, 7) == 0);
}

TEST_CASE("leading constant, omega case: desk-scale instances collapse") {
    for (const auto& [Q, ell] : {std::pair{4LL, 5LL}, {4LL, 7LL}, {8LL, 5LL}}) {
        const long long t = leading_omega_default_t(Q, ell);
        const LeadingConstant lc = leading_constant_omega(Q, ell, t);
        CHECK(lc.radical == to_int(2 * Q));
        CHECK(lc.unit.pow(48 * to_int(Q) * to_int(ell) * to_int(ell)).is_one());
    }
    CHECK(leading_omega_default_t(4, 5) == 4);
    CHECK(leading_omega_default_t(4, 7) == 6);
    CHECK(leading_omega_default_t(8, 5) == 3);
}

TEST_CASE("leading constants: hypothesis violations are rejected") {
    CHECK_THROWS_AS(leading_constant_f(2, 5, 0), hypothesis_error);   // (Q,6) != 1
    CHECK_THROWS_AS(leading_constant_f(5, 5, 0), hypothesis_error);   // ell | Q
    CHECK_THROWS_AS(leading_constant_f(1, 5, 1), hypothesis_error);   // wrong t
    CHECK_THROWS_AS(leading_constant_f(1, 4, 0), hypothesis_error);   // composite ell
    CHECK_THROWS_AS(leading_constant_omega(6, 5, 0), hypothesis_error);  // 4 nmid Q
    CHECK_THROWS_AS(leading_constant_omega(4, 5, 0), hypothesis_error);  // wrong t
}

TEST_CASE("proof-internal shift identities at the collapse matrices") {
    // f case: alpha with alpha Q = 1 (mod 2 ell), 3 nmid alpha, applied to
    // [[alpha, *],[2 ell, Q]]; the identity defect must be even at every
    // lambda' = Q lambda in the collapse family.
    for (const auto& [Q, ell] : {std::pair{5LL, 7LL}, {7LL, 5LL}}) {
        long long alpha = inv_mod(to_int(Q), to_int(2 * ell)).get_si();
        while (alpha % 3 == 0 || std::gcd(alpha, 6LL) != 1)
            alpha += 2 * ell;
        const Int b = (to_int(alpha) * to_int(Q) - 1) / to_int(2 * ell);
        const Mat2 A{to_int(alpha), b, to_int(2 * ell), to_int(Q)};
        REQUIRE(A.det() == 1);
        for (long long lam = 0; lam < Q * ell; ++lam) {
            if ((1 + 2 * ell * lam) % Q != 0)
                continue;
            const Rational defect = lemma22_defect(to_int(ell), to_int(Q * lam), A);
            CHECK(defect.get_den() == 1);
            CHECK(defect.get_num() % 2 == 0);
        }
    }
    // omega case: alpha Q = 2 (mod ell) on [[alpha, *],[ell, Q/2]], with the
    // lemma applied at lambda' = Q lambda / 2.
    for (const auto& [Q, ell] : {std::pair{4LL, 5LL}, {8LL, 5LL}, {4LL, 7LL}}) {
        long long alpha = Int(2 * inv_mod(to_int(Q), to_int(ell)) % to_int(ell)).get_si();
        while (std::gcd(alpha, 6LL) != 1 ||
               (to_int(alpha) * to_int(Q / 2) - 1) % to_int(ell) != 0)
            alpha += ell;
        const Int b = (to_int(alpha) * to_int(Q / 2) - 1) / to_int(ell);
        const Mat2 A{to_int(alpha), b, to_int(ell), to_int(Q / 2)};
        REQUIRE(A.det() == 1);
        for (long long lam = 0; lam < Q * ell; ++lam) {
            if ((1 + ell * lam) % Q != 0)
                continue;
            const Rational defect = lemma22_defect(to_int(ell), to_int(Q * lam / 2), A);
            CHECK(defect.get_den() == 1);
            CHECK(defect.get_num() % 2 == 0);
        }
    }
}
