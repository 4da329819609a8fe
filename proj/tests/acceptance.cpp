// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "qcong/admissibility.hpp"
#include "qcong/congruence.hpp"
#include "qcong/dedekind.hpp"
#include "qcong/multipliers.hpp"
#include "qcong/sequences.hpp"
#include "qcong/witness.hpp"

using namespace qcong;
using namespace qcong::testing;

namespace {

struct Criterion {
    const char* id;
    const char* label;
    std::function<bool(std::string&)> run;
};

bool a1_engine(std::string& detail) {
    const long long N = 500;
    const QSeries p = eta_power(1, -1, N, Ring::exact());
    const auto p_oracle = partition_oracle(N);
    for (long long n = 0; n <= N; ++n)
        if (p.coeff(n) != p_oracle[static_cast<std::size_t>(n)]) {
            detail = "p(" + std::to_string(n) + ") mismatch";
            return false;
        }
    const QSeries f = mock_f(N, Ring::exact());
    const auto f_oracle = mock_f_oracle(N);
    for (long long n = 0; n <= N; ++n)
        if (f.coeff(n) != f_oracle[static_cast<std::size_t>(n)]) {
            detail = "a(" + std::to_string(n) + ") mismatch";
            return false;
        }
    const QSeries w = mock_omega(N, Ring::exact());
    const auto w_oracle = mock_omega_oracle(N);
    for (long long n = 0; n <= N; ++n)
        if (w.coeff(n) != w_oracle[static_cast<std::size_t>(n)]) {
            detail = "c(" + std::to_string(n) + ") mismatch";
            return false;
        }
    detail = "p, a, c agree with brute-force oracles to n = 500";
    return true;
}

bool a2_ramanujan(std::string& detail) {
    const long long depth = 2000;
    const QSeries p = eta_power(1, -1, 11 * depth + 6, Ring::exact());
    const EtaQuotientSpec spec = EtaQuotientSpec::make({{1, -1}});
    for (const auto& [ell, t] : {std::pair{5LL, 4LL}, {7LL, 5LL}, {11LL, 6LL}}) {
        for (long long n = 0; n <= depth; ++n)
            if (p.coeff(ell * n + t) % to_int(ell) != 0) {
                detail = "p(" + std::to_string(ell) + "n+" + std::to_string(t) +
                         ") not divisible at n = " + std::to_string(n);
                return false;
            }
        const auto v = verdict_eta(spec, to_int(ell), to_int(t), to_int(ell));
        if (v.outcome != Outcome::necessary_conditions_met) {
            detail = "verdict for (" + std::to_string(ell) + "," + std::to_string(t) +
                     ") is not NecessaryConditionsMet";
            return false;
        }
    }
    detail = "p(5n+4), p(7n+5), p(11n+6) vanish mod 5,7,11 to n = 2000; verdicts met";
    return true;
}

bool a3_kcolor(std::string& detail) {
    const long long depth = 1000;
    for (const long long ell : {5LL, 7LL, 11LL}) {
        const QSeries pk = k_color(ell - 3, ell * depth + ell,
                                   Ring::mod(static_cast<std::uint64_t>(ell)));
        for (long long t = 0; t < ell; ++t) {
            const bool empirical =
                check_progression(pk, ell, t, ell, depth).holds();
            const bool predicted = andrews_condition(to_int(ell), to_int(t));
            if (empirical != predicted) {
                detail = "biconditional broken at ell=" + std::to_string(ell) +
                         " t=" + std::to_string(t);
                return false;
            }
        }
    }
    detail = "congruence <=> (8t+1|ell) != 1, exact biconditional for ell = 5, 7, 11";
    return true;
}

bool a4_contrapositive(std::string& detail) {
    const long long mmax = 36, depth = 3000;
    const long long prec = mmax * depth + mmax;
    long long ruled_out_checked = 0;
    for (const long long ell : {5LL, 7LL}) {
        const Ring ring = Ring::mod(static_cast<std::uint64_t>(ell));
        const QSeries f = mock_f(prec, ring);
        const QSeries w = mock_omega(prec, ring);
        for (long long m = 1; m <= mmax; ++m)
            for (long long t = 0; t < m; ++t) {
                const auto vf = verdict_f(to_int(m), to_int(t), to_int(ell));
                if (vf.outcome == Outcome::ruled_out) {
                    ++ruled_out_checked;
                    if (check_progression(f, m, t, ell, depth).holds()) {
                        detail = "f survivor at (m,t,ell)=(" + std::to_string(m) +
                                 "," + std::to_string(t) + "," + std::to_string(ell) + ")";
                        return false;
                    }
                }
                const auto vw = verdict_omega(to_int(m), to_int(t), to_int(ell));
                if (vw.outcome == Outcome::ruled_out) {
                    ++ruled_out_checked;
                    if (check_progression(w, m, t, ell, depth).holds()) {
                        detail = "omega survivor at (m,t,ell)=(" + std::to_string(m) +
                                 "," + std::to_string(t) + "," + std::to_string(ell) + ")";
                        return false;
                    }
                }
            }
    }
    detail = std::to_string(ruled_out_checked) +
             " ruled-out progressions all fail empirically by n <= 3000";
    return true;
}

bool a5_example4(std::string& detail) {
    for (const long long ell : {5LL, 7LL, 11LL, 13LL}) {
        const auto [rescaled, powered] = example4_family(ell, 2000);
        for (long long n = 0; n <= 2000; ++n)
            if (rescaled.coeff_mod(n) != powered.coeff_mod(n)) {
                detail = "eta^{-1}(" + std::to_string(ell) +
                         "z) != eta^{-" + std::to_string(ell) + "}(z) at n = " +
                         std::to_string(n);
                return false;
            }
    }
    for (const long long delta : {2LL, 3LL, 5LL}) {
        const QSeries s = eta_power(delta, -1, 1000, Ring::exact());
        for (long long t = 1; t < delta; ++t)
            if (!extract_progression(s, delta, t).is_zero()) {
                detail = "nonzero extraction at delta=" + std::to_string(delta) +
                         " t=" + std::to_string(t);
                return false;
            }
    }
    detail = "rescaled congruences hold mod 5,7,11,13 to n = 2000; off-support slices vanish";
    return true;
}

bool a6_dedekind(std::string& detail) {
    for (long long c = 1; c <= 200; ++c)
        for (long long d = 0; d < std::max<long long>(c, 1); ++d) {
            if (std::gcd(d, c) != 1)
                continue;
            if (dedekind_sum_fast(to_int(d), to_int(c)) != dedekind_sum(to_int(d), to_int(c))) {
                detail = "fast/naive mismatch at (" + std::to_string(d) + "," +
                         std::to_string(c) + ")";
                return false;
            }
            if (c == 1)
                break;
        }
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<long long> dc(1, 4000), dd(-8000, 8000);
    for (int i = 0; i < 10000; ++i) {
        const Int c = to_int(dc(rng)), d = to_int(dd(rng));
        Rational v = Rational(6) * c * dedekind_sum(d, c);
        v.canonicalize();
        if (v.get_den() != 1) {
            detail = "6c s(d,c) not integral at (" + d.get_str() + "," + c.get_str() + ")";
            return false;
        }
    }
    int done = 0;
    while (done < 1000) {
        const Int c = to_int(dc(rng)), d = to_int(dc(rng));
        if (gcd(c, d) != 1)
            continue;
        ++done;
        const Rational lhs = dedekind_sum(d, c) + dedekind_sum(c, d);
        const Rational rhs = Rational(-1, 4) + (make_rational(d, c) + make_rational(c, d) +
                                                make_rational(Int(1), Int(c * d))) / 12;
        if (lhs != rhs) {
            detail = "reciprocity failed at (" + d.get_str() + "," + c.get_str() + ")";
            return false;
        }
    }
    std::mt19937_64 rng2(103);
    std::uniform_int_distribution<long long> dm(0, 5), dl(0, 10), dk(1, 4);
    const long long choices[] = {5, 7, 11, 13, 25, 35};
    done = 0;
    while (done < 200) {
        const long long m = choices[dm(rng2)];
        Mat2 A = random_sl2(rng2, 80, m);
        bool ok = false;
        for (int k = 0; k <= 5 && !ok; ++k) {
            const Mat2 cand{A.a + k * A.c, A.b + k * A.d, A.c, A.d};
            if (gcd(cand.a, to_int(6)) == 1) {
                A = cand;
                ok = true;
            }
        }
        if (!ok)
            continue;
        const Rational defect = lemma22_defect(to_int(m), to_int(dl(rng2)), A);
        if (defect.get_den() != 1 || defect.get_num() % 2 != 0) {
            detail = "shift defect not an even integer for m=" + std::to_string(m);
            return false;
        }
        ++done;
    }
    detail = "fast=naive (c<=200); 6c integrality x10^4; reciprocity x10^3; "
             "defect even x200";
    return true;
}

bool a7_multipliers(std::string& detail) {
    std::mt19937_64 rng(107);
    const UnitRoot z24 = UnitRoot::from_exponent(1, 24);
    for (int i = 0; i < 100; ++i) {
        const Mat2 A = random_sl2(rng, 50);
        if (xi(A * Mat2::shift()) != xi(A) * z24) {
            detail = "xi shift cocycle failed";
            return false;
        }
        const Mat2 B = random_sl2(rng, 50, 2);
        const UnitRoot w = w_of(B);
        if (w_of(B * Mat2::shift()) != w * z24.inverse() ||
            w_of(Mat2::shift() * B) != w * z24.inverse()) {
            detail = "w shift cocycle failed";
            return false;
        }
    }
    long double worst = 0;
    const std::complex<long double> z(0.25L, 0.75L);
    for (int i = 0; i < 50; ++i) {
        const Mat2 A = random_sl2(rng, 50);
        const EtaCheck chk = verify_eta_numeric(A, z, 0, 1e-9L);
        worst = std::max(worst, chk.residual);
        if (!chk.ok()) {
            detail = "eta residual " + std::to_string(static_cast<double>(chk.residual)) +
                     " at " + A.str();
            return false;
        }
    }
    std::ostringstream os;
    os << "cocycles exact x100 each; eta residual max " << static_cast<double>(worst)
       << " < 1e-9 on 50 matrices";
    detail = os.str();
    return true;
}

bool a8_leading(std::string& detail) {
    for (const auto& [Q, ell] :
         {std::pair{1LL, 5LL}, {1LL, 7LL}, {5LL, 7LL}, {7LL, 5LL}}) {
        const LeadingConstant lc =
            leading_constant_f(Q, ell, leading_f_default_t(Q, ell));
        if (!lc.unit.pow(48 * to_int(Q) * to_int(ell) * to_int(ell)).is_one()) {
            detail = "f-case order check failed at Q=" + std::to_string(Q);
            return false;
        }
    }
    for (const auto& [Q, ell] : {std::pair{4LL, 5LL}, {4LL, 7LL}, {8LL, 5LL}}) {
        const LeadingConstant lc =
            leading_constant_omega(Q, ell, leading_omega_default_t(Q, ell));
        if (!lc.unit.pow(48 * to_int(Q) * to_int(ell) * to_int(ell)).is_one()) {
            detail = "omega-case order check failed at Q=" + std::to_string(Q);
            return false;
        }
    }
    detail = "all 7 cusp constants collapse; unit^{48 Q ell^2} = 1 exactly";
    return true;
}

bool a9_witness(std::string& detail) {
    std::mt19937_64 rng(109);
    std::uniform_int_distribution<long long> dm(1, 10000), db(-60, 60), dn(1, 20);
    long long lambdas = 0;
    int done = 0;
    while (done < 1000) {
        const long long m = dm(rng), B = db(rng), N = dn(rng);
        if (B == 0)
            continue;
        std::uniform_int_distribution<long long> dt(0, m - 1);
        const long long t = dt(rng);
        const long long steps = Int(to_int(m) / Q_mB(to_int(m), to_int(B))).get_si();
        for (long long lambda = 0; lambda < steps; ++lambda) {
            const WitnessResult w = radu_witness(m, t, B, N, lambda);
            if (!verify_witness(m, t, B, N, w)) {
                detail = "witness invariant failed at m=" + std::to_string(m);
                return false;
            }
            ++lambdas;
        }
        ++done;
    }
    int orbits = 0;
    while (orbits < 100) {
        const long long m = dm(rng) % 2000 + 1, B = db(rng), N = dn(rng);
        if (B == 0)
            continue;
        std::uniform_int_distribution<long long> dt(0, m - 1);
        const long long t = dt(rng);
        const auto orbit = t_orbit(m, t, B, N);
        const long long Q = Q_mB(to_int(m), to_int(B)).get_si();
        for (long long lambda = 0; lambda < m / Q; ++lambda)
            if (orbit.count((t + lambda * Q) % m) != 1) {
                detail = "orbit covering failed at m=" + std::to_string(m);
                return false;
            }
        ++orbits;
    }
    detail = "1000 instances, " + std::to_string(lambdas) +
             " lifts verified; covering holds on 100 orbits";
    return true;
}

bool a10_diamond(std::string& detail) {
    const EtaQuotientSpec diamond =
        EtaQuotientSpec::make({{2, 1}, {3, 1}, {1, -3}, {6, -1}});
    for (long long m = 2; m <= 60; m += 2) {
        const auto v = verdict_eta(diamond, to_int(m), to_int(1), to_int(5));
        if (v.outcome != Outcome::out_of_hypothesis) {
            detail = "even m = " + std::to_string(m) + " not gated";
            return false;
        }
    }
    for (long long t = 0; t < 5; ++t) {
        const auto v = verdict_eta(diamond, to_int(5), to_int(t), to_int(5));
        const bool clash_by_verdict = v.outcome == Outcome::ruled_out &&
                                      v.reason == Reason::legendre_clash;
        const bool clash_by_reduced_form =
            jacobi(to_int(6 * t - 1), to_int(5)) == jacobi(to_int(-1), to_int(5));
        if (clash_by_verdict != clash_by_reduced_form) {
            detail = "reduced-form disagreement at t = " + std::to_string(t);
            return false;
        }
    }
    detail = "every even m gated out of hypothesis; odd-m clash matches (6t-1|5) != (-1|5)";
    return true;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"A1", "series engine vs brute-force oracles", a1_engine},
        {"A2", "Ramanujan congruences + verdicts", a2_ramanujan},
        {"A3", "k-color biconditional", a3_kcolor},
        {"A4", "contrapositive falsification", a4_contrapositive},
        {"A5", "rescaled eta congruence family", a5_example4},
        {"A6", "Dedekind sum suite", a6_dedekind},
        {"A7", "multiplier cocycles + numeric eta", a7_multipliers},
        {"A8", "cusp leading constants", a8_leading},
        {"A9", "witness lifting + orbit covering", a9_witness},
        {"A10", "broken 1-diamond hypothesis gate", a10_diamond},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        std::printf("%-4s %-4s %-42s %7.2fs  %s\n", c.id, ok ? "PASS" : "FAIL",
                    c.label, secs, detail.c_str());
        std::fflush(stdout);
        if (!ok)
            ++failures;
    }
    if (failures)
        std::printf("%d criterion(s) FAILED\n", failures);
    else
        std::printf("all %zu criteria passed\n", criteria.size());
    return failures ? 1 : 0;
}
