#include <doctest.h>

#include "oracles.hpp"
#include "qcong/sequences.hpp"

using namespace qcong;
using qcong::testing::kcolor_oracle;
using qcong::testing::mock_f_oracle;
using qcong::testing::mock_omega_oracle;
using qcong::testing::partition_oracle;

TEST_CASE("mock_f: leading terms and oracle agreement") {
    const QSeries f = mock_f(300, Ring::exact());
    CHECK(f.coeff(0) == 1);
    CHECK(f.coeff(1) == 1);
    CHECK(f.coeff(2) == -2);
    CHECK(f.coeff(3) == 3);
    CHECK(f.coeff(4) == -3);
    const auto oracle = mock_f_oracle(300);
    for (long long n = 0; n <= 300; ++n)
        CHECK(f.coeff(n) == oracle[static_cast<std::size_t>(n)]);
    CHECK(f.offset24() == -1);
}

TEST_CASE("mock_omega: leading terms and oracle agreement") {
    const QSeries w = mock_omega(300, Ring::exact());
    CHECK(w.coeff(0) == 1);
    CHECK(w.coeff(1) == 2);
    CHECK(w.coeff(2) == 3);
    const auto oracle = mock_omega_oracle(300);
    for (long long n = 0; n <= 300; ++n)
        CHECK(w.coeff(n) == oracle[static_cast<std::size_t>(n)]);
    CHECK(w.offset24() == 16);
}

TEST_CASE("exact and mod backends agree after reduction, every preset") {
    const char* selectors[] = {"f",        "omega",           "partition",
                               "kcolor:3", "diamond1",        "andrews-stanley",
                               "eta:2^1,3^1,1^-3,6^-1"};
    for (const std::uint64_t ell : {5ull, 7ull, 11ull}) {
        const long long N = 2000;
        for (const char* sel : selectors) {
            const Preset p = make_preset(sel);
            CHECK(reduce_mod(p.make(N, Ring::exact()), ell)
                      .same_coefficients(p.make(N, Ring::mod(ell))));
        }
    }
}

TEST_CASE("term cutoff: extending the precision never rewrites stored prefixes") {
    const QSeries f1 = mock_f(120, Ring::exact());
    const QSeries f2 = mock_f(240, Ring::exact());
    for (long long n = 0; n <= 120; ++n)
        CHECK(f1.coeff(n) == f2.coeff(n));
    const QSeries w1 = mock_omega(120, Ring::exact());
    const QSeries w2 = mock_omega(240, Ring::exact());
    for (long long n = 0; n <= 120; ++n)
        CHECK(w1.coeff(n) == w2.coeff(n));
}

TEST_CASE("k_color: partition cases") {
    const QSeries p1 = k_color(1, 60, Ring::exact());
    CHECK(p1.same_coefficients(eta_power(1, -1, 60, Ring::exact())));

    const QSeries p2 = k_color(2, 40, Ring::exact());
    const auto oracle2 = kcolor_oracle(2, 40);
    const Int expected[] = {1, 2, 5, 10, 20};
    for (long long n = 0; n <= 4; ++n) {
        CHECK(p2.coeff(n) == expected[n]);
        CHECK(p2.coeff(n) == oracle2[static_cast<std::size_t>(n)]);
    }
    for (long long n = 0; n <= 40; ++n)
        CHECK(p2.coeff(n) == oracle2[static_cast<std::size_t>(n)]);

    for (long long k = 1; k <= 6; ++k)
        CHECK(k_color(k, 5, Ring::exact()).coeff(0) == 1);
    CHECK(k_color(3, 5, Ring::exact()).offset24() == -3);
}

TEST_CASE("example4_family: congruence and support") {
    for (const long long ell : {5LL, 7LL}) {
        const auto [rescaled, powered] = example4_family(ell, 500);
        CHECK(rescaled.offset24() == to_int(-ell));
        CHECK(powered.offset24() == to_int(-ell));
        for (long long n = 0; n <= 500; ++n)
            CHECK(rescaled.coeff_mod(n) == powered.coeff_mod(n));
        for (long long n = 0; n <= 500; ++n)
            if (n % ell != 0)
                CHECK(rescaled.coeff_mod(n) == 0);
    }
    CHECK_THROWS_AS(example4_family(6, 10), precondition_error);
    CHECK_THROWS_AS(example4_family(3, 10), precondition_error);
}

TEST_CASE("presets expose their theorem constants") {
    const Preset f = make_preset("f");
    CHECK(f.theorem == TheoremKind::f);
    CHECK(f.B == -1);
    CHECK(f.level == 1);

    const Preset omega = make_preset("omega");
    CHECK(omega.theorem == TheoremKind::omega);
    CHECK(omega.B == 16);

    const Preset diamond = make_preset("diamond1");
    CHECK(diamond.theorem == TheoremKind::eta);
    CHECK(diamond.B == -4);
    CHECK(diamond.level == 6);

    const Preset as = make_preset("andrews-stanley");
    CHECK(as.B == -1);
    CHECK(as.level == 32);

    const Preset kc = make_preset("kcolor:4");
    CHECK(kc.B == -4);
    CHECK(kc.level == 1);

    const Preset eta = make_preset("eta:2^1,1^-2", 4);
    CHECK(eta.B == 0);
    CHECK(eta.level == 4);

    CHECK_THROWS_AS(make_preset("unknown"), precondition_error);
    CHECK_THROWS_AS(make_preset("kcolor:x"), precondition_error);

    // the generator actually produces the sequence it names
    const QSeries p = make_preset("partition").make(30, Ring::exact());
    const auto oracle = partition_oracle(30);
    for (long long n = 0; n <= 30; ++n)
        CHECK(p.coeff(n) == oracle[static_cast<std::size_t>(n)]);
}
