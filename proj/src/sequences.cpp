#include "qcong/sequences.hpp"

namespace qcong {

QSeries mock_f(long long precision, Ring ring) {
    if (precision < 0)
        throw precondition_error("mock_f: precision must be >= 0");
    QSeries acc = QSeries::one(ring, precision); // the constant term
    QSeries den = QSeries::one(ring, precision); // prod_{i<=j} (1+q^i)^{-2}
    for (long long j = 1; j * j <= precision; ++j) {
        den = den.divided_by_binomial(j, +1).divided_by_binomial(j, +1);
        acc = acc + den.shifted(j * j); // addition truncates to the common range
    }
    return acc.with_offset24(Rational(-1));
}

QSeries mock_omega(long long precision, Ring ring) {
    if (precision < 0)
        throw precondition_error("mock_omega: precision must be >= 0");
    QSeries acc = QSeries::zero(ring, precision);
    QSeries den = QSeries::one(ring, precision); // prod_{i<=j} (1-q^{2i+1})^{-2}
    for (long long j = 0; 2 * j * j + 2 * j <= precision; ++j) {
        const long long d = 2 * j + 1;
        den = den.divided_by_binomial(d, -1).divided_by_binomial(d, -1);
        acc = acc + den.shifted(2 * j * j + 2 * j);
    }
    return acc.with_offset24(Rational(16)); // q^{2/3} = q^{16/24}
}

QSeries k_color(long long k, long long precision, Ring ring) {
    if (k < 1)
        throw precondition_error("k_color: k must be >= 1");
    return eta_quotient(EtaQuotientSpec::make({{1, -k}}), precision, ring);
}

std::pair<QSeries, QSeries> example4_family(long long ell, long long precision) {
    if (ell < 5 || !is_prime(to_int(ell)))
        throw precondition_error("example4_family: ell must be a prime >= 5");
    const Ring r = Ring::mod(static_cast<std::uint64_t>(ell));
    QSeries rescaled = eta_power(ell, -1, precision, r); // offset24 = -ell
    QSeries powered = eta_power(1, -ell, precision, r);  // offset24 = -ell
    return {rescaled, powered};
}

Preset make_preset(const std::string& selector, long long level_override) {
    Preset p;
    p.name = selector;
    auto eta_preset = [&](EtaQuotientSpec spec) {
        p.theorem = TheoremKind::eta;
        p.B = spec.B();
        p.level = spec.level;
        p.eta = spec;
        p.make = [spec](long long n, Ring r) { return eta_quotient(spec, n, r); };
    };
    if (selector == "f") {
        p.theorem = TheoremKind::f;
        p.B = -1; // the progression machinery treats f with B = -1, N = 1
        p.level = 1;
        p.make = [](long long n, Ring r) { return mock_f(n, r); };
    } else if (selector == "omega") {
        p.theorem = TheoremKind::omega;
        p.B = 16; // the 2/3 offset realized over /24
        p.level = 1;
        p.make = [](long long n, Ring r) { return mock_omega(n, r); };
    } else if (selector == "partition") {
        eta_preset(EtaQuotientSpec::make({{1, -1}}, level_override));
    } else if (selector.rfind("kcolor:", 0) == 0) {
        long long k = 0;
        try {
            k = std::stoll(selector.substr(7));
        } catch (const std::logic_error&) {
            throw precondition_error("preset: bad kcolor selector '" + selector + "'");
        }
        if (k < 1)
            throw precondition_error("preset: kcolor needs k >= 1");
        eta_preset(EtaQuotientSpec::make({{1, -k}}, level_override));
    } else if (selector == "diamond1") {
        eta_preset(EtaQuotientSpec::make({{2, 1}, {3, 1}, {1, -3}, {6, -1}},
                                         level_override));
    } else if (selector == "andrews-stanley") {
        eta_preset(EtaQuotientSpec::make(
            {{2, 2}, {16, 5}, {1, -1}, {4, -5}, {32, -2}}, level_override));
    } else if (selector.rfind("eta:", 0) == 0) {
        eta_preset(EtaQuotientSpec::parse(selector.substr(4), level_override));
    } else {
        throw precondition_error("preset: unknown selector '" + selector + "'");
    }
    return p;
}

} // namespace qcong
