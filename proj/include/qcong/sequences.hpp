#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "qcong/qseries.hpp"

namespace qcong {

// Coefficients a(n) of the third-order mock theta function
//   f(q) = 1 + sum_{j>=1} q^{j^2} / ((1+q)^2 (1+q^2)^2 ... (1+q^j)^2),
// returned as the series q^{-1/24} sum a(n) q^n (offset24 = -1). Each term's
// denominator is maintained incrementally by two binomial divisions.
QSeries mock_f(long long precision, Ring ring);

// Coefficients c(n) of the third-order mock theta function
//   omega(q) = sum_{j>=0} q^{2j^2+2j} / ((1-q)^2 (1-q^3)^2 ... (1-q^{2j+1})^2),
// returned as q^{2/3} sum c(n) q^n (offset24 = 16).
QSeries mock_omega(long long precision, Ring ring);

// k-colored partition counts p_k(n): eta^{-k}, offset24 = -k.
QSeries k_color(long long k, long long precision, Ring ring);

// The pair (eta^{-1}(ell z), eta^{-ell}(z)) reduced mod ell, both at offset
// -ell/24. The two agree coefficientwise, and the first is supported on
// indices divisible by ell.
std::pair<QSeries, QSeries> example4_family(long long ell, long long precision);

enum class TheoremKind { f, omega, eta };

// A named coefficient sequence together with the constants the progression
// machinery needs (which theorem applies, B, declared level).
struct Preset {
    std::string name;
    TheoremKind theorem;
    long long B;
    long long level;
    std::optional<EtaQuotientSpec> eta; // present for eta-quotient presets
    std::function<QSeries(long long, Ring)> make;
};

// Selectors: f | omega | partition | kcolor:<k> | diamond1 | andrews-stanley |
// eta:<spec>. level_override applies to eta selectors only.
Preset make_preset(const std::string& selector, long long level_override = 0);

} // namespace qcong
