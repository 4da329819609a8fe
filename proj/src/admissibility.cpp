#include "qcong/admissibility.hpp"

#include "qcong/errors.hpp"

namespace qcong {

namespace {

struct Valuations {
    unsigned long two = 0, three = 0;
    Int rest; // the part coprime to 6
};

Valuations split_six(const Int& n) {
    Valuations v;
    v.rest = abs(n);
    while (v.rest % 2 == 0) {
        v.rest /= 2;
        ++v.two;
    }
    while (v.rest % 3 == 0) {
        v.rest /= 3;
        ++v.three;
    }
    return v;
}

Int pow2(unsigned long e) { Int r = 1; r <<= e; return r; }
Int pow3(unsigned long e) { Int r = 1; for (unsigned long i = 0; i < e; ++i) r *= 3; return r; }

void require_prime_ell(const Int& ell) {
    if (ell < 5 || !is_prime(ell))
        throw precondition_error("verdict: ell must be a prime >= 5");
}

void require_progression(const Int& m, const Int& t) {
    if (m < 1)
        throw precondition_error("verdict: m must be >= 1");
    if (t < 0 || t >= m)
        throw precondition_error("verdict: t must satisfy 0 <= t < m");
}

// The shared conclusion test: RuledOut(ell does not divide m), then
// RuledOut(legendre clash) when (lhs/ell) = (rhs/ell), else the conditions
// are met, with symbol_zero flagged when ell | lhs.
ProgressionVerdict conclude(ProgressionVerdict v, const Int& lhs_arg,
                            const Int& rhs_arg) {
    if (v.m % v.ell != 0) {
        v.outcome = Outcome::ruled_out;
        v.reason = Reason::ell_does_not_divide_m;
        return v;
    }
    const int lhs = jacobi(lhs_arg, v.ell);
    const int rhs = jacobi(rhs_arg, v.ell);
    if (lhs == rhs) {
        v.outcome = Outcome::ruled_out;
        v.reason = Reason::legendre_clash;
        return v;
    }
    v.outcome = Outcome::necessary_conditions_met;
    v.reason = Reason::none;
    v.symbol_zero = (lhs == 0);
    return v;
}

} // namespace

Int m_B(const Int& m, const Int& B) {
    if (m < 1)
        throw precondition_error("m_B: m must be >= 1");
    if (B == 0)
        throw precondition_error("m_B: B must be nonzero");
    const Valuations vm = split_six(m);
    const Valuations vb = split_six(B);
    return pow2(std::min(vb.two, vm.two)) * pow3(std::min(vb.three, vm.three)) * vm.rest;
}

Int Q_mB(const Int& m, const Int& B) {
    if (m < 1)
        throw precondition_error("Q_mB: m must be >= 1");
    if (B == 0)
        throw precondition_error("Q_mB: B must be nonzero");
    const Valuations vm = split_six(m);
    const Valuations vb = split_six(B);
    unsigned long alpha = 0;
    if (vb.two == 1 || vb.two == 2)
        alpha = std::min(vb.two, vm.two);
    else if (vb.two >= 3)
        alpha = vm.two;
    const unsigned long beta = vb.three == 0 ? 0 : vm.three;
    return pow2(alpha) * pow3(beta) * vm.rest;
}

const char* to_string(Theorem t) {
    switch (t) {
    case Theorem::f: return "f";
    case Theorem::omega: return "omega";
    case Theorem::eta: return "eta";
    case Theorem::general: return "general";
    }
    return "?";
}

const char* to_string(Outcome o) {
    switch (o) {
    case Outcome::ruled_out: return "RuledOut";
    case Outcome::necessary_conditions_met: return "NecessaryConditionsMet";
    case Outcome::out_of_hypothesis: return "OutOfHypothesis";
    }
    return "?";
}

const char* to_string(Reason r) {
    switch (r) {
    case Reason::none: return "";
    case Reason::ell_does_not_divide_m: return "ell-nmid-m";
    case Reason::legendre_clash: return "legendre-clash";
    case Reason::ell_divides_BN: return "ell-divides-BN";
    case Reason::ell_divides_N_24n0_plus_B: return "ell-divides-N(24n0+B)";
    case Reason::mB_shares_factor_with_N: return "mB-N-not-coprime";
    case Reason::B_nonnegative: return "B-nonnegative";
    }
    return "?";
}

ProgressionVerdict verdict_f(const Int& m, const Int& t, const Int& ell) {
    require_prime_ell(ell);
    require_progression(m, t);
    ProgressionVerdict v;
    v.theorem = Theorem::f;
    v.m = m;
    v.t = t;
    v.ell = ell;
    return conclude(std::move(v), 24 * t - 1, Int(-1));
}

ProgressionVerdict verdict_omega(const Int& m, const Int& t, const Int& ell) {
    require_prime_ell(ell);
    require_progression(m, t);
    ProgressionVerdict v;
    v.theorem = Theorem::omega;
    v.m = m;
    v.t = t;
    v.ell = ell;
    return conclude(std::move(v), 3 * t + 2, Int(-1));
}

ProgressionVerdict verdict_eta(const EtaQuotientSpec& spec, const Int& m,
                               const Int& t, const Int& ell) {
    require_prime_ell(ell);
    require_progression(m, t);
    ProgressionVerdict v;
    v.theorem = Theorem::eta;
    v.m = m;
    v.t = t;
    v.ell = ell;
    const Int B = to_int(spec.B());
    const Int N = to_int(spec.level);
    if (B >= 0) {
        v.outcome = Outcome::out_of_hypothesis;
        v.reason = Reason::B_nonnegative;
        return v;
    }
    if ((B * N) % ell == 0) {
        v.outcome = Outcome::out_of_hypothesis;
        v.reason = Reason::ell_divides_BN;
        return v;
    }
    if (gcd(m_B(m, B), N) != 1) {
        v.outcome = Outcome::out_of_hypothesis;
        v.reason = Reason::mB_shares_factor_with_N;
        return v;
    }
    return conclude(std::move(v), 24 * t + B, B);
}

ProgressionVerdict verdict_general(const Int& B, const Int& N, const Int& n0,
                                   const Int& m, const Int& t, const Int& ell) {
    require_prime_ell(ell);
    require_progression(m, t);
    if (N < 1)
        throw precondition_error("verdict: N must be >= 1");
    if (B == 0)
        throw precondition_error("verdict: B must be nonzero");
    ProgressionVerdict v;
    v.theorem = Theorem::general;
    v.m = m;
    v.t = t;
    v.ell = ell;
    const Int pivot = 24 * n0 + B;
    if ((N * pivot) % ell == 0) {
        v.outcome = Outcome::out_of_hypothesis;
        v.reason = Reason::ell_divides_N_24n0_plus_B;
        return v;
    }
    if (gcd(m_B(m, B), N) != 1) {
        v.outcome = Outcome::out_of_hypothesis;
        v.reason = Reason::mB_shares_factor_with_N;
        return v;
    }
    return conclude(std::move(v), 24 * t + B, pivot);
}

bool andrews_condition(const Int& ell, const Int& t) {
    require_prime_ell(ell);
    return jacobi(8 * t + 1, ell) != 1;
}

WhParams wh_params(const Int& B, const Int& N, const Int& m, const Int& ell) {
    if (B == 0)
        throw precondition_error("wh_params: B must be nonzero");
    if (N < 1 || m < 1)
        throw precondition_error("wh_params: N and m must be >= 1");
    require_prime_ell(ell);
    const Valuations vb = split_six(B);
    const Valuations vm = split_six(m);
    WhParams p;
    if (vb.two == 1 || vb.two == 2) {
        p.M = 24 * N / gcd(B, Int(3));
        p.epsilon = static_cast<int>(std::min(vb.two, vm.two));
    } else {
        p.M = 24 * N / gcd(B, Int(24));
        p.epsilon = 0;
    }
    Int q = Q_mB(m, B);
    while (q % ell == 0)
        q /= ell;
    p.Q = q;
    p.R = q / pow2(static_cast<unsigned long>(p.epsilon));
    return p;
}

} // namespace qcong
