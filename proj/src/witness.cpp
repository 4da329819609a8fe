#include "qcong/witness.hpp"

#include <numeric>

#include "qcong/admissibility.hpp"
#include "qcong/errors.hpp"

namespace qcong {

namespace {

// (x^2 - 1)/24, defined for (x, 6) = 1.
Int square_shift(const Int& x) {
    Int w = x * x - 1;
    if (w % 24 != 0)
        throw diagnostic_error("witness: (a^2-1)/24 not integral; a not coprime to 6");
    return w / 24;
}

struct Exponents {
    unsigned long u = 0, v = 0;
};

Exponents val23(Int n) {
    Exponents e;
    n = abs(n);
    while (n % 2 == 0) {
        n /= 2;
        ++e.u;
    }
    while (n % 3 == 0) {
        n /= 3;
        ++e.v;
    }
    return e;
}

} // namespace

WitnessResult radu_witness(long long m, long long t, long long B, long long N,
                           long long lambda) {
    if (m < 1 || N < 1)
        throw precondition_error("witness: m and N must be >= 1");
    if (B == 0)
        throw precondition_error("witness: B must be nonzero");
    const Int M = to_int(m), T = to_int(t), Bz = to_int(B), Nz = to_int(N);
    const Int Q = Q_mB(M, Bz);
    const Int steps = M / Q; // 2^{u-alpha} 3^{v-beta}
    if (lambda < 0 || to_int(lambda) >= steps)
        throw precondition_error("witness: lambda must satisfy 0 <= lambda < m/Q_{m,B}");

    const Exponents em = val23(M);
    const Exponents eq = val23(Q);
    const unsigned long u = em.u, v = em.v;
    const unsigned long alpha = eq.u, beta = eq.v;

    Int Np = Nz; // largest divisor of N coprime to 6
    while (Np % 2 == 0)
        Np /= 2;
    while (Np % 3 == 0)
        Np /= 3;

    const Int K = 24 * M * Nz; // chain reduction modulus
    const Int lamQ = to_int(lambda) * Q;
    auto G = [&](const Int& x) -> Int {
        return T * (x * x - 1) + Bz * square_shift(x) - lamQ;
    };

    // 2-adic chain
    Int b(1);
    Int step = Q; // 2^{n-1} Q
    for (unsigned long n = 1; n + alpha <= u; ++n) {
        const Int g = G(b);
        if (g % step != 0)
            throw diagnostic_error("witness: 2-adic chain lost divisibility at step " +
                                   std::to_string(n));
        const Int x = g / step;
        Int two_pow = 1;
        two_pow <<= (n + 1 - alpha); // n + 1 > alpha here since alpha < u
        b += two_pow * 3 * x * Q * Np;
        b %= K;
        if (b < 0)
            b += K;
        step *= 2;
    }

    // 3-adic chain
    Int c = b;
    if (beta < v) {
        // beta < v forces beta = 0 and 3 does not divide B
        Int eps = (((Bz * Np) % 3) + 3) % 3 == 1 ? 1 : -1;
        Int step3 = Q;
        step3 <<= (u - alpha); // 2^{u-alpha} 3^{n-1} Q
        Int three_pow = 3;
        for (unsigned long n = 1; n + beta <= v; ++n) {
            const Int g = G(c);
            if (g % step3 != 0)
                throw diagnostic_error("witness: 3-adic chain lost divisibility at step " +
                                       std::to_string(n));
            const Int y = g / step3;
            Int two_pow = 1;
            two_pow <<= (2 + u - alpha);
            c = c * (two_pow * three_pow * y * Q * Np - eps);
            c %= K;
            if (c < 0)
                c += K;
            step3 *= 3;
            three_pow *= 3;
        }
    }

    WitnessResult res;
    res.a = c % K;
    if (res.a <= 0)
        res.a += K;
    res.lambda = lambda;
    res.Q = Q;
    if (!verify_witness(m, t, B, N, res))
        throw diagnostic_error("witness: constructed value fails its invariants");
    return res;
}

bool verify_witness(long long m, long long t, long long B, long long N,
                    const WitnessResult& w) {
    const Int M = to_int(m);
    if (gcd(w.a, 6 * M * to_int(N)) != 1)
        return false;
    const Int lhs = to_int(t) + to_int(w.lambda) * w.Q;
    const Int rhs = to_int(t) * w.a * w.a + to_int(B) * square_shift(w.a);
    return (lhs - rhs) % M == 0;
}

std::set<long long> t_orbit(long long m, long long t, long long B, long long N) {
    if (m < 1 || N < 1)
        throw precondition_error("orbit: m and N must be >= 1");
    const Int M = to_int(m);
    std::set<long long> orbit;
    for (long long a = 1; a <= 24 * m; ++a) {
        const Int az = to_int(a);
        if (gcd(az, 6 * M) != 1)
            continue;
        Int v = (to_int(t) * az * az + to_int(B) * square_shift(az)) % M;
        if (v < 0)
            v += M;
        orbit.insert(v.get_si());
    }
    return orbit;
}

long long mock_level(long long m) {
    if (m < 1)
        throw precondition_error("level: m must be >= 1");
    switch (std::gcd(m, 6LL)) {
    case 1: return 2 * m;
    case 2: return 8 * m;
    case 3: return 6 * m;
    default: return 24 * m;
    }
}

long long weak_level(long long m) {
    if (m < 1)
        throw precondition_error("level: m must be >= 1");
    switch (std::gcd(m, 6LL)) {
    case 1: return m;
    case 2: return 8 * m;
    case 3: return 3 * m;
    default: return 24 * m;
    }
}

} // namespace qcong
