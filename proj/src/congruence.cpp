#include "qcong/congruence.hpp"

namespace qcong {

ScanResult check_progression(const QSeries& seq, long long m, long long t,
                             long long ell, long long N) {
    if (m < 1)
        throw precondition_error("scan: m must be >= 1");
    if (t < 0 || t >= m)
        throw precondition_error("scan: t must satisfy 0 <= t < m");
    if (N < 0)
        throw precondition_error("scan: N must be >= 0");
    if (ell < 5 || !is_prime(to_int(ell)))
        throw precondition_error("scan: ell must be a prime >= 5");
    if (!seq.ring().is_exact() &&
        seq.ring().modulus() != static_cast<std::uint64_t>(ell))
        throw precondition_error("scan: series ring must be exact or Mod(ell)");
    const long long top = m * N + t;
    if (seq.precision() < top)
        throw precision_error("scan: series precision " +
                              std::to_string(seq.precision()) +
                              " is short of required index " + std::to_string(top));
    ScanResult res;
    res.m = m;
    res.t = t;
    res.ell = ell;
    const bool exact = seq.ring().is_exact();
    for (long long n = 0; n <= N; ++n) {
        const long long idx = m * n + t;
        ++res.checked;
        Int v;
        if (exact) {
            v = seq.coeff(idx) % to_int(ell);
            if (v < 0)
                v += to_int(ell);
        } else {
            const std::uint64_t r = seq.coeff_mod(idx);
            if (r == 0)
                continue;
            v = Int(static_cast<unsigned long>(r));
        }
        if (v != 0) {
            res.status = ScanStatus::fails_at;
            res.bound = n;
            res.value = v;
            return res;
        }
    }
    res.status = ScanStatus::holds_up_to;
    res.bound = N;
    return res;
}

std::vector<ScanResult> scan_range(const QSeries& seq, long long ell,
                                   long long m_max, long long N) {
    std::vector<ScanResult> survivors;
    for (long long m = 1; m <= m_max; ++m)
        for (long long t = 0; t < m; ++t) {
            ScanResult r = check_progression(seq, m, t, ell, N);
            if (r.holds())
                survivors.push_back(std::move(r));
        }
    return survivors;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
    if (n < 1)
        throw precondition_error("factorize: argument must be positive");
    std::vector<std::pair<long long, int>> out;
    for (long long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p)
            continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

namespace {

bool good_by_symbol(long long m, const Int& arg) {
    for (const auto& [p, e] : factorize(m)) {
        if (p == 2)
            continue; // Jacobi needs an odd prime; (x/2) never contributes -1 here
        if (jacobi(arg, to_int(p)) == -1)
            return true;
    }
    return false;
}

} // namespace

bool good_f(long long m, long long t) {
    if (m < 1)
        throw precondition_error("good_f: m must be >= 1");
    return good_by_symbol(m, Int(1) - 24 * to_int(t));
}

bool good_omega(long long m, long long t) {
    if (m < 1)
        throw precondition_error("good_omega: m must be >= 1");
    return good_by_symbol(m, -3 * to_int(t) - 2);
}

} // namespace qcong
