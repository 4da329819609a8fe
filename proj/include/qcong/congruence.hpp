#pragma once

#include <vector>

#include "qcong/qseries.hpp"

namespace qcong {

enum class ScanStatus { holds_up_to, fails_at };

// Outcome of testing a(m n + t) = 0 (mod ell) over 0 <= n <= N. A scan is
// evidence, never proof: reports must carry the "empirical (n <= N)" label.
struct ScanResult {
    long long m = 0, t = 0, ell = 0;
    ScanStatus status = ScanStatus::holds_up_to;
    long long bound = 0;  // N when it holds, the minimal failing n otherwise
    Int value;            // nonzero residue mod ell at the failure, else 0
    long long checked = 0;

    bool holds() const { return status == ScanStatus::holds_up_to; }
};

// seq must be exact or Mod(ell); its precision must reach m N + t — shortfalls
// raise precision_error rather than silently truncating the scan.
ScanResult check_progression(const QSeries& seq, long long m, long long t,
                             long long ell, long long N);

// All (m <= m_max, 0 <= t < m) surviving N checks, ordered m asc then t asc.
std::vector<ScanResult> scan_range(const QSeries& seq, long long ell,
                                   long long m_max, long long N);

// True iff some prime p | m has (1 - 24 t / p) = -1.
bool good_f(long long m, long long t);

// True iff some prime p | m has (-3 t - 2 / p) = -1.
bool good_omega(long long m, long long t);

// Trial-division factorization; pairs (prime, exponent) in ascending order.
std::vector<std::pair<long long, int>> factorize(long long n);

} // namespace qcong
