#pragma once

#include <set>

#include "qcong/arith.hpp"

namespace qcong {

// Witness for the progression-covering lemma: an integer a with
// (a, 6 m N) = 1 and  t + lambda Q = t a^2 + B (a^2 - 1)/24 (mod m),
// where Q = Q_{m,B}. Both invariants are machine-checkable; verify_witness
// does exactly that.
struct WitnessResult {
    Int a;
    long long lambda = 0;
    Int Q;
};

// Constructive lifting: builds the 2-adic chain b_0..b_{u-alpha} and then the
// 3-adic chain c_0..c_{v-beta}, exactly as the covering lemma's proof
// prescribes (x_{n-1}/y_{n-1} quotients, N' the largest divisor of N coprime
// to 6, epsilon = +-1 with epsilon = B N' mod 3). Chain values are reduced
// mod 24 m N after every step, which preserves both invariants and keeps the
// returned witness small. Each step asserts the divisibility its quotient
// needs and raises diagnostic_error on violation instead of patching it up.
WitnessResult radu_witness(long long m, long long t, long long B, long long N,
                           long long lambda);

bool verify_witness(long long m, long long t, long long B, long long N,
                    const WitnessResult& w);

// Orbit of t under t -> t a^2 + B (a^2 - 1)/24 (mod m) over all a coprime to
// 6 m N. The map depends on a only through a^2 mod 24m, so a ranges over a
// complete residue system mod 24m; classes coprime to 6m always contain
// representatives coprime to 6 m N.
std::set<long long> t_orbit(long long m, long long t, long long B, long long N);

// Level tables attached to the twist machinery, by (m, 6):
// mock case 2m / 8m / 6m / 24m, general case m / 8m / 3m / 24m.
long long mock_level(long long m);
long long weak_level(long long m);

} // namespace qcong
