#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qcong/arith.hpp"
#include "qcong/errors.hpp"

namespace qcong {

// Coefficient ring: exact integers, or Z/M for 2 <= M < 2^32.
class Ring {
public:
    static Ring exact() { return Ring(0); }
    static Ring mod(std::uint64_t modulus);

    bool is_exact() const { return m_ == 0; }
    std::uint64_t modulus() const { return m_; }

    bool operator==(const Ring& o) const { return m_ == o.m_; }
    bool operator!=(const Ring& o) const { return m_ != o.m_; }

    std::string str() const;

private:
    explicit Ring(std::uint64_t m) : m_(m) {}
    std::uint64_t m_;
};

// Truncated formal series
//
//     q^{offset24/24} * sum_{n >= n0} a(n) q^n,
//
// coefficients stored densely for n0 <= n <= precision. The leading stored
// coefficient is nonzero unless the series vanishes identically on its stored
// range. precision is tracked through every operation and never silently
// extended; reading past it raises precision_error.
//
// offset24 is an exact rational: integral for eta-quotients and the named
// presets, fractional after extract_progression (where it records
// (24 t + offset24) / m).
class QSeries {
public:
    using ExactVec = std::vector<Int>;
    using ModVec = std::vector<std::uint64_t>;

    QSeries() : QSeries(zero(Ring::exact(), -1)) {}

    static QSeries zero(Ring r, long long precision);
    static QSeries one(Ring r, long long precision);
    // coeffs[i] is the coefficient of q^{n0+i}; values are reduced into the
    // ring. The vector length must be precision - n0 + 1.
    static QSeries from_coeffs(Ring r, const Rational& offset24, long long n0,
                               ExactVec coeffs, long long precision);

    const Ring& ring() const { return ring_; }
    const Rational& offset24() const { return offset24_; }
    long long first_index() const { return n0_; }
    long long precision() const { return prec_; }
    long long stored_terms() const;
    bool is_zero() const;

    // Coefficient of q^n: zero below the leading index, stored value in
    // [n0, precision], precision_error above.
    Int coeff(long long n) const;
    std::uint64_t coeff_mod(long long n) const; // mod rings only

    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    QSeries negated() const;

    // Requires the leading coefficient to be a unit in the ring.
    QSeries inverse() const;
    QSeries pow(long long e) const;

    // Quotient by the binomial (1 + sign q^k), k >= 1, sign in {-1, +1}.
    // Linear-time; this is what the mock theta accumulators iterate.
    QSeries divided_by_binomial(long long k, int sign) const;

    // Multiply by q^k: shifts indices and precision, offset24 unchanged.
    QSeries shifted(long long k) const;
    QSeries with_offset24(const Rational& off) const;

    bool same_coefficients(const QSeries& o) const;

private:
    QSeries(Ring r, Rational off, long long n0, long long prec,
            std::variant<ExactVec, ModVec> c)
        : ring_(r), offset24_(std::move(off)), n0_(n0), prec_(prec),
          c_(std::move(c)) {}

    void normalize();
    const ExactVec& zvec() const { return std::get<ExactVec>(c_); }
    const ModVec& mvec() const { return std::get<ModVec>(c_); }

    Ring ring_;
    Rational offset24_;
    long long n0_;   // == prec_ + 1 for the zero series
    long long prec_;
    std::variant<ExactVec, ModVec> c_;

    friend QSeries extract_progression(const QSeries& s, long long m, long long t);
    friend QSeries reduce_mod(const QSeries& s, std::uint64_t M);
    friend void write_cache(const std::string& path, const QSeries& s);
    friend QSeries read_cache(const std::string& path);
};

// A finite product prod eta(delta z)^{r_delta} described by its factor list.
// B = sum delta * r_delta drives the q^{B/24} prefactor; the level is declared
// data (defaults to lcm of the deltas) and every delta must divide it.
struct EtaQuotientSpec {
    std::vector<std::pair<long long, long long>> factors; // (delta, r)
    long long level = 0;

    static EtaQuotientSpec make(std::vector<std::pair<long long, long long>> factors,
                                long long level_override = 0);
    // Grammar: "delta^r" pairs separated by ',' or spaces, e.g. "2^1,3^1,1^-3,6^-1".
    static EtaQuotientSpec parse(const std::string& text, long long level_override = 0);

    long long B() const;
    Rational weight() const; // (1/2) sum r_delta
    std::string str() const;
};

// Expansion of eta(delta z)^r truncated at q^precision, offset24 = delta * r.
// r = +-1 walks the sparse pentagonal-number support; general r is built by
// binary powering.
QSeries eta_power(long long delta, long long r, long long precision, Ring ring);

QSeries eta_quotient(const EtaQuotientSpec& spec, long long precision, Ring ring);

// Subsequence a(m n + t), 0 <= t < m; the result records offset
// (24 t + offset24) / m exactly.
QSeries extract_progression(const QSeries& s, long long m, long long t);

// Coefficientwise reduction of an exact series into [0, M).
QSeries reduce_mod(const QSeries& s, std::uint64_t M);

// Binary coefficient cache: header (magic, ring, modulus, offset24, n0,
// precision) followed by the little-endian coefficient array. Exact
// coefficients are stored as a signed byte-length then magnitude bytes; mod
// coefficients are raw u64.
void write_cache(const std::string& path, const QSeries& s);
QSeries read_cache(const std::string& path);

} // namespace qcong
