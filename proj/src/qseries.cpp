#include "qcong/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qcong {

Ring Ring::mod(std::uint64_t modulus) {
    if (modulus < 2)
        throw precondition_error("ring: modulus must be at least 2");
    if (modulus > 0xffffffffull)
        throw precondition_error("ring: modulus must fit in 32 bits");
    return Ring(modulus);
}

std::string Ring::str() const {
    return is_exact() ? std::string("exact") : "mod " + std::to_string(m_);
}

namespace {

struct ZOps {
    using elem = Int;
    elem zero() const { return Int(0); }
    bool is_zero(const elem& x) const { return sgn(x) == 0; }
    void add_assign(elem& a, const elem& b) const { a += b; }
    elem neg(const elem& x) const { return -x; }
    elem mul(const elem& x, const elem& y) const { return elem(x * y); }
    void addmul(elem& acc, const elem& x, const elem& y) const {
        mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    }
    bool is_unit(const elem& x) const { return x == 1 || x == -1; }
    elem unit_inverse(const elem& x) const { return x; } // +-1 are self-inverse
};

struct MOps {
    std::uint64_t M;
    using elem = std::uint64_t;
    elem zero() const { return 0; }
    bool is_zero(elem x) const { return x == 0; }
    void add_assign(elem& a, elem b) const {
        a += b;
        if (a >= M)
            a -= M;
    }
    elem neg(elem x) const { return x == 0 ? 0 : M - x; }
    elem mul(elem x, elem y) const { return x * y % M; } // operands < 2^32
    void addmul(elem& acc, elem x, elem y) const { acc = (x * y + acc) % M; }
    bool is_unit(elem x) const { return std::gcd(x, M) == 1; }
    elem unit_inverse(elem x) const {
        return mpz_get_ui(inv_mod(Int(static_cast<unsigned long>(x)),
                                  Int(static_cast<unsigned long>(M)))
                              .get_mpz_t());
    }
};

template <class V>
std::size_t count_nonzero(const V& v) {
    std::size_t n = 0;
    for (const auto& x : v)
        if (!(x == 0))
            ++n;
    return n;
}

// out[n] = sum a[i] b[n-i], output-centric; for the mod ring the column is
// accumulated in 128 bits and reduced once.
std::vector<Int> conv_dense(const ZOps& R, const std::vector<Int>& a,
                            const std::vector<Int>& b, std::size_t out_len) {
    std::vector<Int> out(out_len, Int(0));
    for (std::size_t n = 0; n < out_len; ++n) {
        const std::size_t ilo = n >= b.size() ? n - b.size() + 1 : 0;
        const std::size_t ihi = std::min(a.size() - 1, n);
        Int& acc = out[n];
        for (std::size_t i = ilo; i <= ihi && i < a.size(); ++i)
            R.addmul(acc, a[i], b[n - i]);
    }
    return out;
}

std::vector<std::uint64_t> conv_dense(const MOps& R,
                                      const std::vector<std::uint64_t>& a,
                                      const std::vector<std::uint64_t>& b,
                                      std::size_t out_len) {
    std::vector<std::uint64_t> out(out_len, 0);
    for (std::size_t n = 0; n < out_len; ++n) {
        const std::size_t ilo = n >= b.size() ? n - b.size() + 1 : 0;
        const std::size_t ihi = std::min(a.size() - 1, n);
        unsigned __int128 acc = 0;
        for (std::size_t i = ilo; i <= ihi && i < a.size(); ++i)
            acc += static_cast<unsigned __int128>(a[i]) * b[n - i];
        out[n] = static_cast<std::uint64_t>(acc % R.M);
    }
    return out;
}

template <class Ops>
std::vector<typename Ops::elem> conv_sparse(const Ops& R,
                                            const std::vector<typename Ops::elem>& s,
                                            const std::vector<typename Ops::elem>& t,
                                            std::size_t out_len) {
    std::vector<typename Ops::elem> out(out_len, R.zero());
    for (std::size_t i = 0; i < s.size() && i < out_len; ++i) {
        if (R.is_zero(s[i]))
            continue;
        const std::size_t lim = std::min(t.size(), out_len - i);
        for (std::size_t j = 0; j < lim; ++j)
            if (!R.is_zero(t[j]))
                R.addmul(out[i + j], s[i], t[j]);
    }
    return out;
}

template <class Ops>
std::vector<typename Ops::elem> conv(const Ops& R,
                                     const std::vector<typename Ops::elem>& a,
                                     const std::vector<typename Ops::elem>& b,
                                     std::size_t out_len) {
    const std::size_t nza = count_nonzero(a);
    const std::size_t nzb = count_nonzero(b);
    const std::size_t sparse = std::min(nza, nzb);
    if (sparse * 8 < std::max(a.size(), b.size()))
        return nza <= nzb ? conv_sparse(R, a, b, out_len)
                          : conv_sparse(R, b, a, out_len);
    return conv_dense(R, a, b, out_len);
}

// b = 1/a to out_len terms; a[0] must be a unit. b[n] is produced by the
// linear recurrence b[n] = -a[0]^{-1} sum_{k>=1} a[k] b[n-k], iterating only
// over the nonzero a[k] (pentagonal series make this O(len^{3/2})).
template <class Ops>
std::vector<typename Ops::elem> invert_unit(const Ops& R,
                                            const std::vector<typename Ops::elem>& a,
                                            std::size_t out_len) {
    using E = typename Ops::elem;
    const E a0inv = R.unit_inverse(a[0]);
    std::vector<std::size_t> nz;
    for (std::size_t k = 1; k < a.size(); ++k)
        if (!R.is_zero(a[k]))
            nz.push_back(k);
    std::vector<E> b(out_len, R.zero());
    if (out_len == 0)
        return b;
    b[0] = a0inv;
    for (std::size_t n = 1; n < out_len; ++n) {
        E acc = R.zero();
        for (std::size_t k : nz) {
            if (k > n)
                break;
            R.addmul(acc, a[k], b[n - k]);
        }
        b[n] = R.neg(R.mul(a0inv, acc));
    }
    return b;
}

template <class Ops>
void div_binomial_inplace(const Ops& R, std::vector<typename Ops::elem>& c,
                          std::size_t k, int sign) {
    // c := c / (1 + sign q^k): r[n] = c[n] - sign r[n-k], ascending in place.
    for (std::size_t n = k; n < c.size(); ++n) {
        if (sign > 0)
            R.add_assign(c[n], R.neg(c[n - k]));
        else
            R.add_assign(c[n], c[n - k]);
    }
}

long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

} // namespace

QSeries QSeries::zero(Ring r, long long precision) {
    if (r.is_exact())
        return QSeries(r, Rational(0), precision + 1, precision, ExactVec{});
    return QSeries(r, Rational(0), precision + 1, precision, ModVec{});
}

QSeries QSeries::one(Ring r, long long precision) {
    if (precision < 0)
        throw precondition_error("series: constant needs precision >= 0");
    ExactVec c(static_cast<std::size_t>(precision) + 1, Int(0));
    c[0] = 1;
    return from_coeffs(r, Rational(0), 0, std::move(c), precision);
}

QSeries QSeries::from_coeffs(Ring r, const Rational& offset24, long long n0,
                             ExactVec coeffs, long long precision) {
    if (precision - n0 + 1 != static_cast<long long>(coeffs.size()))
        throw precondition_error("series: coefficient count must match range");
    QSeries s(r, offset24, n0, precision, ExactVec{});
    if (r.is_exact()) {
        s.c_ = std::move(coeffs);
    } else {
        ModVec m(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            m[i] = mpz_fdiv_ui(coeffs[i].get_mpz_t(),
                               static_cast<unsigned long>(r.modulus()));
        s.c_ = std::move(m);
    }
    s.normalize();
    return s;
}

void QSeries::normalize() {
    auto strip = [this](auto& v) {
        std::size_t lead = 0;
        while (lead < v.size() && v[lead] == 0)
            ++lead;
        if (lead == v.size()) {
            v.clear();
            n0_ = prec_ + 1;
        } else if (lead > 0) {
            v.erase(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(lead));
            n0_ += static_cast<long long>(lead);
        }
    };
    std::visit(strip, c_);
}

long long QSeries::stored_terms() const {
    return std::visit([](const auto& v) { return static_cast<long long>(v.size()); }, c_);
}

bool QSeries::is_zero() const { return stored_terms() == 0; }

Int QSeries::coeff(long long n) const {
    if (n > prec_)
        throw precision_error("series: coefficient index " + std::to_string(n) +
                              " beyond stored precision " + std::to_string(prec_));
    if (n < n0_)
        return Int(0);
    const auto i = static_cast<std::size_t>(n - n0_);
    if (ring_.is_exact())
        return zvec()[i];
    return Int(static_cast<unsigned long>(mvec()[i]));
}

std::uint64_t QSeries::coeff_mod(long long n) const {
    if (ring_.is_exact())
        throw precondition_error("series: coeff_mod needs a mod ring");
    if (n > prec_)
        throw precision_error("series: coefficient index " + std::to_string(n) +
                              " beyond stored precision " + std::to_string(prec_));
    if (n < n0_)
        return 0;
    return mvec()[static_cast<std::size_t>(n - n0_)];
}

QSeries QSeries::operator+(const QSeries& o) const {
    if (ring_ != o.ring_)
        throw precondition_error("series: ring mismatch in addition");
    if (offset24_ != o.offset24_)
        throw precondition_error("series: offset mismatch in addition (offsets "
                                 "must agree; rebasing is never implicit)");
    const long long prec = std::min(prec_, o.prec_);
    const long long n0 = std::min(std::min(n0_, o.n0_), prec + 1);
    QSeries out = zero(ring_, prec);
    out.offset24_ = offset24_;
    out.n0_ = n0;
    const auto len = static_cast<std::size_t>(std::max<long long>(prec - n0 + 1, 0));
    auto fill = [&](auto R, auto& v, const auto& va, const auto& vb) {
        v.assign(len, R.zero());
        for (std::size_t i = 0; i < len; ++i) {
            const long long n = n0 + static_cast<long long>(i);
            if (n >= n0_ && n <= prec_ && n - n0_ < stored_terms())
                R.add_assign(v[i], va[static_cast<std::size_t>(n - n0_)]);
            if (n >= o.n0_ && n <= o.prec_ && n - o.n0_ < o.stored_terms())
                R.add_assign(v[i], vb[static_cast<std::size_t>(n - o.n0_)]);
        }
    };
    if (ring_.is_exact()) {
        ExactVec v;
        fill(ZOps{}, v, zvec(), o.zvec());
        out.c_ = std::move(v);
    } else {
        ModVec v;
        fill(MOps{ring_.modulus()}, v, mvec(), o.mvec());
        out.c_ = std::move(v);
    }
    out.normalize();
    return out;
}

QSeries QSeries::negated() const {
    QSeries s = *this;
    if (ring_.is_exact()) {
        for (auto& x : std::get<ExactVec>(s.c_))
            x = -x;
    } else {
        MOps R{ring_.modulus()};
        for (auto& x : std::get<ModVec>(s.c_))
            x = R.neg(x);
    }
    return s;
}

QSeries QSeries::operator-(const QSeries& o) const { return *this + o.negated(); }

QSeries QSeries::operator*(const QSeries& o) const {
    if (ring_ != o.ring_)
        throw precondition_error("series: ring mismatch in multiplication");
    const Rational off = offset24_ + o.offset24_;
    const long long prec = std::min(prec_ + o.n0_, o.prec_ + n0_);
    if (is_zero() || o.is_zero()) {
        QSeries z = zero(ring_, prec);
        z.offset24_ = off;
        return z;
    }
    const long long n0 = n0_ + o.n0_;
    const auto len = static_cast<std::size_t>(prec - n0 + 1);
    QSeries out = zero(ring_, prec);
    out.offset24_ = off;
    out.n0_ = n0;
    if (ring_.is_exact())
        out.c_ = conv(ZOps{}, zvec(), o.zvec(), len);
    else
        out.c_ = conv(MOps{ring_.modulus()}, mvec(), o.mvec(), len);
    out.normalize();
    return out;
}

QSeries QSeries::inverse() const {
    if (is_zero())
        throw precondition_error("series: cannot invert the zero series");
    const long long v = n0_;
    const auto len = static_cast<std::size_t>(prec_ - v + 1);
    QSeries out = zero(ring_, prec_ - 2 * v);
    out.offset24_ = -offset24_;
    out.n0_ = -v;
    if (ring_.is_exact()) {
        const auto& a = zvec();
        if (!ZOps{}.is_unit(a[0]))
            throw precondition_error("series: leading coefficient is not a unit");
        out.c_ = invert_unit(ZOps{}, a, len);
    } else {
        const auto& a = mvec();
        MOps R{ring_.modulus()};
        if (!R.is_unit(a[0]))
            throw precondition_error("series: leading coefficient is not a unit");
        out.c_ = invert_unit(R, a, len);
    }
    out.normalize();
    return out;
}

QSeries QSeries::pow(long long e) const {
    if (e == 0)
        return one(ring_, std::max<long long>(prec_, 0));
    if (is_zero())
        return *this;
    if (e < 0)
        return inverse().pow(-e);
    // binary powering; truncation keeps every intermediate at its honest precision
    QSeries base = *this;
    QSeries result = *this; // overwritten on the first set bit
    bool have = false;
    while (e > 0) {
        if (e & 1) {
            result = have ? result * base : base;
            have = true;
        }
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return result;
}

QSeries QSeries::divided_by_binomial(long long k, int sign) const {
    if (k < 1 || (sign != 1 && sign != -1))
        throw precondition_error("series: binomial divisor must be 1 +- q^k, k >= 1");
    QSeries s = *this;
    if (is_zero())
        return s;
    if (ring_.is_exact())
        div_binomial_inplace(ZOps{}, std::get<ExactVec>(s.c_),
                             static_cast<std::size_t>(k), sign);
    else
        div_binomial_inplace(MOps{ring_.modulus()}, std::get<ModVec>(s.c_),
                             static_cast<std::size_t>(k), sign);
    return s;
}

QSeries QSeries::shifted(long long k) const {
    QSeries s = *this;
    s.n0_ += k;
    s.prec_ += k;
    return s;
}

QSeries QSeries::with_offset24(const Rational& off) const {
    QSeries s = *this;
    s.offset24_ = off;
    return s;
}

bool QSeries::same_coefficients(const QSeries& o) const {
    return ring_ == o.ring_ && n0_ == o.n0_ && prec_ == o.prec_ && c_ == o.c_;
}

EtaQuotientSpec EtaQuotientSpec::make(
    std::vector<std::pair<long long, long long>> factors, long long level_override) {
    // merge repeated deltas, drop r = 0, keep deterministic order
    std::sort(factors.begin(), factors.end());
    std::vector<std::pair<long long, long long>> merged;
    for (const auto& [d, r] : factors) {
        if (d < 1)
            throw precondition_error("eta spec: delta must be >= 1");
        if (!merged.empty() && merged.back().first == d)
            merged.back().second += r;
        else
            merged.emplace_back(d, r);
    }
    std::erase_if(merged, [](const auto& p) { return p.second == 0; });
    if (merged.empty())
        throw precondition_error("eta spec: no factors");
    long long lev = 1;
    for (const auto& [d, r] : merged)
        lev = std::lcm(lev, d);
    if (level_override != 0) {
        if (level_override < 1)
            throw precondition_error("eta spec: level must be positive");
        for (const auto& [d, r] : merged)
            if (level_override % d != 0)
                throw precondition_error("eta spec: every delta must divide the level");
        lev = level_override;
    }
    EtaQuotientSpec s;
    s.factors = std::move(merged);
    s.level = lev;
    return s;
}

EtaQuotientSpec EtaQuotientSpec::parse(const std::string& text, long long level_override) {
    std::string t = text;
    std::replace(t.begin(), t.end(), ',', ' ');
    std::istringstream in(t);
    std::vector<std::pair<long long, long long>> factors;
    std::string tok;
    while (in >> tok) {
        const auto caret = tok.find('^');
        if (caret == std::string::npos)
            throw precondition_error("eta spec: expected delta^r, got '" + tok + "'");
        try {
            const long long d = std::stoll(tok.substr(0, caret));
            const long long r = std::stoll(tok.substr(caret + 1));
            factors.emplace_back(d, r);
        } catch (const std::logic_error&) {
            throw precondition_error("eta spec: expected delta^r, got '" + tok + "'");
        }
    }
    return make(std::move(factors), level_override);
}

long long EtaQuotientSpec::B() const {
    long long b = 0;
    for (const auto& [d, r] : factors)
        b += d * r;
    return b;
}

Rational EtaQuotientSpec::weight() const {
    long long s = 0;
    for (const auto& [d, r] : factors)
        s += r;
    return make_rational(to_int(s), Int(2));
}

std::string EtaQuotientSpec::str() const {
    std::string s;
    for (const auto& [d, r] : factors) {
        if (!s.empty())
            s += ',';
        s += std::to_string(d) + "^" + std::to_string(r);
    }
    return s;
}

QSeries eta_power(long long delta, long long r, long long precision, Ring ring) {
    if (delta < 1)
        throw precondition_error("eta_power: delta must be >= 1");
    if (precision < 0)
        throw precondition_error("eta_power: precision must be >= 0");
    if (r == 0)
        return QSeries::one(ring, precision);
    // Pentagonal support: prod (1 - x^n) = sum_k (-1)^k x^{k(3k-1)/2}, x = q^delta.
    QSeries::ExactVec c(static_cast<std::size_t>(precision) + 1, Int(0));
    c[0] = 1;
    for (long long k = 1;; ++k) {
        const long long g1 = delta * (k * (3 * k - 1) / 2);
        const long long g2 = delta * (k * (3 * k + 1) / 2);
        if (g1 > precision)
            break;
        const int sign = (k % 2 == 0) ? 1 : -1;
        c[static_cast<std::size_t>(g1)] += sign;
        if (g2 <= precision)
            c[static_cast<std::size_t>(g2)] += sign;
    }
    QSeries base = QSeries::from_coeffs(ring, Rational(to_int(delta)), 0, std::move(c), precision);
    if (r == 1)
        return base;
    if (r == -1)
        return base.inverse();
    return base.pow(r);
}

QSeries eta_quotient(const EtaQuotientSpec& spec, long long precision, Ring ring) {
    if (precision < 0)
        throw precondition_error("eta_quotient: precision must be >= 0");
    if (spec.factors.empty())
        throw precondition_error("eta_quotient: empty spec");
    QSeries out = eta_power(spec.factors[0].first, spec.factors[0].second, precision, ring);
    for (std::size_t i = 1; i < spec.factors.size(); ++i)
        out = out * eta_power(spec.factors[i].first, spec.factors[i].second, precision, ring);
    return out;
}

QSeries extract_progression(const QSeries& s, long long m, long long t) {
    if (m < 1)
        throw precondition_error("extract: m must be >= 1");
    if (t < 0 || t >= m)
        throw precondition_error("extract: t must satisfy 0 <= t < m");
    const Rational off =
        (s.offset24_ + Rational(24) * Rational(to_int(t))) / Rational(to_int(m));
    const long long jmax = floor_div(s.prec_ - t, m);
    QSeries out = QSeries::zero(s.ring_, jmax);
    out.offset24_ = off;
    if (s.is_zero())
        return out;
    const long long jmin = ceil_div(s.n0_ - t, m);
    if (jmin > jmax)
        return out;
    out.n0_ = jmin;
    const auto len = static_cast<std::size_t>(jmax - jmin + 1);
    auto pick = [&](const auto& v, auto& dst) {
        dst.assign(len, typename std::decay_t<decltype(dst)>::value_type(0));
        for (std::size_t j = 0; j < len; ++j) {
            const long long n = m * (jmin + static_cast<long long>(j)) + t;
            if (n >= s.n0_)
                dst[j] = v[static_cast<std::size_t>(n - s.n0_)];
        }
    };
    if (s.ring_.is_exact()) {
        QSeries::ExactVec v;
        pick(s.zvec(), v);
        out.c_ = std::move(v);
    } else {
        QSeries::ModVec v;
        pick(s.mvec(), v);
        out.c_ = std::move(v);
    }
    out.normalize();
    return out;
}

QSeries reduce_mod(const QSeries& s, std::uint64_t M) {
    if (!s.ring_.is_exact())
        throw precondition_error("reduce_mod: input must be exact");
    const Ring r = Ring::mod(M);
    QSeries out = QSeries::zero(r, s.prec_);
    out.offset24_ = s.offset24_;
    if (s.is_zero())
        return out;
    out.n0_ = s.n0_;
    QSeries::ModVec v(s.zvec().size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = mpz_fdiv_ui(s.zvec()[i].get_mpz_t(), static_cast<unsigned long>(M));
    out.c_ = std::move(v);
    out.normalize();
    return out;
}

} // namespace qcong
