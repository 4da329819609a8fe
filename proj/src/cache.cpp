#include <cstring>
#include <fstream>

#include "qcong/qseries.hpp"

namespace qcong {

namespace {

constexpr char kMagic[4] = {'Q', 'S', 'C', '1'};

void put_u64(std::ostream& out, std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i)
        b[i] = static_cast<unsigned char>(v >> (8 * i));
    out.write(reinterpret_cast<const char*>(b), 8);
}

void put_i64(std::ostream& out, long long v) {
    put_u64(out, static_cast<std::uint64_t>(v));
}

std::uint64_t get_u64(std::istream& in) {
    unsigned char b[8];
    in.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i)
        v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return v;
}

long long get_i64(std::istream& in) {
    return static_cast<long long>(get_u64(in));
}

void put_mpz(std::ostream& out, const Int& z) {
    // signed byte length, then little-endian magnitude; zero is length 0
    if (sgn(z) == 0) {
        put_i64(out, 0);
        return;
    }
    const std::size_t bytes = (mpz_sizeinbase(z.get_mpz_t(), 2) + 7) / 8;
    const long long slen = sgn(z) < 0 ? -static_cast<long long>(bytes)
                                      : static_cast<long long>(bytes);
    put_i64(out, slen);
    std::vector<unsigned char> buf(bytes, 0);
    std::size_t count = 0;
    mpz_export(buf.data(), &count, -1, 1, 0, 0, z.get_mpz_t());
    out.write(reinterpret_cast<const char*>(buf.data()),
              static_cast<std::streamsize>(bytes));
}

Int get_mpz(std::istream& in) {
    const long long slen = get_i64(in);
    const auto bytes = static_cast<std::size_t>(slen < 0 ? -slen : slen);
    if (bytes == 0)
        return Int(0);
    std::vector<unsigned char> buf(bytes);
    in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(bytes));
    Int z;
    mpz_import(z.get_mpz_t(), bytes, -1, 1, 0, 0, buf.data());
    return slen < 0 ? Int(-z) : z;
}

} // namespace

void write_cache(const std::string& path, const QSeries& s) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cache: cannot open '" + path + "' for writing");
    out.write(kMagic, 4);
    out.put(s.ring_.is_exact() ? '\0' : '\1');
    put_u64(out, s.ring_.modulus());
    if (!s.offset24_.get_num().fits_slong_p() || !s.offset24_.get_den().fits_slong_p())
        throw std::runtime_error("cache: offset out of range");
    put_i64(out, s.offset24_.get_num().get_si());
    put_i64(out, s.offset24_.get_den().get_si());
    put_i64(out, s.n0_);
    put_i64(out, s.prec_);
    put_u64(out, static_cast<std::uint64_t>(s.stored_terms()));
    if (s.ring_.is_exact()) {
        for (const auto& z : s.zvec())
            put_mpz(out, z);
    } else {
        for (const auto v : s.mvec())
            put_u64(out, v);
    }
    if (!out)
        throw std::runtime_error("cache: write failed for '" + path + "'");
}

QSeries read_cache(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cache: cannot open '" + path + "'");
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error("cache: bad magic in '" + path + "'");
    const int ring_tag = in.get();
    const std::uint64_t modulus = get_u64(in);
    const long long onum = get_i64(in);
    const long long oden = get_i64(in);
    const long long n0 = get_i64(in);
    const long long prec = get_i64(in);
    const auto count = static_cast<std::size_t>(get_u64(in));
    const Ring ring = ring_tag == 0 ? Ring::exact() : Ring::mod(modulus);
    QSeries s = QSeries::zero(ring, prec);
    s.offset24_ = make_rational(to_int(onum), to_int(oden));
    if (count == 0)
        return s;
    s.n0_ = n0;
    if (ring.is_exact()) {
        QSeries::ExactVec v(count);
        for (auto& z : v)
            z = get_mpz(in);
        s.c_ = std::move(v);
    } else {
        QSeries::ModVec v(count);
        for (auto& x : v)
            x = get_u64(in);
        s.c_ = std::move(v);
    }
    if (!in)
        throw std::runtime_error("cache: truncated file '" + path + "'");
    s.normalize();
    return s;
}

} // namespace qcong
