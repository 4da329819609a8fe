#include "qcong/cli.hpp"

#include <algorithm>
#include <cctype>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcong/admissibility.hpp"
#include "qcong/congruence.hpp"
#include "qcong/dedekind.hpp"
#include "qcong/errors.hpp"
#include "qcong/multipliers.hpp"
#include "qcong/sequences.hpp"
#include "qcong/witness.hpp"

namespace qcong::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

enum class Format { text, csv, json };

// One parsed invocation; the invariant mmax*(N+1) <= series precision is
// enforced by sizing the series from the scan request.
struct JobConfig {
    std::string selector;
    long long precision = 0;
    std::uint64_t modulus = 0;
    long long ell = 0;
    long long mmax = 0;
    long long scan_n = 0;
    long long level = 0;
    Format format = Format::text;
    std::string cache_dir;
    unsigned threads = 1;
};

Format parse_format(const std::string& s) {
    if (s == "text")
        return Format::text;
    if (s == "csv")
        return Format::csv;
    if (s == "json")
        return Format::json;
    throw precondition_error("unknown format '" + s + "'");
}

std::string fnv16(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (const unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string cache_path(const JobConfig& cfg, const Ring& ring, long long prec) {
    std::string tag;
    for (const char c : cfg.selector)
        tag += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
    tag += ring.is_exact() ? "_exact" : "_mod" + std::to_string(ring.modulus());
    tag += "_N" + std::to_string(prec);
    if (cfg.level != 0)
        tag += "_L" + std::to_string(cfg.level);
    return (std::filesystem::path(cfg.cache_dir) /
            (tag + "-" + fnv16(cfg.selector) + ".qsc"))
        .string();
}

QSeries load_series(const Preset& preset, const JobConfig& cfg, Ring ring,
                    long long prec) {
    if (cfg.cache_dir.empty())
        return preset.make(prec, ring);
    const std::string path = cache_path(cfg, ring, prec);
    if (std::filesystem::exists(path)) {
        try {
            QSeries s = read_cache(path);
            if (s.ring() == ring && s.precision() >= prec)
                return s;
        } catch (const std::exception&) {
            // fall through to recompute
        }
    }
    QSeries s = preset.make(prec, ring);
    std::filesystem::create_directories(cfg.cache_dir);
    write_cache(path, s);
    return s;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

ProgressionVerdict preset_verdict(const Preset& preset, long long m, long long t,
                                  long long ell) {
    switch (preset.theorem) {
    case TheoremKind::f:
        return verdict_f(to_int(m), to_int(t), to_int(ell));
    case TheoremKind::omega:
        return verdict_omega(to_int(m), to_int(t), to_int(ell));
    case TheoremKind::eta:
        return verdict_eta(*preset.eta, to_int(m), to_int(t), to_int(ell));
    }
    throw diagnostic_error("unreachable theorem kind");
}

// good-progression flag applies to the mock theta presets only
std::optional<bool> preset_good(const Preset& preset, long long m, long long t) {
    switch (preset.theorem) {
    case TheoremKind::f:
        return good_f(m, t);
    case TheoremKind::omega:
        return good_omega(m, t);
    case TheoremKind::eta:
        return std::nullopt;
    }
    return std::nullopt;
}

int cmd_expand(const JobConfig& cfg, std::ostream& out) {
    const Preset preset = make_preset(cfg.selector, cfg.level);
    const Ring ring = cfg.modulus ? Ring::mod(cfg.modulus) : Ring::exact();
    const QSeries s = load_series(preset, cfg, ring, cfg.precision);
    std::ostringstream buf;
    const long long lo = std::min<long long>(s.first_index(), 0);
    switch (cfg.format) {
    case Format::text:
        buf << "# expand " << cfg.selector << " ring=" << ring.str()
            << " offset24=" << rational_str(s.offset24()) << " N=" << cfg.precision
            << "\n";
        for (long long n = lo; n <= cfg.precision; ++n)
            buf << n << "\t" << s.coeff(n).get_str() << "\n";
        break;
    case Format::csv:
        buf << "n,value\n";
        for (long long n = lo; n <= cfg.precision; ++n)
            buf << n << "," << s.coeff(n).get_str() << "\n";
        break;
    case Format::json: {
        ordered_json j;
        j["command"] = "expand";
        j["selector"] = cfg.selector;
        j["ring"] = ring.is_exact() ? "exact" : "mod";
        j["modulus"] = ring.modulus();
        j["offset24"] = rational_str(s.offset24());
        j["n0"] = s.first_index();
        j["precision"] = cfg.precision;
        ordered_json rows = ordered_json::array();
        for (long long n = lo; n <= cfg.precision; ++n)
            rows.push_back({{"n", n}, {"value", s.coeff(n).get_str()}});
        j["coefficients"] = std::move(rows);
        buf << j.dump(2) << "\n";
        break;
    }
    }
    out << buf.str();
    return 0;
}

struct AnnotatedRow {
    ScanResult scan;
    ProgressionVerdict verdict;
    std::optional<bool> good;
};

std::vector<AnnotatedRow> run_scan(const Preset& preset, const JobConfig& cfg) {
    const Ring ring = Ring::mod(static_cast<std::uint64_t>(cfg.ell));
    const long long prec = cfg.mmax * (cfg.scan_n + 1);
    const QSeries s = load_series(preset, cfg, ring, prec);

    std::vector<std::pair<long long, long long>> cells;
    for (long long m = 1; m <= cfg.mmax; ++m)
        for (long long t = 0; t < m; ++t)
            cells.emplace_back(m, t);

    std::vector<char> survive(cells.size(), 0);
    std::vector<ScanResult> results(cells.size());
    const unsigned workers = std::max(1u, cfg.threads);
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            results[i] = check_progression(s, cells[i].first, cells[i].second,
                                           cfg.ell, cfg.scan_n);
            survive[i] = results[i].holds() ? 1 : 0;
        }
    };
    if (workers <= 1 || cells.size() < 2) {
        work(0, cells.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (cells.size() + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t b = std::min(cells.size(), w * chunk);
            const std::size_t e = std::min(cells.size(), b + chunk);
            if (b < e)
                pool.emplace_back(work, b, e);
        }
        for (auto& th : pool)
            th.join();
    }

    std::vector<AnnotatedRow> rows;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (!survive[i])
            continue;
        AnnotatedRow row;
        row.scan = results[i];
        row.verdict = preset_verdict(preset, cells[i].first, cells[i].second, cfg.ell);
        row.good = preset_good(preset, cells[i].first, cells[i].second);
        rows.push_back(std::move(row));
    }
    return rows;
}

int cmd_scan(const JobConfig& cfg, std::ostream& out) {
    const Preset preset = make_preset(cfg.selector, cfg.level);
    const std::vector<AnnotatedRow> rows = run_scan(preset, cfg);
    std::ostringstream buf;
    auto good_str = [](const std::optional<bool>& g) {
        return !g.has_value() ? std::string("-") : (*g ? "1" : "0");
    };
    switch (cfg.format) {
    case Format::text:
        buf << "# scan " << cfg.selector << " ell=" << cfg.ell
            << " mmax=" << cfg.mmax << " empirical (n <= " << cfg.scan_n << ")\n";
        for (const auto& r : rows)
            buf << "m=" << r.scan.m << " t=" << r.scan.t
                << " status=holds(n<=" << r.scan.bound << ")"
                << " verdict=" << to_string(r.verdict.outcome)
                << " reason=" << to_string(r.verdict.reason)
                << " symbol_zero=" << (r.verdict.symbol_zero ? 1 : 0)
                << " good=" << good_str(r.good) << "\n";
        break;
    case Format::csv:
        buf << "m,t,ell,status,first_fail_n,verdict,reason,symbol_zero,good_flag\n";
        for (const auto& r : rows)
            buf << r.scan.m << "," << r.scan.t << "," << cfg.ell << ",holds,,"
                << to_string(r.verdict.outcome) << "," << to_string(r.verdict.reason)
                << "," << (r.verdict.symbol_zero ? 1 : 0) << "," << good_str(r.good)
                << "\n";
        break;
    case Format::json: {
        ordered_json j;
        j["command"] = "scan";
        j["selector"] = cfg.selector;
        j["ell"] = cfg.ell;
        j["mmax"] = cfg.mmax;
        j["depth"] = cfg.scan_n;
        j["note"] = "empirical (n <= " + std::to_string(cfg.scan_n) + ")";
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json row;
            row["m"] = r.scan.m;
            row["t"] = r.scan.t;
            row["ell"] = cfg.ell;
            row["status"] = "holds";
            row["checked"] = r.scan.checked;
            row["verdict"] = to_string(r.verdict.outcome);
            row["reason"] = to_string(r.verdict.reason);
            row["symbol_zero"] = r.verdict.symbol_zero;
            if (r.good.has_value())
                row["good"] = *r.good;
            else
                row["good"] = nullptr;
            arr.push_back(std::move(row));
        }
        j["survivors"] = std::move(arr);
        buf << j.dump(2) << "\n";
        break;
    }
    }
    out << buf.str();
    return 0;
}

ordered_json verdict_json(const ProgressionVerdict& v) {
    ordered_json j;
    j["command"] = "verdict";
    j["theorem"] = to_string(v.theorem);
    j["m"] = v.m.get_str();
    j["t"] = v.t.get_str();
    j["ell"] = v.ell.get_str();
    j["outcome"] = to_string(v.outcome);
    j["reason"] = to_string(v.reason);
    j["symbol_zero"] = v.symbol_zero;
    return j;
}

int cmd_verdict(const JobConfig& cfg, long long m, long long t, long long ell,
                std::ostream& out) {
    ProgressionVerdict v;
    if (cfg.selector.rfind("general:", 0) == 0) {
        // general:B,N,n0
        std::string rest = cfg.selector.substr(8);
        std::replace(rest.begin(), rest.end(), ',', ' ');
        std::istringstream in(rest);
        long long B = 0, N = 0, n0 = 0;
        if (!(in >> B >> N >> n0))
            throw precondition_error("verdict: general selector needs B,N,n0");
        v = verdict_general(to_int(B), to_int(N), to_int(n0), to_int(m), to_int(t),
                            to_int(ell));
    } else {
        const Preset preset = make_preset(cfg.selector, cfg.level);
        v = preset_verdict(preset, m, t, ell);
    }
    std::ostringstream buf;
    if (cfg.format == Format::json) {
        buf << verdict_json(v).dump(2) << "\n";
    } else {
        buf << to_string(v.outcome);
        if (v.reason != Reason::none)
            buf << "(" << to_string(v.reason) << ")";
        if (v.symbol_zero)
            buf << " [symbol=0]";
        buf << "\n";
    }
    out << buf.str();
    return 0;
}

int cmd_witness(const JobConfig& cfg, long long m, long long t, long long B,
                long long N, long long lambda, std::ostream& out) {
    const WitnessResult w = radu_witness(m, t, B, N, lambda);
    const bool ok = verify_witness(m, t, B, N, w);
    std::ostringstream buf;
    if (cfg.format == Format::json) {
        ordered_json j;
        j["command"] = "witness";
        j["m"] = m;
        j["t"] = t;
        j["B"] = B;
        j["N"] = N;
        j["lambda"] = lambda;
        j["Q"] = w.Q.get_str();
        j["a"] = w.a.get_str();
        j["verified"] = ok;
        buf << j.dump(2) << "\n";
    } else {
        buf << "a=" << w.a.get_str() << " Q=" << w.Q.get_str() << " "
            << (ok ? "verified" : "FAILED") << "\n";
    }
    out << buf.str();
    return ok ? 0 : 1;
}

int cmd_orbit(const JobConfig& cfg, long long m, long long t, long long B,
              long long N, std::ostream& out) {
    const std::set<long long> orbit = t_orbit(m, t, B, N);
    std::ostringstream buf;
    if (cfg.format == Format::json) {
        ordered_json j;
        j["command"] = "orbit";
        j["m"] = m;
        j["t"] = t;
        j["B"] = B;
        j["N"] = N;
        j["orbit"] = orbit;
        buf << j.dump(2) << "\n";
    } else {
        bool first = true;
        for (const long long r : orbit) {
            buf << (first ? "" : " ") << r;
            first = false;
        }
        buf << "\n";
    }
    out << buf.str();
    return 0;
}

int cmd_dedekind(const JobConfig& cfg, const std::string& d, const std::string& c,
                 bool fast, std::ostream& out) {
    const Int dz(d), cz(c);
    const Rational s = fast ? dedekind_sum_fast(dz, cz) : dedekind_sum(dz, cz);
    std::ostringstream buf;
    if (cfg.format == Format::json) {
        ordered_json j;
        j["command"] = "dedekind";
        j["d"] = dz.get_str();
        j["c"] = cz.get_str();
        j["value"] = rational_str(s);
        buf << j.dump(2) << "\n";
    } else {
        buf << rational_str(s) << "\n";
    }
    out << buf.str();
    return 0;
}

int cmd_multiplier_unit(const JobConfig& cfg, const std::string& which,
                        long long a, long long b, long long c, long long d,
                        std::ostream& out) {
    const Mat2 A{to_int(a), to_int(b), to_int(c), to_int(d)};
    UnitRoot u;
    if (which == "xi")
        u = xi(A);
    else if (which == "w")
        u = w_of(A);
    else if (which == "w1")
        u = w1_of(A);
    else if (which == "w2")
        u = w2_of(A);
    else
        throw precondition_error("multiplier: unknown kind '" + which + "'");
    std::ostringstream buf;
    if (cfg.format == Format::json) {
        ordered_json j;
        j["command"] = "multiplier";
        j["op"] = which;
        j["matrix"] = {a, b, c, d};
        j["exponent"] = rational_str(u.exponent());
        buf << j.dump(2) << "\n";
    } else {
        buf << u.str() << "\n";
    }
    out << buf.str();
    return 0;
}

// deterministic det-1 sample with c > 0, ces | c, entries within bound
Mat2 sample_sl2(std::mt19937_64& rng, long long bound, long long c_multiple) {
    std::uniform_int_distribution<long long> dc(1, std::max<long long>(1, bound / c_multiple));
    std::uniform_int_distribution<long long> dd(-bound, bound);
    for (;;) {
        const long long c = c_multiple * dc(rng);
        const long long d = dd(rng);
        if (std::gcd(std::abs(d), c) != 1)
            continue;
        long long a0;
        try {
            Int inv = inv_mod(to_int(d), to_int(c));
            a0 = inv.get_si();
        } catch (const precondition_error&) {
            continue;
        }
        for (const long long a : {a0, a0 - c, a0 + c}) {
            if (a == 0 || std::abs(a) > bound)
                continue;
            const long long b = (a * d - 1) / c;
            if ((a * d - 1) % c != 0 || std::abs(b) > bound)
                continue;
            return Mat2{to_int(a), to_int(b), to_int(c), to_int(d)};
        }
    }
}

int cmd_check_eta(const JobConfig& cfg, int samples, double tol, long long terms,
                  std::ostream& out) {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    long double worst = 0;
    int passed = 0;
    const std::complex<long double> z(0.25L, 0.75L);
    for (int i = 0; i < samples; ++i) {
        const Mat2 A = sample_sl2(rng, 50, 1);
        const EtaCheck chk = verify_eta_numeric(A, z, terms, tol);
        worst = std::max(worst, chk.residual);
        if (chk.ok())
            ++passed;
    }
    std::ostringstream buf;
    if (cfg.format == Format::json) {
        ordered_json j;
        j["command"] = "check-eta";
        j["samples"] = samples;
        j["tol"] = tol;
        j["max_residual"] = static_cast<double>(worst);
        j["passed"] = passed;
        j["ok"] = passed == samples;
        buf << j.dump(2) << "\n";
    } else {
        buf << "samples=" << samples << " max_residual=" << static_cast<double>(worst)
            << " " << (passed == samples ? "ok" : "FAILED") << "\n";
    }
    out << buf.str();
    if (passed != samples)
        throw diagnostic_error("check-eta: residual above tolerance");
    return 0;
}

int cmd_leading(const JobConfig& cfg, bool omega_case, long long Q, long long ell,
                std::optional<long long> t_opt, std::ostream& out) {
    const long long t = t_opt.value_or(omega_case ? leading_omega_default_t(Q, ell)
                                                  : leading_f_default_t(Q, ell));
    const LeadingConstant lc = omega_case ? leading_constant_omega(Q, ell, t)
                                          : leading_constant_f(Q, ell, t);
    const Int order = 48 * to_int(Q) * to_int(ell) * to_int(ell);
    const bool root_ok = lc.unit.pow(order).is_one();
    std::ostringstream buf;
    if (cfg.format == Format::json) {
        ordered_json j;
        j["command"] = omega_case ? "leading-omega" : "leading-f";
        j["Q"] = Q;
        j["ell"] = ell;
        j["t"] = t;
        j["unit_exponent"] = rational_str(lc.unit.exponent());
        j["radical"] = lc.radical.get_str();
        j["order_check"] = root_ok;
        buf << j.dump(2) << "\n";
    } else {
        buf << "K = " << lc.unit.str() << " / sqrt(" << lc.radical.get_str() << ")"
            << "  (t=" << t << ", unit^" << order.get_str()
            << (root_ok ? " = 1)" : " != 1 !!)") << "\n";
    }
    out << buf.str();
    return 0;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"exact q-series congruence toolkit"};
    app.require_subcommand(1);

    JobConfig cfg;
    if (const char* env = std::getenv("QCONG_CACHE_DIR"))
        cfg.cache_dir = env;
    std::string format = "text";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "text | csv | json");
        sub->add_option("--cache-dir", cfg.cache_dir,
                        "series cache directory (env QCONG_CACHE_DIR)");
    };

    // expand
    auto* expand = app.add_subcommand("expand", "print coefficients of a preset");
    expand->add_option("selector", cfg.selector)->required();
    expand->add_option("N", cfg.precision)->required();
    expand->add_option("--mod", cfg.modulus, "coefficients in Z/M");
    expand->add_option("--level", cfg.level, "declared level for eta selectors");
    add_common(expand);

    // scan
    auto* scan = app.add_subcommand("scan", "scan progressions for congruences");
    scan->add_option("selector", cfg.selector)->required();
    scan->add_option("--ell", cfg.ell, "prime modulus >= 5")->required();
    scan->add_option("--mmax", cfg.mmax)->required();
    scan->add_option("--N", cfg.scan_n, "scan depth per progression")->required();
    scan->add_option("--threads", cfg.threads);
    scan->add_option("--level", cfg.level);
    add_common(scan);

    // verdict
    long long vm = 0, vt = 0, vell = 0;
    auto* verdict = app.add_subcommand("verdict", "necessary-condition verdict");
    verdict->add_option("selector", cfg.selector,
                        "f | omega | eta preset | general:B,N,n0")
        ->required();
    verdict->add_option("m", vm)->required();
    verdict->add_option("t", vt)->required();
    verdict->add_option("ell", vell)->required();
    verdict->add_option("--level", cfg.level);
    add_common(verdict);

    // witness
    long long wm = 0, wt = 0, wB = 0, wN = 0, wlambda = 0;
    auto* witness = app.add_subcommand("witness", "construct a progression witness");
    witness->add_option("m", wm)->required();
    witness->add_option("t", wt)->required();
    witness->add_option("B", wB)->required();
    witness->add_option("N", wN)->required();
    witness->add_option("--lambda", wlambda);
    add_common(witness);

    // orbit
    auto* orbit = app.add_subcommand("orbit", "square-class orbit of a progression");
    orbit->add_option("m", wm)->required();
    orbit->add_option("t", wt)->required();
    orbit->add_option("B", wB)->required();
    orbit->add_option("N", wN)->required();
    add_common(orbit);

    // dedekind
    std::string dd, dc;
    bool dfast = false;
    auto* dede = app.add_subcommand("dedekind", "exact Dedekind sum s(d, c)");
    dede->add_option("d", dd)->required();
    dede->add_option("c", dc)->required();
    dede->add_flag("--fast", dfast, "reciprocity evaluator (coprime arguments)");
    add_common(dede);

    // multiplier
    auto* mult = app.add_subcommand("multiplier", "multiplier systems and checks");
    mult->require_subcommand(1);
    long long ma = 0, mb = 0, mc = 0, md = 0;
    for (const std::string which : {"xi", "w", "w1", "w2"}) {
        auto* sub = mult->add_subcommand(which, "exact multiplier " + which);
        sub->add_option("a", ma)->required();
        sub->add_option("b", mb)->required();
        sub->add_option("c", mc)->required();
        sub->add_option("d", md)->required();
        add_common(sub);
    }
    int samples = 50;
    double tol = 1e-9;
    long long terms = 0;
    auto* chk = mult->add_subcommand("check-eta", "numeric eta transformation check");
    chk->add_option("--samples", samples);
    chk->add_option("--tol", tol);
    chk->add_option("--terms", terms, "product factors (0 = automatic)");
    add_common(chk);
    long long lQ = 0, lell = 0;
    std::optional<long long> lt;
    auto* lf = mult->add_subcommand("leading-f", "cusp leading constant, f case");
    lf->add_option("Q", lQ)->required();
    lf->add_option("ell", lell)->required();
    lf->add_option("--t", lt);
    add_common(lf);
    auto* lo = mult->add_subcommand("leading-omega", "cusp leading constant, omega case");
    lo->add_option("Q", lQ)->required();
    lo->add_option("ell", lell)->required();
    lo->add_option("--t", lt);
    add_common(lo);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }
    cfg.format = parse_format(format);

    if (expand->parsed())
        return cmd_expand(cfg, out);
    if (scan->parsed())
        return cmd_scan(cfg, out);
    if (verdict->parsed())
        return cmd_verdict(cfg, vm, vt, vell, out);
    if (witness->parsed())
        return cmd_witness(cfg, wm, wt, wB, wN, wlambda, out);
    if (orbit->parsed())
        return cmd_orbit(cfg, wm, wt, wB, wN, out);
    if (dede->parsed())
        return cmd_dedekind(cfg, dd, dc, dfast, out);
    if (mult->parsed()) {
        for (const std::string which : {"xi", "w", "w1", "w2"})
            if (mult->get_subcommand(which)->parsed())
                return cmd_multiplier_unit(cfg, which, ma, mb, mc, md, out);
        if (chk->parsed())
            return cmd_check_eta(cfg, samples, tol, terms, out);
        if (lf->parsed())
            return cmd_leading(cfg, false, lQ, lell, lt, out);
        if (lo->parsed())
            return cmd_leading(cfg, true, lQ, lell, lt, out);
    }
    throw precondition_error("no command given");
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const precondition_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const hypothesis_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const precision_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

int run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run_command(args, std::cout, std::cerr);
}

} // namespace qcong::cli
