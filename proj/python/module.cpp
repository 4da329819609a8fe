#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcong/admissibility.hpp"
#include "qcong/congruence.hpp"
#include "qcong/dedekind.hpp"
#include "qcong/errors.hpp"
#include "qcong/multipliers.hpp"
#include "qcong/sequences.hpp"
#include "qcong/witness.hpp"

namespace py = pybind11;
using namespace qcong;

namespace {

py::object to_pyint(const Int& z) {
    PyObject* p = PyLong_FromString(z.get_str().c_str(), nullptr, 10);
    if (!p)
        throw py::error_already_set();
    return py::reinterpret_steal<py::object>(p);
}

Int from_pyint(const py::object& obj) {
    return Int(py::str(obj).cast<std::string>());
}

py::object to_fraction(const Rational& r) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(r.get_str());
}

Mat2 mat_from(long long a, long long b, long long c, long long d) {
    return Mat2{to_int(a), to_int(b), to_int(c), to_int(d)};
}

py::dict verdict_dict(const ProgressionVerdict& v) {
    py::dict d;
    d["theorem"] = to_string(v.theorem);
    d["m"] = to_pyint(v.m);
    d["t"] = to_pyint(v.t);
    d["ell"] = to_pyint(v.ell);
    d["outcome"] = to_string(v.outcome);
    d["reason"] = to_string(v.reason);
    d["symbol_zero"] = v.symbol_zero;
    return d;
}

QSeries build_series(const std::string& selector, long long N, std::uint64_t mod,
                     long long level) {
    const Preset p = make_preset(selector, level);
    return p.make(N, mod ? Ring::mod(mod) : Ring::exact());
}

} // namespace

PYBIND11_MODULE(_qcong, m) {
    m.doc() = "exact q-series congruence toolkit";

    py::register_exception<precondition_error>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<hypothesis_error>(m, "HypothesisError", PyExc_ValueError);
    py::register_exception<precision_error>(m, "PrecisionError", PyExc_ValueError);
    py::register_exception<diagnostic_error>(m, "DiagnosticError", PyExc_RuntimeError);

    m.def("jacobi",
          [](const py::object& a, const py::object& n) {
              return jacobi(from_pyint(a), from_pyint(n));
          },
          py::arg("a"), py::arg("n"));
    m.def("inv_mod",
          [](const py::object& a, const py::object& mmod) {
              return to_pyint(inv_mod(from_pyint(a), from_pyint(mmod)));
          },
          py::arg("a"), py::arg("m"));
    m.def("is_prime",
          [](const py::object& n) { return is_prime(from_pyint(n)); });

    m.def("dedekind_sum",
          [](const py::object& d, const py::object& c) {
              return to_fraction(dedekind_sum(from_pyint(d), from_pyint(c)));
          });
    m.def("dedekind_sum_fast",
          [](const py::object& d, const py::object& c) {
              return to_fraction(dedekind_sum_fast(from_pyint(d), from_pyint(c)));
          });
    m.def("lemma22_defect",
          [](long long mm, long long lambda, long long a, long long b, long long c,
             long long d) {
              return to_fraction(lemma22_defect(to_int(mm), to_int(lambda), mat_from(a, b, c, d)));
          });

    m.def("expand",
          [](const std::string& selector, long long N, std::uint64_t mod,
             long long level) {
              const QSeries s = build_series(selector, N, mod, level);
              py::list out;
              for (long long n = 0; n <= N; ++n)
                  out.append(to_pyint(s.coeff(n)));
              return out;
          },
          py::arg("selector"), py::arg("N"), py::arg("mod") = 0, py::arg("level") = 0,
          "coefficients a(0..N) of a named preset");

    m.def("series_offset24",
          [](const std::string& selector, long long level) {
              const Preset p = make_preset(selector, level);
              return to_fraction(Rational(p.make(0, Ring::exact()).offset24()));
          },
          py::arg("selector"), py::arg("level") = 0);

    m.def("check_progression",
          [](const std::string& selector, long long mm, long long t, long long ell,
             long long N, long long level) {
              const QSeries s = build_series(selector, mm * N + mm, ell, level);
              const ScanResult r = check_progression(s, mm, t, ell, N);
              py::dict d;
              d["holds"] = r.holds();
              d["bound"] = r.bound;
              d["value"] = to_pyint(r.value);
              d["checked"] = r.checked;
              return d;
          },
          py::arg("selector"), py::arg("m"), py::arg("t"), py::arg("ell"),
          py::arg("N"), py::arg("level") = 0);

    m.def("scan",
          [](const std::string& selector, long long ell, long long mmax, long long N,
             long long level) {
              const QSeries s = build_series(selector, mmax * (N + 1), ell, level);
              py::list out;
              for (const ScanResult& r : scan_range(s, ell, mmax, N)) {
                  py::dict d;
                  d["m"] = r.m;
                  d["t"] = r.t;
                  d["ell"] = r.ell;
                  d["checked"] = r.checked;
                  out.append(d);
              }
              return out;
          },
          py::arg("selector"), py::arg("ell"), py::arg("mmax"), py::arg("N"),
          py::arg("level") = 0, "surviving progressions, empirical to depth N");

    m.def("good_f", &good_f);
    m.def("good_omega", &good_omega);

    m.def("m_B", [](const py::object& mm, const py::object& B) {
        return to_pyint(m_B(from_pyint(mm), from_pyint(B)));
    });
    m.def("Q_mB", [](const py::object& mm, const py::object& B) {
        return to_pyint(Q_mB(from_pyint(mm), from_pyint(B)));
    });
    m.def("andrews_condition", [](long long ell, long long t) {
        return andrews_condition(to_int(ell), to_int(t));
    });

    m.def("verdict_f", [](long long mm, long long t, long long ell) {
        return verdict_dict(verdict_f(to_int(mm), to_int(t), to_int(ell)));
    });
    m.def("verdict_omega", [](long long mm, long long t, long long ell) {
        return verdict_dict(verdict_omega(to_int(mm), to_int(t), to_int(ell)));
    });
    m.def("verdict_eta",
          [](const std::string& spec, long long mm, long long t, long long ell,
             long long level) {
              return verdict_dict(verdict_eta(EtaQuotientSpec::parse(spec, level),
                                              to_int(mm), to_int(t), to_int(ell)));
          },
          py::arg("spec"), py::arg("m"), py::arg("t"), py::arg("ell"),
          py::arg("level") = 0);
    m.def("verdict_general",
          [](long long B, long long N, long long n0, long long mm, long long t,
             long long ell) {
              return verdict_dict(
                  verdict_general(to_int(B), to_int(N), to_int(n0), to_int(mm), to_int(t), to_int(ell)));
          });

    m.def("radu_witness",
          [](long long mm, long long t, long long B, long long N, long long lambda) {
              const WitnessResult w = radu_witness(mm, t, B, N, lambda);
              py::dict d;
              d["a"] = to_pyint(w.a);
              d["lambda"] = w.lambda;
              d["Q"] = to_pyint(w.Q);
              d["verified"] = verify_witness(mm, t, B, N, w);
              return d;
          },
          py::arg("m"), py::arg("t"), py::arg("B"), py::arg("N"),
          py::arg("lambda") = 0);
    m.def("t_orbit", [](long long mm, long long t, long long B, long long N) {
        py::list out;
        for (const long long v : t_orbit(mm, t, B, N))
            out.append(v);
        return out;
    });
    m.def("mock_level", &mock_level);
    m.def("weak_level", &weak_level);

    m.def("xi", [](long long a, long long b, long long c, long long d) {
        return to_fraction(xi(mat_from(a, b, c, d)).exponent());
    });
    m.def("w", [](long long a, long long b, long long c, long long d) {
        return to_fraction(w_of(mat_from(a, b, c, d)).exponent());
    });
    m.def("w1", [](long long a, long long b, long long c, long long d) {
        return to_fraction(w1_of(mat_from(a, b, c, d)).exponent());
    });
    m.def("w2", [](long long a, long long b, long long c, long long d) {
        return to_fraction(w2_of(mat_from(a, b, c, d)).exponent());
    });

    m.def("verify_eta",
          [](long long a, long long b, long long c, long long d, long long terms,
             double tol) {
              const EtaCheck chk =
                  verify_eta_numeric(mat_from(a, b, c, d),
                                     std::complex<long double>(0.25L, 0.75L), terms,
                                     static_cast<long double>(tol));
              py::dict out;
              out["residual"] = static_cast<double>(chk.residual);
              out["terms"] = chk.terms;
              out["ok"] = chk.ok();
              return out;
          },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"),
          py::arg("terms") = 0, py::arg("tol") = 1e-9);

    auto leading_dict = [](const LeadingConstant& lc, long long Q, long long ell,
                           long long t) {
        py::dict d;
        d["Q"] = Q;
        d["ell"] = ell;
        d["t"] = t;
        d["unit_exponent"] = to_fraction(lc.unit.exponent());
        d["radical"] = to_pyint(lc.radical);
        d["order_check"] = lc.unit.pow(48 * to_int(Q) * to_int(ell) * to_int(ell)).is_one();
        return d;
    };
    m.def("leading_f",
          [leading_dict](long long Q, long long ell, py::object t_obj) {
              const long long t = t_obj.is_none() ? leading_f_default_t(Q, ell)
                                                  : t_obj.cast<long long>();
              return leading_dict(leading_constant_f(Q, ell, t), Q, ell, t);
          },
          py::arg("Q"), py::arg("ell"), py::arg("t") = py::none());
    m.def("leading_omega",
          [leading_dict](long long Q, long long ell, py::object t_obj) {
              const long long t = t_obj.is_none() ? leading_omega_default_t(Q, ell)
                                                  : t_obj.cast<long long>();
              return leading_dict(leading_constant_omega(Q, ell, t), Q, ell, t);
          },
          py::arg("Q"), py::arg("ell"), py::arg("t") = py::none());
}
