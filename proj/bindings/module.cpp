#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dstar/errors.hpp"
#include "dstar/json_io.hpp"
#include "dstar/verify.hpp"
#include "dstar/zeta.hpp"

namespace py = pybind11;
using namespace dstar;

namespace {

py::object py_int(const Int& z) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::object py_fraction(const Rat& q) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(q.get_str());
}

py::dict series_dict(const std::map<int, Rat>& coeffs) {
    py::dict d;
    for (const auto& [deg, c] : coeffs) d[py::int_(deg)] = py_fraction(c);
    return d;
}

GroupTag group_of(const std::string& name) {
    if (name == "x2") return GroupTag::X2;
    if (name == "x3") return GroupTag::X3;
    throw InvalidArgs("group must be x2 or x3");
}

ThetaMode mode_of(const std::string& name) {
    if (name == "formula") return ThetaMode::Formula;
    if (name == "oracle") return ThetaMode::Oracle;
    throw InvalidArgs("mode must be formula or oracle");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Local pro-isomorphic zeta functions of the D* groups for x^2 and x^3";

    // counting
    m.def("f_count", [](long p, int alpha, int beta, int n, const std::string& mode) {
              return py_int(mode == "brute" ? f_brute(p, alpha, beta, n)
                                            : f_fast(p, alpha, beta, n));
          },
          py::arg("p"), py::arg("alpha"), py::arg("beta"), py::arg("n"),
          py::arg("mode") = "fast",
          "count solutions of p^alpha xi^2 + p^beta eta zeta = 0 mod p^n");
    m.def("pair_count",
          [](long p, int M, long c) { return py_int(pair_count(p, M, Int(c))); },
          py::arg("p"), py::arg("M"), py::arg("c"));
    m.def("f_series_coefficients", [](const std::string& kind, int alpha, int order, long p) {
              TruncatedSeries s =
                  F_series(kind == "A0" ? FKind::A0 : FKind::ZeroA, alpha, order);
              return series_dict(eval_coefficients(s, p));
          },
          py::arg("kind"), py::arg("alpha"), py::arg("order"), py::arg("p"));

    // theta
    m.def("theta_case", [](long p, int k, int mm, int n) {
              return std::string(case_name(classify(ThetaArgs(p, k, mm, n))));
          },
          py::arg("p"), py::arg("k"), py::arg("m"), py::arg("n"));
    m.def("theta", [](long p, int k, int mm, int n, const std::string& mode) {
              return py_fraction(theta_full(ThetaArgs(p, k, mm, n), mode_of(mode)));
          },
          py::arg("p"), py::arg("k"), py::arg("m"), py::arg("n"),
          py::arg("mode") = "formula");
    m.def("theta_tilde", [](long p, int k, int mm, int n, const std::string& mode) {
              ThetaArgs args(p, k, mm, n);
              return py_fraction(mode_of(mode) == ThetaMode::Formula
                                     ? theta_tilde_formula(args)
                                     : theta_tilde_oracle(args));
          },
          py::arg("p"), py::arg("k"), py::arg("m"), py::arg("n"),
          py::arg("mode") = "formula");

    // cones
    m.def("cone_partition_holds", [](int bound) {
        return verify_partition(
            {&cone_C134(), &cone_C145p(), &cone_C456p(), &cone_C462p()}, cone_C123(),
            bound);
    },
          py::arg("bound") = 12);
    m.def("case_of", [](int e1, int e2, int e3) {
        return std::string(case_name(case_of({e1, e2, e3})));
    });

    // zeta
    m.def("zeta_closed", [](const std::string& group, const std::string& format) {
              FactoredRational z = group_of(group) == GroupTag::X2 ? zeta_x2_closed()
                                                                   : zeta_x3_closed_s();
              if (format == "json") return rational_to_json(z);
              if (format == "latex") return rational_latex(z);
              return z.str();
          },
          py::arg("group"), py::arg("format") = "plain");
    m.def("zeta_series", [](const std::string& group, long p, int order) {
              FactoredRational z = group_of(group) == GroupTag::X2 ? zeta_x2_closed()
                                                                   : zeta_x3_closed_s();
              return series_dict(eval_coefficients(expand(z, order), p));
          },
          py::arg("group"), py::arg("p"), py::arg("order"));
    m.def("zeta_series_bruhat", [](const std::string& group, long p, int order,
                                   const std::string& mode) {
              return series_dict(eval_coefficients(
                  series_oracle(group_of(group), p, order, mode_of(mode)), p));
          },
          py::arg("group"), py::arg("p"), py::arg("order"), py::arg("mode") = "formula");
    m.def("zeta_assembled_equals_closed", [](const std::string& group) {
        if (group_of(group) == GroupTag::X2)
            return rational_eq(zeta_x2_assembled(), zeta_x2_closed());
        return rational_eq(zeta_x3_assemble().z, zeta_x3_closed_X());
    });
    m.def("functional_equation", [](const std::string& group) {
        FunEq fe = funeq_check(group_of(group));
        return py::make_tuple(fe.parity, fe.b, fe.c);
    });

    // verification suites
    m.def("verify", [](const std::string& suite, bool deep) {
              py::list out;
              for (const auto& r : run_suite(suite, deep)) {
                  py::dict d;
                  d["name"] = r.name;
                  d["pass"] = r.pass;
                  d["skipped"] = r.skipped;
                  d["detail"] = r.detail;
                  d["seconds"] = r.seconds;
                  out.append(d);
              }
              return out;
          },
          py::arg("suite") = "all", py::arg("deep") = false);
}
