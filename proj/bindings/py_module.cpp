// Python bindings for the main operations. Exact integers and rationals
// cross the boundary as python ints / Fractions; Real values as doubles.

#include "melonlab/gauss.hpp"
#include "melonlab/limits.hpp"
#include "melonlab/melon.hpp"
#include "melonlab/oracle.hpp"
#include "melonlab/real.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

namespace py = pybind11;
using namespace melonlab;

namespace {

py::object to_py_int(const BigInt& v) {
    return py::module_::import("builtins").attr("int")(v.get_str());
}

py::object to_py_fraction(const Rational& q) {
    static py::object fraction_cls =
        py::module_::import("fractions").attr("Fraction");
    return fraction_cls(q.get_str());
}

MelonConfig make_cfg(unsigned p, unsigned long n) {
    MelonConfig cfg{p, n};
    cfg.validate();
    return cfg;
}

py::dict dist_to_dict(const ExactDistribution& d) {
    py::dict out;
    py::list support, counts, mass;
    for (long v : d.support) support.append(v);
    for (const auto& c : d.count) counts.append(to_py_int(c));
    for (const auto& m : d.mass) mass.append(to_py_fraction(m));
    out["support"] = support;
    out["count"] = counts;
    out["mass"] = mass;
    out["total"] = to_py_int(d.total_count);
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact and asymptotic statistics of p-watermelons";

    init_precision_from_env();

    m.def("set_precision", &set_precision_digits, py::arg("digits"),
          "Set the working precision in decimal digits (floor 30)");

    m.def(
        "count_total",
        [](unsigned p, unsigned long n) { return to_py_int(count_total(make_cfg(p, n))); },
        py::arg("p"), py::arg("n"), "Total number of p-watermelons of length 2n");
    m.def(
        "count_height_lt",
        [](unsigned p, unsigned long n, long h) {
            return to_py_int(count_height_lt(make_cfg(p, n), h));
        },
        py::arg("p"), py::arg("n"), py::arg("h"), "Watermelons of height < h");
    m.def(
        "count_strip",
        [](unsigned p, unsigned long n, long h, long k) {
            StripBound b{h, k};
            b.validate();
            return to_py_int(count_strip(make_cfg(p, n), b));
        },
        py::arg("p"), py::arg("n"), py::arg("h"), py::arg("k"),
        "Watermelons with height < h and depth > -k");

    m.def(
        "height_distribution",
        [](unsigned p, unsigned long n) {
            return dist_to_dict(height_distribution(make_cfg(p, n)));
        },
        py::arg("p"), py::arg("n"),
        "Exact height law: dict with support/count/mass(Fractions)/total");
    m.def(
        "range_distribution",
        [](unsigned p, unsigned long n) {
            return dist_to_dict(range_distribution(make_cfg(p, n)));
        },
        py::arg("p"), py::arg("n"), "Exact range law, same shape");
    m.def(
        "height_moment",
        [](unsigned p, unsigned long n, unsigned s) {
            return to_py_fraction(height_moment_exact(make_cfg(p, n), s));
        },
        py::arg("p"), py::arg("n"), py::arg("s"), "Exact E(H^s) as a Fraction");

    m.def(
        "moment_asymptotic",
        [](unsigned p, unsigned s, unsigned long n, bool refined) {
            const Real v = refined ? moment_asymptotic_corrected(p, s, n)
                                   : moment_asymptotic(p, s, n);
            return v.convert_to<double>();
        },
        py::arg("p"), py::arg("s"), py::arg("n"), py::arg("refined") = false,
        "Two-term asymptotic for E(H^s)");
    m.def(
        "table1_coefficient",
        [](unsigned p, unsigned s) {
            return table1_coefficient(p, s).to_real().convert_to<double>();
        },
        py::arg("p"), py::arg("s"), "Leading coefficient of E(H^s) n^{-s/2}");

    m.def(
        "height_limit_cdf",
        [](unsigned p, double t) {
            return height_limit_cdf(p, Real(t)).convert_to<double>();
        },
        py::arg("p"), py::arg("t"), "Limiting CDF of (H+1)/sqrt(n)");
    m.def(
        "range_limit_cdf",
        [](unsigned p, double t, double eps) {
            return range_limit_cdf(p, Real(t), eps).convert_to<double>();
        },
        py::arg("p"), py::arg("t"), py::arg("eps") = 1e-10,
        "Limiting CDF of (R+1)/sqrt(n)");

    m.def(
        "brute_force_stats",
        [](unsigned p, unsigned long n) {
            const MelonStats st = stats(make_cfg(p, n));
            py::dict out;
            out["total"] = to_py_int(st.total);
            py::dict joint;
            for (const auto& [hd, c] : st.joint)
                joint[py::make_tuple(hd.first, hd.second)] = to_py_int(c);
            out["joint"] = joint;
            return out;
        },
        py::arg("p"), py::arg("n"),
        "Exhaustive enumeration: total and joint (height, depth) counts");
}
