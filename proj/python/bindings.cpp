#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hardy/arith.hpp"
#include "hardy/equidist.hpp"
#include "hardy/errors.hpp"
#include "hardy/modular.hpp"
#include "hardy/spectral.hpp"
#include "hardy/sums.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace hardy;

namespace {

// r crosses the boundary as an integer pair, never as a float
Rational ratio(std::pair<std::int64_t, std::int64_t> r) { return Rational(r.first, r.second); }

py::tuple as_pair(const Rational& q) { return py::make_tuple(q.num(), q.den()); }

py::dict weyl_dict(const WeylSeries& s) {
    py::dict d;
    d["r"] = as_pair(s.r);
    d["n"] = s.n;
    d["variant"] = to_string(s.variant);
    d["checkpoints"] = s.checkpoints;
    d["partials"] = s.partials;
    d["counts"] = s.counts;
    d["normalized"] = s.normalized;
    return d;
}

py::dict dist_dict(const DistTable& t) {
    py::dict d;
    d["N"] = t.N;
    d["m"] = t.m;
    d["variant"] = to_string(t.variant);
    d["counts"] = t.counts;
    d["bins"] = t.bins;
    std::vector<std::vector<std::uint64_t>> joint;
    for (std::int64_t b = 0; b < t.bins; ++b) {
        joint.emplace_back();
        for (std::int64_t r = 0; r < t.m; ++r) joint.back().push_back(t.joint_at(b, r));
    }
    d["joint"] = joint;
    d["total"] = t.total;
    const auto st = uniformity_stats(t);
    d["chi_square"] = st.chi_square;
    d["max_rel_dev"] = st.max_rel_dev;
    d["tv_distance"] = st.tv_distance;
    return d;
}

EisensteinParams params(std::pair<std::int64_t, std::int64_t> r, cplx s, cplx z, std::int64_t c_max,
                        std::int64_t d_span, std::int64_t n_max, unsigned threads) {
    EisensteinParams p;
    p.r = ratio(r);
    p.s = s;
    p.z = z;
    p.c_max = c_max;
    p.d_span = d_span;
    p.n_max = n_max;
    p.threads = threads;
    return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hardy sums, theta multipliers, Weyl sums and Eisenstein series numerics";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

    m.def("hardy_S", &hardy_S_fast, py::arg("d"), py::arg("c"));
    m.def("hardy_S4", &hardy_S4_fast, py::arg("d"), py::arg("c"));
    m.def("hardy_S_direct", &hardy_S, py::arg("d"), py::arg("c"));
    m.def("hardy_S4_direct", &hardy_S4, py::arg("d"), py::arg("c"));
    m.def(
        "dedekind_sum", [](std::int64_t d, std::int64_t c) { return as_pair(dedekind_sum(d, c)); }, py::arg("d"),
        py::arg("c"), "s(d, c) as (numerator, denominator)");

    m.def("phi_theta", py::overload_cast<std::uint64_t>(&phi_theta), py::arg("c"));
    m.def("phi_theta_count", py::overload_cast<std::uint64_t>(&phi_theta_count), py::arg("N"));
    m.def("ramanujan_direct", &ramanujan_direct, py::arg("c"), py::arg("n"));
    m.def("ramanujan_von_sterneck", &ramanujan_von_sterneck, py::arg("c"), py::arg("n"));

    m.def(
        "weyl_sum",
        [](std::int64_t N, std::int64_t n, std::pair<std::int64_t, std::int64_t> r, std::vector<std::int64_t> cps,
           const std::string& variant, unsigned threads) {
            WeylSeries s;
            {
                py::gil_scoped_release release;
                s = weyl_sum(N, n, ratio(r), std::move(cps), parse_variant(variant), threads);
            }
            return weyl_dict(s);
        },
        py::arg("N"), py::arg("n"), py::arg("r"), py::arg("checkpoints") = std::vector<std::int64_t>{},
        py::arg("variant") = "S", py::arg("threads") = 1);

    m.def(
        "lambda_split",
        [](std::int64_t N) {
            const auto l = lambda_split(N);
            return py::make_tuple(as_pair(l.lambda1), as_pair(l.lambda2));
        },
        py::arg("N"));

    m.def(
        "distribution_table",
        [](std::int64_t N, std::int64_t mod, const std::string& variant, std::int64_t bins, unsigned threads) {
            DistTable t;
            {
                py::gil_scoped_release release;
                t = distribution_table(N, mod, parse_variant(variant), bins, threads);
            }
            return dist_dict(t);
        },
        py::arg("N"), py::arg("m"), py::arg("variant") = "S", py::arg("bins") = 1, py::arg("threads") = 1);

    m.def(
        "character_sum",
        [](std::int64_t N, std::int64_t mod, std::int64_t j, std::int64_t n, const std::string& variant) {
            return character_sum(N, mod, j, n, parse_variant(variant));
        },
        py::arg("N"), py::arg("m"), py::arg("j"), py::arg("n"), py::arg("variant") = "S");

    m.def("theta", &theta, py::arg("z"), py::arg("tol") = 1e-15);
    m.def("theta4", &theta4, py::arg("z"), py::arg("tol") = 1e-15);
    m.def(
        "nu_r",
        [](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::pair<std::int64_t, std::int64_t> r) {
            return nu_r(GroupElement(a, b, c, d), ratio(r));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("r"));
    m.def(
        "verify_theta_transform",
        [](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, cplx z, double tol) {
            return verify_theta_transform(GroupElement(a, b, c, d), z, tol).max();
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("z"), py::arg("tol") = 1e-15);

    m.def("gamma", &gamma_complex, py::arg("s"));
    m.def("whittaker_W", &whittaker_W, py::arg("kappa"), py::arg("mu"), py::arg("x"));

    m.def(
        "z_partial",
        [](std::pair<std::int64_t, std::int64_t> r, std::int64_t n, cplx s, std::int64_t c_max) {
            const auto p = z_partial(ratio(r), n, s, c_max);
            return py::make_tuple(p.value, p.tail_bound);
        },
        py::arg("r"), py::arg("n"), py::arg("s"), py::arg("c_max"));

    m.def(
        "eisenstein_direct",
        [](std::pair<std::int64_t, std::int64_t> r, cplx s, cplx z, std::int64_t c_max, std::int64_t d_span,
           unsigned threads) {
            EisensteinValue v;
            {
                py::gil_scoped_release release;
                v = eisenstein_direct(params(r, s, z, c_max, d_span, 0, threads));
            }
            return py::make_tuple(v.value, v.tail_bound);
        },
        py::arg("r") = std::pair<std::int64_t, std::int64_t>{1, 8}, py::arg("s") = cplx(2.0, 0.5),
        py::arg("z") = cplx(0.2, 1.0), py::arg("c_max") = 2000, py::arg("d_span") = 50, py::arg("threads") = 1);

    m.def(
        "eisenstein_fourier",
        [](std::pair<std::int64_t, std::int64_t> r, cplx s, cplx z, std::int64_t c_max, std::int64_t n_max) {
            return eisenstein_fourier(params(r, s, z, c_max, 50, n_max, 1));
        },
        py::arg("r") = std::pair<std::int64_t, std::int64_t>{1, 8}, py::arg("s") = cplx(2.0, 0.5),
        py::arg("z") = cplx(0.2, 1.0), py::arg("c_max") = 2000, py::arg("n_max") = 8);

    m.def(
        "perron_partial",
        [](std::pair<std::int64_t, std::int64_t> r, std::int64_t n, double N, double T, double alpha) {
            const auto res = perron_partial(ratio(r), n, N, T, alpha);
            return py::make_tuple(res.value, res.exact, res.discrepancy);
        },
        py::arg("r"), py::arg("n"), py::arg("N"), py::arg("T") = 200.0, py::arg("alpha") = 1.25);

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
