#include "qeuler/errors.hpp"
#include "qeuler/identity.hpp"
#include "qeuler/padic.hpp"
#include "qeuler/qspecial.hpp"
#include "qeuler/report_io.hpp"
#include "qeuler/text_format.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace qeuler;

namespace {

// Rationals cross the boundary as text ("3", "-1/2"); the Python layer
// converts to and from fractions.Fraction.
Rat to_rat(const py::handle& v) { return parse_rat(py::str(v).cast<std::string>()); }

std::vector<std::string> coeff_strings(const CycloRF& a) {
    std::vector<std::string> out;
    for (const auto& c : a.coeffs()) out.push_back(to_string(c));
    return out;
}

py::object json_to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

EulerCache& cache_for(const EulerParams& ep) {
    static Verifier shared;
    return shared.cache(ep);
}

Point make_point(std::uint32_t p, std::uint32_t m, long h, std::size_t n, std::size_t k, long x,
                 std::vector<std::size_t> ns) {
    Point pt;
    pt.p = p;
    pt.m = m;
    pt.h = h;
    pt.n = n;
    pt.k = k;
    pt.x = x;
    pt.ns = std::move(ns);
    return pt;
}

TheoremId theorem_arg(const std::string& name) {
    auto id = parse_theorem(name);
    if (!id) throw ParameterError("unknown theorem '" + name + "'");
    return *id;
}

}  // namespace

PYBIND11_MODULE(_qeuler, m) {
    m.doc() = "Exact and p-adic twisted (h, q)-Euler numbers";

    py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<PoleError>(m, "PoleError", PyExc_ZeroDivisionError);
    py::register_exception<DivisionByZero>(m, "DivisionByZero", PyExc_ZeroDivisionError);
    py::register_exception<NonUnitError>(m, "NonUnitError", PyExc_ArithmeticError);

    py::class_<RatFunc>(m, "RatFunc")
        .def(py::init([](const std::string& text) { return parse_ratfunc(text); }), py::arg("text"))
        .def("__str__", [](const RatFunc& r) { return to_string(r); })
        .def("__repr__", [](const RatFunc& r) { return "RatFunc('" + to_string(r) + "')"; })
        .def("eval", [](const RatFunc& r, const py::handle& x) { return r.eval(to_rat(x)).get_str(); })
        .def("subst_q_inverse", &RatFunc::subst_q_inverse)
        .def("inverse", &RatFunc::inverse)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(py::self == py::self)
        .def("__hash__", [](const RatFunc& r) { return py::hash(py::str(to_string(r))); });

    py::class_<CycloRF>(m, "CycloRF")
        .def(py::init([](const std::string& text, std::uint32_t p, std::uint32_t m_) {
                 CycloRing ring{p, m_};
                 ring.validate();
                 return parse_cyclo(text, ring);
             }),
             py::arg("text"), py::arg("p"), py::arg("m"))
        .def_static("zeta", [](std::uint32_t p, std::uint32_t m_, long e) { return CycloRF::zeta({p, m_}, e); },
                    py::arg("p"), py::arg("m"), py::arg("e") = 1)
        .def_static("constant",
                    [](std::uint32_t p, std::uint32_t m_, const RatFunc& c) { return CycloRF::constant({p, m_}, c); },
                    py::arg("p"), py::arg("m"), py::arg("c"))
        .def_property_readonly("p", [](const CycloRF& a) { return a.ring().p; })
        .def_property_readonly("m", [](const CycloRF& a) { return a.ring().m; })
        .def("coeffs", &coeff_strings, "canonical text of each zeta^j coefficient")
        .def("coeff", [](const CycloRF& a, std::size_t j) { return a.coeff(j); })
        .def("is_zero", &CycloRF::is_zero)
        .def("inverse", &CycloRF::inverse)
        .def("zeta_conj", &CycloRF::zeta_conj)
        .def("subst_q_inverse", &CycloRF::subst_q_inverse)
        .def("eval_at_q",
             [](const CycloRF& a, const py::handle& x) {
                 std::vector<std::string> out;
                 for (const auto& c : a.eval_at_q(to_rat(x)).coeffs()) out.push_back(c.eval(0).get_str());
                 return out;
             })
        .def("__str__", [](const CycloRF& a) { return to_string(a); })
        .def("__repr__", [](const CycloRF& a) { return "CycloRF('" + to_string(a) + "')"; })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self);

    m.def("q_number", &q_number, py::arg("x"));
    m.def("bernstein", &bernstein, py::arg("k"), py::arg("n"), py::arg("x"));

    m.def(
        "euler_number",
        [](std::size_t n, std::uint32_t p, std::uint32_t m_, long h, bool closed) {
            const EulerParams ep{p, m_, h};
            ep.validate();
            return closed ? euler_number_closed(n, cache_for(ep)) : cache_for(ep).number(n);
        },
        py::arg("n"), py::arg("p") = 3, py::arg("m") = 1, py::arg("h") = 1, py::arg("closed") = false,
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "euler_poly",
        [](std::size_t n, long x, std::uint32_t p, std::uint32_t m_, long h, bool closed) {
            const EulerParams ep{p, m_, h};
            ep.validate();
            return closed ? euler_poly_closed(n, x, cache_for(ep)) : euler_poly(n, x, ep, cache_for(ep));
        },
        py::arg("n"), py::arg("x"), py::arg("p") = 3, py::arg("m") = 1, py::arg("h") = 1, py::arg("closed") = false,
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "bernstein_integral",
        [](std::size_t k, std::vector<std::size_t> ns, std::uint32_t p, std::uint32_t m_, long h) {
            const EulerParams ep{p, m_, h};
            ep.validate();
            MomentPoly mp{{Rat(1)}};
            for (std::size_t ni : ns) mp *= bernstein_moment_poly(static_cast<unsigned>(k), static_cast<unsigned>(ni));
            return integrate_moments(mp, ep, cache_for(ep));
        },
        py::arg("k"), py::arg("ns"), py::arg("p") = 3, py::arg("m") = 1, py::arg("h") = 1);

    m.def(
        "verify",
        [](const std::string& theorem, std::uint32_t p, std::uint32_t m_, long h, std::size_t n, std::size_t k,
           long x, std::vector<std::size_t> ns, const std::string& mutant) {
            const auto mut = parse_mutant(mutant);
            if (!mut) throw ParameterError("unknown mutant '" + mutant + "'");
            Verifier v(*mut);
            return json_to_py(report_to_json(v.verify(theorem_arg(theorem), make_point(p, m_, h, n, k, x, ns))));
        },
        py::arg("theorem"), py::arg("p") = 3, py::arg("m") = 1, py::arg("h") = 1, py::arg("n") = 0,
        py::arg("k") = 0, py::arg("x") = 0, py::arg("ns") = std::vector<std::size_t>{}, py::arg("mutant") = "none");

    m.def(
        "run_grid",
        [](std::vector<std::uint32_t> primes, std::vector<std::uint32_t> levels, long h_min, long h_max,
           std::size_t n_max, long x_min, long x_max, std::size_t s_max, std::size_t ni_max,
           std::vector<std::string> theorems, unsigned threads) {
            GridSpec g;
            g.primes = std::move(primes);
            g.levels = std::move(levels);
            g.h_min = h_min;
            g.h_max = h_max;
            g.n_max = n_max;
            g.x_min = x_min;
            g.x_max = x_max;
            g.s_max = s_max;
            g.ni_max = ni_max;
            for (const auto& t : theorems) g.theorems.push_back(theorem_arg(t));
            GridResult res;
            {
                py::gil_scoped_release release;
                res = run_grid(g, {threads, Mutant::None});
            }
            py::dict out;
            out["reports"] = json_to_py(reports_to_json(res));
            out["passed"] = res.total.passed;
            out["failed"] = res.total.failed;
            out["rejected"] = res.total.rejected;
            out["summary"] = summary_table(res);
            return out;
        },
        py::arg("primes") = std::vector<std::uint32_t>{3, 5}, py::arg("levels") = std::vector<std::uint32_t>{0, 1},
        py::arg("h_min") = -2, py::arg("h_max") = 3, py::arg("n_max") = 8, py::arg("x_min") = -3,
        py::arg("x_max") = 4, py::arg("s_max") = 3, py::arg("ni_max") = 4,
        py::arg("theorems") = std::vector<std::string>{}, py::arg("threads") = 1);

    m.def(
        "fermionic_integral_truncated",
        [](std::size_t n, std::uint32_t p, std::uint32_t m_, long h, std::uint32_t N, std::uint32_t K,
           std::optional<std::uint64_t> q0) {
            const PadicConfig cfg{p, K, m_, q0.value_or(std::uint64_t{1} + p)};
            return fermionic_integral_truncated(n, {p, m_, h}, cfg, N).coeffs();
        },
        py::arg("n"), py::arg("p") = 3, py::arg("m") = 1, py::arg("h") = 1, py::arg("N") = 3, py::arg("K") = 12,
        py::arg("q0") = py::none());
    m.def(
        "specialize",
        [](const CycloRF& a, std::uint32_t K, std::optional<std::uint64_t> q0) {
            const PadicConfig cfg{a.ring().p, K, a.ring().m, q0.value_or(std::uint64_t{1} + a.ring().p)};
            return specialize(a, cfg).coeffs();
        },
        py::arg("a"), py::arg("K") = 12, py::arg("q0") = py::none());
    m.def(
        "numeric_crosscheck",
        [](std::size_t n_max, std::uint32_t p, std::uint32_t m_, long h, std::vector<std::uint32_t> levels,
           std::uint32_t K, std::optional<std::uint64_t> q0) {
            const PadicConfig cfg{p, K, m_, q0.value_or(std::uint64_t{1} + p)};
            if (levels.empty()) levels = {m_ + 1, m_ + 2, m_ + 3};
            return json_to_py(crosscheck_to_json(numeric_crosscheck(n_max, {p, m_, h}, cfg, levels)));
        },
        py::arg("n_max"), py::arg("p") = 3, py::arg("m") = 1, py::arg("h") = 1,
        py::arg("levels") = std::vector<std::uint32_t>{}, py::arg("K") = 12, py::arg("q0") = py::none());

    m.attr("THEOREMS") = [] {
        py::list l;
        for (TheoremId id : kAllTheorems) l.append(std::string(theorem_name(id)));
        return l;
    }();
}
