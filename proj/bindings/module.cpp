// pybind11 bindings for the core library.

#include "plustrace/bounds.hpp"
#include "plustrace/cache.hpp"
#include "plustrace/kloosterman.hpp"
#include "plustrace/modeval.hpp"
#include "plustrace/weyl.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace plustrace;

namespace {

py::int_ to_pyint(const mpz_class& z) {
    std::string s = z.get_str();
    PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::list faber_poly_py(i64 m) {
    py::list out;
    for (const mpz_class& c : faber_poly(m)) out.append(to_pyint(c));
    return out;
}

py::list j_coefficients(i64 N) {
    py::list out;
    QExpansion q = j_qexp(N);
    for (i64 n = -1; n <= N; ++n) out.append(to_pyint(q.c(n)));
    return out;
}

py::dict report_dict(const BoundReport& r) {
    py::dict d;
    d["name"] = r.name;
    d["params"] = r.params;
    d["lhs"] = r.lhs;
    d["rhs"] = r.rhs;
    d["margin"] = r.margin;
    d["pass"] = r.pass;
    d["certified"] = r.certified;
    return d;
}

FactoredDiscriminant fd_args(i64 D, i64 d) {
    if (d == 0 || D % d != 0) throw domain_error("invalid factorization");
    FactoredDiscriminant fd{D, d, D / d};
    if (!fd.valid()) throw domain_error("invalid factorization");
    return fd;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "plus-space Kloosterman sums, quadratic Weyl sums and traces of singular moduli";

    py::register_exception<domain_error>(mod, "DomainError", PyExc_ValueError);

    // arith
    mod.def("kronecker", &kronecker, py::arg("a"), py::arg("n"));
    mod.def("tau", &tau, py::arg("n"));
    mod.def("sigma1", &sigma1, py::arg("m"));
    mod.def("is_discriminant", &is_discriminant, py::arg("D"));
    mod.def("is_fundamental", &is_fundamental, py::arg("d"));
    mod.def("factorizations", [](i64 D) {
        py::list out;
        for (const auto& fd : factorizations(D)) out.append(py::make_tuple(fd.d, fd.d_prime));
        return out;
    }, py::arg("D"), "factorizations D = d*d' as (d, d') tuples, d fundamental");
    mod.def("zeta_one_plus", py::overload_cast<i64, i64>(&zeta_one_plus), py::arg("num"), py::arg("den"));
    mod.def("ell_constant", &ell_constant, py::arg("num"), py::arg("den"));

    // quadratic forms
    py::class_<QuadForm>(mod, "QuadForm")
        .def(py::init([](i64 a, i64 b, i64 c) { return QuadForm{a, b, c}; }), py::arg("a"), py::arg("b"),
             py::arg("c"))
        .def_readonly("a", &QuadForm::a)
        .def_readonly("b", &QuadForm::b)
        .def_readonly("c", &QuadForm::c)
        .def("disc", &QuadForm::disc)
        .def("content", &QuadForm::content)
        .def("is_reduced", &QuadForm::is_reduced)
        .def("__repr__", [](const QuadForm& q) {
            return "QuadForm(" + std::to_string(q.a) + ", " + std::to_string(q.b) + ", " +
                   std::to_string(q.c) + ")";
        });
    mod.def("reduce", &reduce, py::arg("form"));
    mod.def("reduced_forms", &reduced_forms, py::arg("D"));
    mod.def("class_number", &class_number, py::arg("D"));
    mod.def("weighted_class_number_six", &weighted_class_number_six, py::arg("D"));
    mod.def("omega", &omega, py::arg("form"));
    mod.def("genus_char", &genus_char, py::arg("d"), py::arg("form"));
    mod.def("forms_in_rectangle", &forms_in_rectangle, py::arg("D"), py::arg("Y"));
    mod.def("cm_point", [](const QuadForm& q) {
        CMPoint p = cm_point(q);
        return std::complex<double>(p.re(), p.im());
    }, py::arg("form"));

    // Kloosterman sums
    mod.def("plus_admissible", &plus_admissible, py::arg("k2"), py::arg("m"));
    mod.def("s_plus", [](int k2, i64 m, i64 n, i64 c) {
        PlusKloostermanValue v = s_plus(k2, m, n, c);
        py::dict d;
        d["value"] = v.value;
        d["err"] = v.err;
        d["imag_residue"] = v.imag_residue;
        return d;
    }, py::arg("k2"), py::arg("m"), py::arg("n"), py::arg("c"));
    mod.def("weil_rhs", &weil_rhs, py::arg("m"), py::arg("n"), py::arg("c"));
    mod.def("partial_sum", [](i64 m, i64 n, double x) {
        double err = 0;
        double v = partial_sum(m, n, x, &err);
        return py::make_tuple(v, err);
    }, py::arg("m"), py::arg("n"), py::arg("x"));
    mod.def("theorem51_rhs", [](i64 m, i64 n, double x, i64 num, i64 den) {
        return theorem51_rhs(m, n, x, delta_table(num, den));
    }, py::arg("m"), py::arg("n"), py::arg("x"), py::arg("delta_num"), py::arg("delta_den"));
    mod.def("check_theorem51", [](i64 m, i64 n, double x, i64 num, i64 den) {
        return report_dict(check_theorem51(m, n, x, delta_table(num, den)));
    }, py::arg("m"), py::arg("n"), py::arg("x"), py::arg("delta_num"), py::arg("delta_den"));
    mod.def("zeta_partial", [](i64 m, i64 n, std::complex<double> s, i64 c_max) {
        auto [v, tail] = zeta_partial(m, n, s, c_max);
        return py::make_tuple(v, tail);
    }, py::arg("m"), py::arg("n"), py::arg("s"), py::arg("c_max"));

    // Weyl sums
    mod.def("weyl_direct", [](i64 m, i64 D, i64 d, i64 c) {
        WeylSumValue v = weyl_direct(m, fd_args(D, d), c);
        return py::make_tuple(v.value, v.err);
    }, py::arg("m"), py::arg("D"), py::arg("d"), py::arg("c"));
    mod.def("weyl_kohnen", [](i64 m, i64 D, i64 d, i64 c) {
        WeylSumValue v = weyl_kohnen(m, fd_args(D, d), c);
        return py::make_tuple(v.value, v.err);
    }, py::arg("m"), py::arg("D"), py::arg("d"), py::arg("c"));

    // modular evaluation
    mod.def("j_coefficients", &j_coefficients, py::arg("N"),
            "integer coefficients c(-1)..c(N) of the j q-expansion");
    mod.def("faber_poly", &faber_poly_py, py::arg("m"), "coefficients degree 0..m");
    mod.def("eval_j", [](std::complex<double> z, double target_err) {
        BigComplex zz(BigFloat(z.real(), 128), BigFloat(z.imag(), 128));
        EvalResult r = eval_j(zz, target_err);
        return py::make_tuple(std::complex<double>(r.value.re.to_double(), r.value.im.to_double()), r.err);
    }, py::arg("z"), py::arg("target_err") = 1e-12);
    mod.def("trace", [](i64 m, i64 D, i64 d) {
        TraceReport t = trace(m, fd_args(D, d));
        py::dict out;
        out["value"] = t.value.str(30);
        out["err"] = t.err;
        out["rounded"] = to_pyint(t.rounded);
        out["round_gap"] = t.round_gap;
        out["certified"] = t.certified;
        out["err_certified"] = t.err_certified;
        return out;
    }, py::arg("m"), py::arg("D"), py::arg("d") = 1);
    mod.def("rectangle_sum", [](i64 m, i64 D, i64 d, double Y, bool conjugate) {
        RectangleSum r = rectangle_sum(m, fd_args(D, d), Y, conjugate);
        return py::make_tuple(r.value.to_double(), r.err);
    }, py::arg("m"), py::arg("D"), py::arg("d"), py::arg("Y"), py::arg("conjugate") = true);

    // bounds
    mod.def("check_theorem1", [](i64 m, i64 D, i64 d, i64 num, i64 den) {
        return report_dict(check_theorem1(m, fd_args(D, d), delta_table(num, den)));
    }, py::arg("m"), py::arg("D"), py::arg("d"), py::arg("delta_num"), py::arg("delta_den"));
    mod.def("check_theorem2", [](i64 m, i64 D, i64 d, double Y, i64 num, i64 den) {
        TheoremParams p{m, fd_args(D, d), Y, delta_table(num, den)};
        return report_dict(check_theorem2(p));
    }, py::arg("m"), py::arg("D"), py::arg("d"), py::arg("Y"), py::arg("delta_num"), py::arg("delta_den"));
    mod.def("corollary3_threshold", [](i64 m, i64 D, i64 d) {
        return corollary3_threshold(m, fd_args(D, d));
    }, py::arg("m"), py::arg("D"), py::arg("d"));
    mod.def("nearest_integer_recovery", [](i64 m, i64 D, i64 d, double Y) {
        RecoveryResult r = nearest_integer_recovery(m, fd_args(D, d), Y);
        py::dict out;
        out["candidate"] = to_pyint(r.candidate);
        out["trace"] = to_pyint(r.trace_value);
        out["matches"] = r.matches;
        out["certified"] = r.certified;
        out["y_used"] = r.y_used;
        return out;
    }, py::arg("m"), py::arg("D"), py::arg("d"), py::arg("Y"));
}
