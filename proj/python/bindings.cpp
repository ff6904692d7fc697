// pybind11 bindings for the laurentkit package. Integers cross the boundary
// as Python ints (arbitrary size), rationals as strings "p/q".

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "laurent/cancellation.hpp"
#include "laurent/error.hpp"
#include "laurent/lattice.hpp"
#include "laurent/poly.hpp"
#include "laurent/report.hpp"
#include "laurent/session.hpp"

namespace py = pybind11;
using namespace laurent;

namespace {

py::int_ to_py(const Integer& a)
{
    return py::reinterpret_steal<py::int_>(PyLong_FromString(a.get_str().c_str(), nullptr, 10));
}

Integer from_py(const py::handle& h) { return Integer(py::str(h).cast<std::string>()); }

py::list to_py(const IntVector& v)
{
    py::list out;
    for (const auto& x : v) out.append(to_py(x));
    return out;
}

py::list to_py(const IntMatrix& M)
{
    py::list out;
    for (std::size_t i = 0; i < M.rows(); ++i) out.append(to_py(M.row(i)));
    return out;
}

IntVector vector_from(const py::sequence& s)
{
    IntVector v;
    for (const auto& x : s) v.push_back(from_py(x));
    return v;
}

// Empty row lists need an explicit column count.
IntMatrix matrix_from(const py::sequence& rows, std::optional<std::size_t> cols)
{
    std::vector<IntVector> r;
    for (const auto& row : rows) r.push_back(vector_from(row.cast<py::sequence>()));
    const std::size_t c = cols ? *cols : (r.empty() ? 0 : r[0].size());
    for (const auto& row : r)
        if (row.size() != c) throw Error(ErrorKind::RankMismatch, "ragged matrix rows");
    return IntMatrix::from_rows(r, c);
}

std::vector<std::string> names_or_default(const std::optional<std::vector<std::string>>& names, std::size_t n)
{
    return names ? *names : default_names(n);
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact Laurent polynomial, lattice and cancellation routines";
    m.attr("SCHEMA_VERSION") = std::string(kReportSchemaVersion);

    static PyObject* laurent_error =
        PyErr_NewException("laurentkit.LaurentError", PyExc_RuntimeError, nullptr);
    m.add_object("LaurentError", py::handle(laurent_error));
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::reinterpret_borrow<py::object>(laurent_error)(e.what());
            exc.attr("kind") = std::string(to_string(e.kind()));
            PyErr_SetObject(laurent_error, exc.ptr());
        }
    });

    m.def("subcommands", &subcommands);

    m.def(
        "normalize_session",
        [](const std::string& text) { return print_session(parse_session(text)); },
        py::arg("text"), "Parse a session file and print it in canonical form.");

    m.def(
        "run_json",
        [](const std::string& text, const std::string& verb, std::optional<std::uint64_t> seed,
           std::vector<std::string> targets, bool trace) {
            RunOptions opts;
            opts.seed = seed;
            opts.targets = std::move(targets);
            opts.trace = trace;
            RunResult r = run_text(text, verb, opts);
            return py::make_tuple(r.exit_code, r.report.dump(), r.text);
        },
        py::arg("text"), py::arg("verb"), py::arg("seed") = py::none(), py::arg("targets") = std::vector<std::string>{},
        py::arg("trace") = false);

    m.def(
        "unit_decomposition",
        [](const std::string& poly, std::optional<std::vector<std::string>> names, std::size_t rank,
           const std::string& domain) -> std::optional<py::tuple> {
            const Domain d = Domain::parse(domain);
            auto vars = names_or_default(names, rank);
            auto dec = is_unit_poly(parse_poly(poly, vars, d));
            if (!dec) return std::nullopt;
            return py::make_tuple(to_string(dec->coefficient), to_py(dec->exponent));
        },
        py::arg("poly"), py::arg("names") = py::none(), py::arg("rank") = 1, py::arg("domain") = "QQ",
        "(coefficient, exponent) if the polynomial is a unit, else None.");

    m.def(
        "canonical_poly",
        [](const std::string& poly, std::vector<std::string> names, const std::string& domain) {
            return to_string(parse_poly(poly, names, Domain::parse(domain)), names);
        },
        py::arg("poly"), py::arg("names"), py::arg("domain") = "QQ");

    m.def(
        "hnf",
        [](const py::sequence& rows, std::optional<std::size_t> cols) {
            auto h = hermite_normal_form(matrix_from(rows, cols));
            return py::make_tuple(to_py(h.H), to_py(h.U));
        },
        py::arg("rows"), py::arg("cols") = py::none(), "Row Hermite form: returns (H, U) with U M = H.");

    m.def(
        "snf",
        [](const py::sequence& rows, std::optional<std::size_t> cols) {
            auto s = smith_normal_form(matrix_from(rows, cols));
            return py::make_tuple(to_py(s.S), to_py(s.U), to_py(s.V));
        },
        py::arg("rows"), py::arg("cols") = py::none(), "Smith form: returns (S, U, V) with U M V = S.");

    m.def(
        "kernel",
        [](const py::sequence& rows, std::optional<std::size_t> cols) {
            auto K = integer_kernel(matrix_from(rows, cols));
            py::list out;
            for (std::size_t i = 0; i < K.rank(); ++i) out.append(to_py(K.vector(i)));
            return out;
        },
        py::arg("rows"), py::arg("cols") = py::none(), "Basis of {v : M v = 0} over the integers.");

    m.def(
        "unit_normalize",
        [](const py::sequence& exponents, const py::sequence& grading, const std::string& domain) {
            const Domain d = Domain::parse(domain);
            std::vector<MonomialGenerator> gens;
            std::size_t n = py::len(grading);
            std::size_t i = 0;
            for (const auto& e : exponents)
                gens.push_back({"u" + std::to_string(++i), d.one(), vector_from(e.cast<py::sequence>()), true});
            MonomialSubalgebra A(d, default_names(n), gens);
            auto tr = unit_normalize(A, Grading(vector_from(grading)));
            auto dec = is_unit_poly(tr.w);
            py::dict out;
            out["w"] = to_string(tr.w, default_names(n));
            out["exponent"] = to_py(dec->exponent);
            py::list degrees;
            for (const auto& x : tr.degrees) degrees.append(to_py(x));
            out["degrees"] = degrees;
            out["steps"] = tr.steps.size();
            return out;
        },
        py::arg("exponents"), py::arg("grading"), py::arg("domain") = "QQ",
        "Single unit generating the units x^e (e in exponents) up to scalars.");
}
