// Python bindings. Degrees and time points cross the boundary as
// fractions.Fraction; formulas, KBs and schemata as their text forms or
// opaque handles.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dpers/axioms.hpp"
#include "dpers/engine.hpp"
#include "dpers/errors.hpp"
#include "dpers/io.hpp"

namespace py = pybind11;
using namespace dpers;

namespace {

py::object fraction(const Rational& r) {
    static py::object Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(py::int_(py::str(boost::multiprecision::numerator(r).str())),
                    py::int_(py::str(boost::multiprecision::denominator(r).str())));
}

// Accepts int, Fraction, str ("p/q", decimals) or float (via its repr).
Rational rational(const py::handle& value) {
    return parse_rational(py::str(value).cast<std::string>());
}

Formula formula(const py::handle& value) {
    if (py::isinstance<Formula>(value)) return value.cast<Formula>();
    return parse_formula(value.cast<std::string>());
}

py::dict verdict(const QueryVerdict& v) {
    py::dict d;
    d["formula"] = render(v.formula);
    d["given"] = v.given ? py::object(py::str(render(*v.given))) : py::none();
    d["t"] = fraction(v.time.value());
    d["necessity"] = fraction(v.necessity.value());
    d[v.given ? "bound" : "inconsistency"] = fraction(v.inconsistency.value());
    d["accepted"] = v.accepted;
    return d;
}

}  // namespace

PYBIND11_MODULE(_dpers, m) {
    m.doc() = "Temporal reasoning with decreasing persistence of certainty";

    auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", base);
    py::register_exception<SemanticError>(m, "SemanticError", base);
    py::register_exception<DomainError>(m, "DomainError", base);
    py::register_exception<VocabularyError>(m, "VocabularyError", base);
    py::register_exception<ClosedHistoryViolation>(m, "ClosedHistoryViolation", base);
    py::register_exception<EmptyItpError>(m, "EmptyItpError", base);

    py::class_<Formula>(m, "Formula")
        .def(py::init([](const std::string& text) { return parse_formula(text); }), py::arg("text"))
        .def("atoms", [](const Formula& f) { return atoms(f); })
        .def("__str__", [](const Formula& f) { return render(f); })
        .def("__repr__", [](const Formula& f) { return "Formula('" + render(f) + "')"; })
        .def(py::self == py::self)  // NOLINT
        .def("__hash__", [](const Formula& f) { return py::hash(py::str(render(f))); });

    m.def("entails", [](const std::vector<std::string>& gamma, const py::object& phi) {
        std::vector<Formula> fs;
        for (const auto& g : gamma) fs.push_back(parse_formula(g));
        return entails(fs, formula(phi));
    }, py::arg("gamma"), py::arg("phi"));

    m.def("necessity", [](const std::vector<std::pair<std::string, py::object>>& kb, const py::object& phi) {
        PossibilisticKB base;
        for (const auto& [f, a] : kb) base.add(parse_formula(f), Degree(rational(a)));
        return fraction(necessity(base, formula(phi)).value());
    }, py::arg("kb"), py::arg("phi"), "N(phi) of a base given as (formula, degree) pairs.");

    m.def("inconsistency", [](const std::vector<std::pair<std::string, py::object>>& kb) {
        PossibilisticKB base;
        for (const auto& [f, a] : kb) base.add(parse_formula(f), Degree(rational(a)));
        return fraction(inconsistency_degree(base).value());
    }, py::arg("kb"));

    py::class_<TimedKB>(m, "TimedKB")
        .def_static("parse", [](const std::string& text) { return parse_kb(text); }, py::arg("text"))
        .def("__str__", [](const TimedKB& kb) { return render(kb); })
        .def("__len__", [](const TimedKB& kb) { return kb.entries().size(); })
        .def("status", [](const TimedKB& kb, const py::object& t, const py::object& phi) {
            return to_string(history_status(kb, rational(t), formula(phi)));
        }, py::arg("t"), py::arg("phi"))
        .def("itp", [](const TimedKB& kb, const std::string& fluent) { return render(itp(kb, fluent)); },
             py::arg("fluent"))
        .def("problems", [](const TimedKB& kb, const std::string& fluent) {
            py::list out;
            auto value = [](const std::optional<bool>& v) { return v ? py::object(py::bool_(*v)) : py::none(); };
            for (const auto& p : extrapolation_problems(kb, fluent))
                out.append(py::make_tuple(to_string(p.kind), render(p.interval), value(p.left_value),
                                          value(p.right_value)));
            return out;
        }, py::arg("fluent"));

    py::class_<SchemaSet>(m, "SchemaSet")
        .def(py::init<>())
        .def_static("parse", [](const std::string& text) { return parse_schema(text); }, py::arg("text"))
        .def("__str__", [](const SchemaSet& s) { return render(s); })
        .def("__len__", &SchemaSet::size)
        .def("fluents", [](const SchemaSet& s) {
            std::vector<std::string> out;
            for (const auto& [name, schema] : s) out.push_back(name);
            return out;
        })
        .def("validate", [](const SchemaSet& s, bool displayed, std::optional<std::vector<py::object>> lengths) {
            py::list out;
            for (const auto& [name, schema] : s) {
                std::vector<Rational> ls;
                if (lengths)
                    for (const auto& l : *lengths) ls.push_back(rational(l));
                else
                    ls = default_lengths(schema);
                for (const auto& r : validate_schema(schema, ls, displayed ? HDirection::Displayed : HDirection::Prose)) {
                    py::dict d;
                    d["check"] = r.check;
                    d["passed"] = r.passed();
                    d["required"] = r.required;
                    py::dict witnesses;
                    for (const auto& [k, v] : r.witnesses) witnesses[py::str(k)] = fraction(v);
                    d["witnesses"] = witnesses;
                    py::list violations;
                    for (const auto& f : r.violations) violations.append(f.message);
                    d["violations"] = violations;
                    out.append(d);
                }
            }
            return out;
        }, py::arg("displayed_h_direction") = false, py::arg("lengths") = py::none());

    m.def("query", [](const TimedKB& kb, const SchemaSet& schemas, const py::object& t, const py::object& psi,
                      const py::object& given) {
        if (given.is_none()) return verdict(nm_query_at(kb, schemas, rational(t), formula(psi)));
        return verdict(conditional_query_at(kb, schemas, rational(t), formula(given), formula(psi)));
    }, py::arg("kb"), py::arg("schemas"), py::arg("t"), py::arg("psi"), py::arg("given") = py::none());

    m.def("apply_at", [](const TimedKB& kb, const SchemaSet& schemas, const py::object& t) {
        py::list out;
        auto base = apply_at(kb, schemas, rational(t));
        for (const auto& e : base.entries())
            out.append(py::make_tuple(render(e.formula), fraction(e.lower_bound.value())));
        return out;
    }, py::arg("kb"), py::arg("schemas"), py::arg("t"), "The possibilistic base at t as (formula, degree) pairs.");

    m.def("timeline", [](const TimedKB& kb, const SchemaSet& schemas, const std::string& fluent,
                         const py::object& lo, const py::object& hi, const py::object& step) {
        py::list out;
        for (const auto& r : timeline(kb, schemas, fluent, Interval::closed(rational(lo), rational(hi)), rational(step)))
            out.append(py::make_tuple(fraction(r.t.value()), fraction(r.n_true.value()), fraction(r.n_false.value()),
                                      to_string(r.status)));
        return out;
    }, py::arg("kb"), py::arg("schemas"), py::arg("fluent"), py::arg("lo"), py::arg("hi"), py::arg("step"));

    m.def("timeline_csv", [](const TimedKB& kb, const SchemaSet& schemas, const std::string& fluent,
                             const py::object& lo, const py::object& hi, const py::object& step,
                             std::optional<int> decimals) {
        return timeline_csv(timeline(kb, schemas, fluent, Interval::closed(rational(lo), rational(hi)), rational(step)),
                            decimals);
    }, py::arg("kb"), py::arg("schemas"), py::arg("fluent"), py::arg("lo"), py::arg("hi"), py::arg("step"),
       py::arg("decimals") = py::none());
}
