// dpers: batch reasoner over a timed knowledge base and persistence schemata.
//
// Exit codes: 0 success, 2 parse error, 3 semantic or validation error,
// 4 closedness violation.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dpers/axioms.hpp"
#include "dpers/engine.hpp"
#include "dpers/errors.hpp"
#include "dpers/io.hpp"

namespace {

enum Exit { Ok = 0, ParseFailure = 2, SemanticFailure = 3, ClosednessFailure = 4 };

// Bad command-line values are reported like malformed input.
struct ArgumentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string kb_path;
    std::string schema_path;
    std::optional<int> decimals;

    std::string time;
    std::string formula;
    std::string given;
    std::string fluent;
    std::string from, to, step;
    bool displayed_h = false;
    std::vector<std::string> lengths;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ArgumentError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// ParseError positions are relative to the file; prefix its name.
template <typename T, typename Parser>
T load(const std::string& path, Parser parse) {
    auto text = slurp(path);
    try {
        return parse(text);
    } catch (const dpers::ParseError& e) {
        throw dpers::ParseError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " +
                                    e.message(),
                                e.line(), e.column());
    } catch (const dpers::SemanticError& e) {
        throw dpers::SemanticError(path + ":" + e.what());
    }
}

dpers::TimedKB kb_of(const Options& o) {
    if (o.kb_path.empty()) throw ArgumentError("--kb is required for this command");
    return load<dpers::TimedKB>(o.kb_path, [](const std::string& t) { return dpers::parse_kb(t); });
}

dpers::SchemaSet schemas_of(const Options& o, bool required) {
    if (o.schema_path.empty()) {
        if (required) throw ArgumentError("--schema is required for this command");
        return {};
    }
    return load<dpers::SchemaSet>(o.schema_path, [](const std::string& t) { return dpers::parse_schema(t); });
}

dpers::Rational number(const std::string& text, const char* what) {
    auto r = dpers::try_parse_rational(text);
    if (!r) throw ArgumentError(std::string("invalid ") + what + " '" + text + "'");
    return *r;
}

dpers::Formula formula(const std::string& text) {
    try {
        return dpers::parse_formula(text);
    } catch (const dpers::ParseError& e) {
        throw ArgumentError("formula '" + text + "': column " + std::to_string(e.column()) + ": " + e.message());
    }
}

std::string show(const dpers::Rational& r, const Options& o) {
    return o.decimals ? dpers::to_decimal(r, *o.decimals) : dpers::to_string(r);
}

int run_status(const Options& o) {
    auto kb = kb_of(o);
    std::cout << dpers::to_string(dpers::history_status(kb, number(o.time, "time"), formula(o.formula))) << "\n";
    return Ok;
}

int run_query(const Options& o) {
    auto kb = kb_of(o);
    auto schemas = schemas_of(o, false);
    auto t = number(o.time, "time");
    auto psi = formula(o.formula);
    auto v = o.given.empty() ? dpers::nm_query_at(kb, schemas, t, psi)
                             : dpers::conditional_query_at(kb, schemas, t, formula(o.given), psi);
    std::cout << "t: " << dpers::to_string(v.time) << "\n";
    if (v.given) {
        std::cout << "given: " << dpers::render(*v.given) << "\n"
                  << "formula: " << dpers::render(v.formula) << "\n"
                  << "necessity: " << show(v.necessity.value(), o) << "\n"
                  << "bound: " << show(v.inconsistency.value(), o) << "\n";
    } else {
        std::cout << "formula: " << dpers::render(v.formula) << "\n"
                  << "necessity: " << show(v.necessity.value(), o) << "\n"
                  << "inconsistency: " << show(v.inconsistency.value(), o) << "\n";
    }
    std::cout << "accepted: " << (v.accepted ? "yes" : "no") << "\n";
    return Ok;
}

int run_problems(const Options& o) {
    auto kb = kb_of(o);
    auto value = [](const std::optional<bool>& v) { return v ? (*v ? "True" : "False") : "-"; };
    for (const auto& p : dpers::extrapolation_problems(kb, o.fluent)) {
        std::cout << dpers::to_string(p.kind) << " " << dpers::render(p.interval) << " left=" << value(p.left_value)
                  << " right=" << value(p.right_value) << "\n";
    }
    return Ok;
}

int run_timeline(const Options& o) {
    auto kb = kb_of(o);
    auto schemas = schemas_of(o, false);
    auto lo = number(o.from, "lower end");
    auto hi = number(o.to, "upper end");
    if (hi < lo) throw ArgumentError("timeline range is empty");
    auto rows = dpers::timeline(kb, schemas, o.fluent, dpers::Interval::closed(lo, hi), number(o.step, "step"));
    std::cout << dpers::timeline_csv(rows, o.decimals);
    return Ok;
}

int run_validate(const Options& o) {
    auto schemas = schemas_of(o, true);
    auto direction = o.displayed_h ? dpers::HDirection::Displayed : dpers::HDirection::Prose;
    bool ok = true;
    for (const auto& [name, schema] : schemas) {
        std::vector<dpers::Rational> lengths;
        for (const auto& l : o.lengths) {
            lengths.push_back(number(l, "length"));
            if (!(lengths.back() > 0)) throw ArgumentError("lengths must be positive");
        }
        if (lengths.empty()) lengths = dpers::default_lengths(schema);
        for (const auto& report : dpers::validate_schema(schema, lengths, direction)) {
            std::cout << dpers::render(report) << "\n";
            if (report.required && !report.passed()) ok = false;
        }
    }
    std::cout << (ok ? "valid" : "invalid") << "\n";
    return ok ? Ok : SemanticFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Temporal reasoning with decreasing persistence of certainty"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--kb", o.kb_path, "Timed knowledge base file");
    app.add_option("--schema", o.schema_path, "Persistence schema file");
    app.add_option("--decimal", o.decimals, "Render degrees as decimals with this many digits")
        ->check(CLI::Range(0, 40));

    auto* status = app.add_subcommand("status", "Belief status of a formula in the history at t");
    status->add_option("t", o.time)->required();
    status->add_option("formula", o.formula)->required();

    auto* query = app.add_subcommand("query", "Nonmonotonic acceptance of a formula at t");
    query->add_option("t", o.time)->required();
    query->add_option("formula", o.formula)->required();
    query->add_option("--given", o.given, "Condition for a conditional query");

    auto* problems = app.add_subcommand("problems", "Classified non-informative intervals of a fluent");
    problems->add_option("fluent", o.fluent)->required();

    auto* timeline = app.add_subcommand("timeline", "CSV of N(f) and N(!f) over a range");
    timeline->add_option("fluent", o.fluent)->required();
    timeline->add_option("from", o.from)->required();
    timeline->add_option("to", o.to)->required();
    timeline->add_option("step", o.step)->required();

    auto* validate = app.add_subcommand("validate", "Check every schema against the persistence axioms");
    validate->add_flag("--displayed-h-direction", o.displayed_h, "Use the alternative H1/H3 inequalities");
    validate->add_option("--lengths", o.lengths, "Interval lengths to instantiate (default: from the knots)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return ParseFailure;
    }

    try {
        if (*status) return run_status(o);
        if (*query) return run_query(o);
        if (*problems) return run_problems(o);
        if (*timeline) return run_timeline(o);
        return run_validate(o);
    } catch (const ArgumentError& e) {
        std::cerr << "dpers: error: " << e.what() << "\n";
        return ParseFailure;
    } catch (const dpers::ParseError& e) {
        std::cerr << "dpers: parse error: " << e.what() << "\n";
        return ParseFailure;
    } catch (const dpers::ClosedHistoryViolation& e) {
        std::cerr << "dpers: closedness violation: " << e.what() << "\n";
        return ClosednessFailure;
    } catch (const dpers::Error& e) {
        std::cerr << "dpers: error: " << e.what() << "\n";
        return SemanticFailure;
    }
}
