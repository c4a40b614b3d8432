#include "dpers/io.hpp"

#include <array>
#include <optional>

#include "cursor.hpp"
#include "dpers/errors.hpp"
#include "parse_detail.hpp"

namespace dpers {

TimedKB parse_kb(std::string_view text) {
    TimedKB kb;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        auto eol = text.find('\n');
        auto line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

        detail::Cursor in(line, line_no);
        if (in.at_end()) continue;
        auto where = in.location();
        if (in.identifier() != "at") in.fail_at("expected 'at'", where);
        Interval when = detail::parse_interval(in);
        in.expect(":");
        Formula what = detail::parse_formula(in);
        if (!in.at_end()) in.fail("unexpected trailing input");
        kb.add(std::move(when), std::move(what));
    }
    return kb;
}

namespace {

std::string at(std::pair<std::size_t, std::size_t> where) {
    return std::to_string(where.first) + ":" + std::to_string(where.second) + ": ";
}

PiecewiseLinearFn parse_pw(detail::Cursor& in) {
    auto where = in.location();
    if (in.identifier() != "pw") in.fail_at("expected 'pw['", where);
    in.expect("[");
    std::vector<PiecewiseLinearFn::Knot> knots;
    do {
        in.expect("(");
        Rational offset = detail::parse_number(in);
        in.expect(",");
        Rational value = detail::parse_number(in);
        in.expect(")");
        knots.push_back({std::move(offset), std::move(value)});
    } while (in.accept(","));
    in.expect("]");
    try {
        return PiecewiseLinearFn(std::move(knots));
    } catch (const DomainError& e) {
        throw SemanticError(at(where) + e.what());
    }
}

// Slots: forward true, backward true, forward false, backward false.
std::size_t slot(bool forward, bool value) { return (forward ? 0 : 1) + (value ? 0 : 2); }

FluentSchema parse_block(detail::Cursor& in) {
    auto block_start = in.location();
    if (in.identifier() != "fluent") in.fail_at("expected 'fluent'", block_start);
    auto name_at = in.location();
    std::string name(in.identifier());
    if (name.empty()) in.fail_at("expected fluent name", name_at);
    in.expect("{");

    std::array<std::optional<PiecewiseLinearFn>, 4> functions;
    std::optional<Rational> split;
    while (!in.accept("}")) {
        auto key_at = in.location();
        auto key = in.identifier();
        if (key == "forward" || key == "backward") {
            auto value_at = in.location();
            auto value = in.identifier();
            if (value != "true" && value != "false") in.fail_at("expected 'true' or 'false'", value_at);
            in.expect(":");
            auto& target = functions[slot(key == "forward", value == "true")];
            if (target)
                throw SemanticError(at(key_at) + "repeated key '" + std::string(key) + " " + std::string(value) + "'");
            target = parse_pw(in);
        } else if (key == "change_split") {
            in.expect(":");
            if (split) throw SemanticError(at(key_at) + "repeated key 'change_split'");
            split = detail::parse_number(in);
        } else if (key.empty()) {
            in.fail_at("expected key or '}'", key_at);
        } else {
            in.fail_at("unknown key '" + std::string(key) + "'", key_at);
        }
        if (!in.accept(";") && in.peek() != '}') in.fail("expected ';' or '}'");
    }

    static constexpr std::array<const char*, 4> labels{"forward true", "backward true", "forward false",
                                                       "backward false"};
    for (std::size_t i = 0; i < functions.size(); ++i)
        if (!functions[i]) throw SemanticError(at(block_start) + "fluent '" + name + "' lacks '" + labels[i] + "'");
    try {
        return FluentSchema(name, *functions[0], *functions[1], *functions[2], *functions[3],
                            split.value_or(Rational(1, 2)));
    } catch (const SemanticError& e) {
        throw SemanticError(at(block_start) + e.what());
    }
}

}  // namespace

SchemaSet parse_schema(std::string_view text) {
    SchemaSet out;
    detail::Cursor in(text);
    while (!in.at_end()) {
        auto where = in.location();
        auto schema = parse_block(in);
        try {
            out.add(std::move(schema));
        } catch (const SemanticError& e) {
            throw SemanticError(at(where) + e.what());
        }
    }
    return out;
}

std::string render(const TimedKB& kb) {
    std::string out;
    for (const auto& e : kb.entries())
        for (const auto& part : e.when.parts()) out += "at " + render(part) + " : " + render(e.what) + "\n";
    return out;
}

std::string render(const FluentSchema& schema) {
    std::string out = "fluent " + schema.fluent() + " {\n";
    for (bool forward : {true, false}) {
        for (bool value : {true, false}) {
            const auto& fn = forward ? schema.forward(value) : schema.backward(value);
            out += std::string("  ") + (forward ? "forward " : "backward ") + (value ? "true" : "false") + ": " +
                   render(fn) + ";\n";
        }
    }
    out += "  change_split: " + to_string(schema.change_split()) + "\n}\n";
    return out;
}

std::string render(const SchemaSet& schemas) {
    std::string out;
    for (const auto& [name, schema] : schemas) out += render(schema);
    return out;
}

}  // namespace dpers
