#include "dpers/persistence.hpp"

#include <algorithm>

#include "dpers/errors.hpp"

namespace dpers {

PiecewiseLinearFn::PiecewiseLinearFn(std::vector<Knot> knots) : knots_(std::move(knots)) {
    if (knots_.empty()) throw DomainError("piecewise-linear function needs at least one knot");
    if (knots_.front().offset != 0) throw DomainError("first knot must be at offset 0");
    for (std::size_t i = 0; i < knots_.size(); ++i) {
        if (knots_[i].value < 0 || knots_[i].value > 1)
            throw DomainError("knot value outside [0,1]: " + to_string(knots_[i].value));
        if (i > 0 && !(knots_[i - 1].offset < knots_[i].offset))
            throw DomainError("knot offsets must be strictly increasing");
    }
}

Degree PiecewiseLinearFn::operator()(const Rational& offset) const {
    if (offset < 0) throw DomainError("negative offset " + to_string(offset));
    if (offset >= horizon()) return Degree(knots_.back().value);
    auto hi = std::upper_bound(knots_.begin(), knots_.end(), offset,
                               [](const Rational& x, const Knot& k) { return x < k.offset; });
    auto lo = hi - 1;
    Rational frac = (offset - lo->offset) / (hi->offset - lo->offset);
    return Degree(lo->value + frac * (hi->value - lo->value));
}

PiecewiseLinearFn PiecewiseLinearFn::normalized() const {
    std::vector<Knot> out;
    for (const auto& k : knots_) {
        // Drop the middle of three collinear knots.
        while (out.size() >= 2) {
            const auto& a = out[out.size() - 2];
            const auto& b = out.back();
            if ((b.value - a.value) * (k.offset - b.offset) != (k.value - b.value) * (b.offset - a.offset)) break;
            out.pop_back();
        }
        out.push_back(k);
    }
    // A final flat segment repeats the constant tail.
    while (out.size() >= 2 && out.back().value == out[out.size() - 2].value) out.pop_back();
    return PiecewiseLinearFn(std::move(out));
}

Degree eval_pl(const PiecewiseLinearFn& fn, const Rational& offset) { return fn(offset); }

std::string render(const PiecewiseLinearFn& fn) {
    std::string out = "pw[";
    for (std::size_t i = 0; i < fn.knots().size(); ++i) {
        if (i > 0) out += ",";
        out += "(" + to_string(fn.knots()[i].offset) + "," + to_string(fn.knots()[i].value) + ")";
    }
    return out + "]";
}

namespace {

void require_persistence_shape(const Atom& fluent, const PiecewiseLinearFn& fn, const char* label,
                               const char* axiom) {
    if (fn.knots().front().value != 1)
        throw SemanticError("schema for '" + fluent + "': " + label + " must have value 1 at offset 0");
    const auto& k = fn.knots();
    for (std::size_t i = 1; i < k.size(); ++i) {
        if (k[i].value > k[i - 1].value)
            throw SemanticError("schema for '" + fluent + "': " + label + " rises on [" +
                                to_string(k[i - 1].offset) + "," + to_string(k[i].offset) + "], violating " +
                                axiom + " (certainty must not increase with distance from the reference point)");
    }
}

}  // namespace

FluentSchema::FluentSchema(Atom fluent, PiecewiseLinearFn forward_true, PiecewiseLinearFn backward_true,
                           PiecewiseLinearFn forward_false, PiecewiseLinearFn backward_false,
                           Rational change_split)
    : fluent_(std::move(fluent)),
      forward_true_(std::move(forward_true)),
      backward_true_(std::move(backward_true)),
      forward_false_(std::move(forward_false)),
      backward_false_(std::move(backward_false)),
      change_split_(std::move(change_split)) {
    if (!is_identifier(fluent_)) throw SemanticError("invalid fluent name '" + fluent_ + "'");
    require_persistence_shape(fluent_, forward_true_, "forward true", "D1");
    require_persistence_shape(fluent_, forward_false_, "forward false", "D1");
    require_persistence_shape(fluent_, backward_true_, "backward true", "D2");
    require_persistence_shape(fluent_, backward_false_, "backward false", "D2");
    if (change_split_ <= 0 || change_split_ >= 1)
        throw SemanticError("schema for '" + fluent_ + "': change_split must lie in (0,1)");
}

void SchemaSet::add(FluentSchema schema) {
    auto name = schema.fluent();
    if (schemas_.contains(name)) throw SemanticError("duplicate schema for fluent '" + name + "'");
    schemas_.emplace(std::move(name), std::move(schema));
}

const FluentSchema* SchemaSet::find(const Atom& fluent) const {
    auto it = schemas_.find(fluent);
    return it == schemas_.end() ? nullptr : &it->second;
}

namespace {

// max(0, 1 - offset / span)
Rational taper(const Rational& offset, const Rational& span) {
    Rational v = Rational(1) - offset / span;
    return v > 0 ? v : Rational(0);
}

ExtrapolatedDegrees assign(bool value, const Rational& degree) {
    if (value) return {Degree(degree), Degree::zero()};
    return {Degree::zero(), Degree(degree)};
}

}  // namespace

ExtrapolatedDegrees extrapolate(const ExtrapolationProblem& problem, const FluentSchema& schema,
                                const TimePoint& t) {
    if (schema.fluent() != problem.fluent)
        throw SemanticError("schema for '" + schema.fluent() + "' applied to fluent '" + problem.fluent + "'");
    const auto& iv = problem.interval;
    if (!t.finite() || !(iv.lower() < t && t < iv.upper()))
        throw DomainError("time point " + to_string(t) + " is not inside " + render(iv));

    switch (problem.kind) {
        case ProblemClass::ForwardUnbounded: {
            bool v = problem.left_value.value();
            return assign(v, schema.forward(v)(t.value() - iv.lower().value()).value());
        }
        case ProblemClass::BackwardUnbounded: {
            bool v = problem.right_value.value();
            return assign(v, schema.backward(v)(iv.upper().value() - t.value()).value());
        }
        case ProblemClass::BoundedNoChange: {
            bool v = problem.left_value.value();
            auto fwd = schema.forward(v)(t.value() - iv.lower().value());
            auto bwd = schema.backward(v)(iv.upper().value() - t.value());
            return assign(v, std::max(fwd, bwd).value());
        }
        case ProblemClass::BoundedWithChange: {
            bool v = problem.left_value.value();
            const Rational& t0 = iv.lower().value();
            const Rational& t1 = iv.upper().value();
            Rational length = t1 - t0;
            const Rational& split = schema.change_split();
            Rational kept = schema.forward(v)(t.value() - t0).value() * taper(t.value() - t0, split * length);
            Rational gained =
                schema.backward(!v)(t1 - t.value()).value() * taper(t1 - t.value(), (Rational(1) - split) * length);
            ExtrapolatedDegrees out;
            (v ? out.n_true : out.n_false) = Degree(kept);
            (v ? out.n_false : out.n_true) = Degree(gained);
            return out;
        }
    }
    throw DomainError("unknown problem class");
}

PossibilisticKB apply_at(const TimedKB& kb, const SchemaSet& schemas, const TimePoint& t) {
    PossibilisticKB out;
    for (const auto& f : cut(kb, t)) out.add(f, Degree::one());
    auto vocab = kb.vocabulary();
    for (const auto& [fluent, schema] : schemas) {
        if (!vocab.contains(fluent)) continue;
        auto informative = itp(kb, fluent);
        if (informative.empty() || informative.contains(t)) continue;
        for (const auto& problem : extrapolation_problems(kb, fluent)) {
            if (!problem.interval.contains(t)) continue;
            auto degrees = extrapolate(problem, schema, t);
            auto atom = Formula::atom(fluent);
            out.add(atom, degrees.n_true);
            out.add(!atom, degrees.n_false);
            break;
        }
    }
    return out;
}

}  // namespace dpers
