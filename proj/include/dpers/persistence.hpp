#pragma once

// Decreasing-persistence schemata and their application to a timed KB.

#include <map>
#include <string>
#include <vector>

#include "dpers/posslog.hpp"
#include "dpers/rational.hpp"
#include "dpers/timeline.hpp"

namespace dpers {

/// Continuous piecewise-linear function of a non-negative offset. Knots are
/// strictly increasing in offset, the first one at offset 0; beyond the last
/// knot the value is held constant.
class PiecewiseLinearFn {
public:
    struct Knot {
        Rational offset;
        Rational value;
        friend bool operator==(const Knot&, const Knot&) = default;
    };

    explicit PiecewiseLinearFn(std::vector<Knot> knots);

    const std::vector<Knot>& knots() const noexcept { return knots_; }
    /// Offset of the last knot; the function is constant from there on.
    const Rational& horizon() const noexcept { return knots_.back().offset; }

    Degree operator()(const Rational& offset) const;

    /// Same function with collinear interior knots and a redundant final knot removed.
    PiecewiseLinearFn normalized() const;

    friend bool operator==(const PiecewiseLinearFn&, const PiecewiseLinearFn&) = default;

private:
    std::vector<Knot> knots_;
};

/// Throws DomainError for a negative offset.
Degree eval_pl(const PiecewiseLinearFn& fn, const Rational& offset);

std::string render(const PiecewiseLinearFn& fn);

/// Persistence knowledge for one fluent: how certainty in a known value
/// decays with the distance from the reference point, forwards and
/// backwards, separately for the value true and the value false.
class FluentSchema {
public:
    /// Every function must start at 1 and be non-increasing in the offset;
    /// violations raise SemanticError naming D1 (forward) or D2 (backward).
    FluentSchema(Atom fluent, PiecewiseLinearFn forward_true, PiecewiseLinearFn backward_true,
                 PiecewiseLinearFn forward_false, PiecewiseLinearFn backward_false,
                 Rational change_split = Rational(1, 2));

    const Atom& fluent() const noexcept { return fluent_; }
    const PiecewiseLinearFn& forward(bool value) const noexcept { return value ? forward_true_ : forward_false_; }
    const PiecewiseLinearFn& backward(bool value) const noexcept { return value ? backward_true_ : backward_false_; }
    /// Fraction of a bounded-with-change interval after which the left value
    /// has fully decayed and the right value starts to rise.
    const Rational& change_split() const noexcept { return change_split_; }

    friend bool operator==(const FluentSchema&, const FluentSchema&) = default;

private:
    Atom fluent_;
    PiecewiseLinearFn forward_true_;
    PiecewiseLinearFn backward_true_;
    PiecewiseLinearFn forward_false_;
    PiecewiseLinearFn backward_false_;
    Rational change_split_;
};

class SchemaSet {
public:
    /// Throws SemanticError if the fluent already has a schema.
    void add(FluentSchema schema);
    const FluentSchema* find(const Atom& fluent) const;

    auto begin() const { return schemas_.begin(); }
    auto end() const { return schemas_.end(); }
    std::size_t size() const noexcept { return schemas_.size(); }
    bool empty() const noexcept { return schemas_.empty(); }

    friend bool operator==(const SchemaSet&, const SchemaSet&) = default;

private:
    std::map<Atom, FluentSchema> schemas_;
};

/// N_t(f) and N_t(!f) inside a non-informative interval.
struct ExtrapolatedDegrees {
    Degree n_true;
    Degree n_false;
};

/// Certainty about the fluent at t, strictly inside the problem interval.
ExtrapolatedDegrees extrapolate(const ExtrapolationProblem& problem, const FluentSchema& schema,
                                const TimePoint& t);

/// The possibilistic base at t: the cut with degree 1, plus the extrapolated
/// literals of every schema-bearing fluent that is not informative at t.
PossibilisticKB apply_at(const TimedKB& kb, const SchemaSet& schemas, const TimePoint& t);

}  // namespace dpers
