#pragma once

// Canonical class constructions of a schema as exact curves, and validators
// for the qualitative axioms (D1-D4), the homogeneity conditions (H1-H3) and
// the optional symmetry properties.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dpers/curve.hpp"
#include "dpers/persistence.hpp"

namespace dpers {

/// N(v) in offset coordinates x = t - t0 on [0, horizon].
Curve forward_curve(const FluentSchema& schema, bool value, const Rational& horizon);
/// N(v) in coordinates y = t - t1 on [-horizon, 0].
Curve backward_curve(const FluentSchema& schema, bool value, const Rational& horizon);
/// N(v) on a bounded interval without change of length `length`, x = t - t0.
/// Pointwise max of the forward function from t0 and the backward one from t1.
Curve no_change_curve(const FluentSchema& schema, bool value, const Rational& length);

/// Bounded interval with change, left value v and right value !v.
struct ChangeCurves {
    Curve left;   // N(v): forward decay times a taper that vanishes at the split
    Curve right;  // N(!v): backward decay from t1 times the mirrored taper
};
ChangeCurves with_change_curves(const FluentSchema& schema, bool left_value, const Rational& length);

/// Bounded-without-change shape by the minimum value of the function.
enum class BoundedPersistence { Full, Elastic, PartiallyElastic };

std::string to_string(BoundedPersistence kind);

struct Finding {
    Span where;
    std::string message;
};

struct ValidationReport {
    std::string check;
    std::vector<Finding> violations;
    /// Named witness points (t*, t', t'').
    std::map<std::string, Rational> witnesses;
    /// Optional properties that are reported but do not decide pass/fail.
    std::map<std::string, bool> properties;
    std::optional<BoundedPersistence> shape;
    /// False for optional properties (symmetries) that a schema may lack.
    bool required = true;

    bool passed() const noexcept { return violations.empty(); }
};

std::string render(const ValidationReport& report);

/// D1 on a forward function given in offsets: non-increasing. Reports the
/// flags `strictly_decreasing` and `strictly_decreasing_near_reference`.
ValidationReport check_D1(const PiecewiseLinearFn& fn);
/// D1 on an instantiated forward curve (t increasing).
ValidationReport check_D1(const Curve& forward);
/// D2 on a backward function given in offsets (distance to the reference).
ValidationReport check_D2(const PiecewiseLinearFn& fn);
/// D2 on an instantiated backward curve: non-decreasing in t.
ValidationReport check_D2(const Curve& backward);
/// D3: valley shape. Witness `t*` is the first global minimizer.
ValidationReport check_D3(const Curve& no_change);
/// D4 on N(f), N(!f) over the same domain. Witnesses `t'` and `t''`.
ValidationReport check_D4(const Curve& f, const Curve& not_f);

/// Direction of the interval-length conditions H1 and H3. `Prose`: a
/// shorter gap without change is at least as certain, and a shorter gap with
/// change loses the left value sooner and gains the right value sooner.
/// `Displayed`: the alternative inequality form, with H1 reversed and H3
/// comparing f reversed and !f at equal distance from the right end.
enum class HDirection { Prose, Displayed };

/// Two bounded-no-change intervals of lengths length1 <= length2.
ValidationReport check_H1(const FluentSchema& schema, const Rational& length1, const Rational& length2,
                          HDirection direction = HDirection::Prose);
/// Bounded-no-change of the given length against forward extrapolation.
ValidationReport check_H2(const FluentSchema& schema, const Rational& length);
/// Two bounded-with-change intervals of lengths length1 <= length2.
ValidationReport check_H3(const FluentSchema& schema, const Rational& length1, const Rational& length2,
                          HDirection direction = HDirection::Prose);

ValidationReport check_fb_symmetry(const FluentSchema& schema);
ValidationReport check_negation_symmetry(const FluentSchema& schema);

/// Interval lengths used by validate_schema when none are given: every
/// positive knot offset of the schema, their pairwise sums, and 1.
std::vector<Rational> default_lengths(const FluentSchema& schema);

/// Every check above over the given lengths (all pairs for H1/H3).
std::vector<ValidationReport> validate_schema(const FluentSchema& schema, const std::vector<Rational>& lengths,
                                              HDirection direction = HDirection::Prose);

}  // namespace dpers
