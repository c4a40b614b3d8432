#include "dpers/axioms.hpp"

#include <algorithm>

#include "dpers/errors.hpp"

namespace dpers {

Curve forward_curve(const FluentSchema& schema, bool value, const Rational& horizon) {
    return Curve::from_pl(schema.forward(value), horizon);
}

Curve backward_curve(const FluentSchema& schema, bool value, const Rational& horizon) {
    return Curve::from_pl(schema.backward(value), horizon).compose(0, -1);
}

Curve no_change_curve(const FluentSchema& schema, bool value, const Rational& length) {
    auto from_left = Curve::from_pl(schema.forward(value), length);
    auto from_right = Curve::from_pl(schema.backward(value), length).compose(length, -1);
    return Curve::max(from_left, from_right);
}

namespace {

// 1 - x/reach on [0, reach], then 0 up to length.
Curve taper(const Rational& length, const Rational& reach) {
    std::vector<Curve::Piece> pieces = Curve::linear(0, reach, 1, 0).pieces();
    if (reach < length) pieces.push_back({reach, length, Quadratic{}});
    return Curve(std::move(pieces));
}

std::string polarity(bool v) { return v ? "true" : "false"; }

std::string span_text(const Span& s) {
    if (s.lo == s.hi) return "at " + to_string(s.lo);
    return "on [" + to_string(s.lo) + "," + to_string(s.hi) + "]";
}

void add_findings(ValidationReport& report, const std::vector<Span>& spans, const std::string& what) {
    for (const auto& s : spans) report.violations.push_back({s, what + " " + span_text(s)});
}

std::vector<Span> negative(const Curve& c) { return c.negative_parts(); }

Curve negate(const Curve& c) { return Curve::constant(c.lo(), c.hi(), 0) - c; }

void require_lengths(const Rational& l1, const Rational& l2) {
    if (!(l1 > 0) || l2 < l1) throw DomainError("interval lengths must satisfy 0 < length1 <= length2");
}

ValidationReport check_offsets_nonincreasing(const PiecewiseLinearFn& fn, const std::string& axiom) {
    ValidationReport report{axiom, {}, {}, {}, {}};
    const auto& k = fn.knots();
    bool strictly_near_reference = k.size() >= 2 && k[1].value < k[0].value;
    for (std::size_t i = 1; i < k.size(); ++i) {
        if (k[i].value > k[i - 1].value)
            report.violations.push_back({{k[i - 1].offset, k[i].offset},
                                         "certainty increases with distance on offsets [" +
                                             to_string(k[i - 1].offset) + "," + to_string(k[i].offset) + "]"});
    }
    // The tail past the last knot is constant, so strict decrease on the whole
    // half-line never holds for a piecewise-linear schema.
    report.properties["strictly_decreasing"] = false;
    report.properties["strictly_decreasing_near_reference"] = strictly_near_reference;
    return report;
}

}  // namespace

ChangeCurves with_change_curves(const FluentSchema& schema, bool left_value, const Rational& length) {
    if (!(length > 0)) throw DomainError("interval length must be positive");
    const Rational& split = schema.change_split();
    Curve left = Curve::from_pl(schema.forward(left_value), length) * taper(length, split * length);
    Curve right = (Curve::from_pl(schema.backward(!left_value), length) *
                   taper(length, (Rational(1) - split) * length))
                      .compose(length, -1);
    return {std::move(left), std::move(right)};
}

std::string to_string(BoundedPersistence kind) {
    switch (kind) {
        case BoundedPersistence::Full: return "full";
        case BoundedPersistence::Elastic: return "elastic";
        case BoundedPersistence::PartiallyElastic: return "partially-elastic";
    }
    return "?";
}

std::string render(const ValidationReport& report) {
    std::string out = report.check + ": " + (report.passed() ? "pass" : "FAIL");
    if (!report.required) out += " (optional)";
    for (const auto& [name, value] : report.witnesses) out += " " + name + "=" + to_string(value);
    if (report.shape) out += " shape=" + to_string(*report.shape);
    for (const auto& [name, value] : report.properties) out += std::string(" ") + name + "=" + (value ? "yes" : "no");
    for (const auto& f : report.violations) out += "\n  - " + f.message;
    return out;
}

ValidationReport check_D1(const PiecewiseLinearFn& fn) { return check_offsets_nonincreasing(fn, "D1"); }

ValidationReport check_D2(const PiecewiseLinearFn& fn) { return check_offsets_nonincreasing(fn, "D2"); }

ValidationReport check_D1(const Curve& forward) {
    ValidationReport report{"D1", {}, {}, {}, {}};
    add_findings(report, forward.rising_parts(forward.lo(), forward.hi()), "forward certainty rises");
    return report;
}

ValidationReport check_D2(const Curve& backward) {
    ValidationReport report{"D2", {}, {}, {}, {}};
    add_findings(report, backward.falling_parts(backward.lo(), backward.hi()), "backward certainty falls");
    return report;
}

ValidationReport check_D3(const Curve& no_change) {
    ValidationReport report{"D3", {}, {}, {}, {}};
    auto [t_star, lowest] = no_change.minimum();
    report.witnesses["t*"] = t_star;
    add_findings(report, no_change.rising_parts(no_change.lo(), t_star), "certainty rises before the minimum");
    add_findings(report, no_change.falling_parts(t_star, no_change.hi()), "certainty falls after the minimum");
    if (lowest == 1)
        report.shape = BoundedPersistence::Full;
    else if (lowest == 0)
        report.shape = BoundedPersistence::PartiallyElastic;
    else
        report.shape = BoundedPersistence::Elastic;
    return report;
}

ValidationReport check_D4(const Curve& f, const Curve& not_f) {
    ValidationReport report{"D4", {}, {}, {}, {}};
    if (f.lo() != not_f.lo() || f.hi() != not_f.hi()) throw DomainError("D4 curves must share a domain");
    const auto& fp = f.pieces();
    const auto& np = not_f.pieces();

    // t': start of the trailing run where N(f) vanishes identically.
    Rational t1 = f.hi();
    std::size_t k = fp.size();
    while (k > 0 && fp[k - 1].poly.is_zero()) --k;
    Rational t_prime = k == fp.size() ? t1 : (k == 0 ? f.lo() : fp[k].lo);
    // t'': end of the leading run where N(!f) vanishes identically.
    std::size_t j = 0;
    while (j < np.size() && np[j].poly.is_zero()) ++j;
    Rational t_second = j == 0 ? not_f.lo() : (j == np.size() ? not_f.hi() : np[j].lo);

    report.witnesses["t'"] = t_prime;
    report.witnesses["t''"] = t_second;

    add_findings(report, f.nonzero_parts(t_prime, t1), "N(f) is positive");
    add_findings(report, not_f.nonzero_parts(not_f.lo(), t_second), "N(!f) is positive");
    if (t_second < t_prime)
        report.violations.push_back({{t_second, t_prime}, "N(!f) becomes positive before N(f) has vanished, " +
                                                               span_text({t_second, t_prime})});
    add_findings(report, f.rising_parts(f.lo(), t_prime), "N(f) rises");
    add_findings(report, not_f.falling_parts(t_second, not_f.hi()), "N(!f) falls");
    add_findings(report, negative(f), "N(f) is negative");
    add_findings(report, negative(not_f), "N(!f) is negative");
    return report;
}

ValidationReport check_H1(const FluentSchema& schema, const Rational& length1, const Rational& length2,
                          HDirection direction) {
    require_lengths(length1, length2);
    ValidationReport report{"H1", {}, {}, {}, {}};
    for (bool v : {true, false}) {
        auto short_gap = no_change_curve(schema, v, length1);
        auto long_gap = no_change_curve(schema, v, length2);
        // Equal offsets from the left end, then from the right end.
        Curve from_left = short_gap - long_gap.restrict(0, length1);
        Curve from_right =
            short_gap.compose(length1, -1) - long_gap.compose(length2, -1).restrict(0, length1);
        std::string tag = " (value " + polarity(v) + ")";
        if (direction == HDirection::Prose) {
            add_findings(report, negative(from_left), "shorter gap less certain from the left end" + tag);
            add_findings(report, negative(from_right), "shorter gap less certain from the right end" + tag);
        } else {
            add_findings(report, negative(negate(from_left)), "shorter gap more certain from the left end" + tag);
            add_findings(report, negative(negate(from_right)), "shorter gap more certain from the right end" + tag);
        }
        if (length1 == length2) {
            add_findings(report, from_left.nonzero_parts(0, length1), "equal-length gaps differ" + tag);
        }
    }
    return report;
}

ValidationReport check_H2(const FluentSchema& schema, const Rational& length) {
    if (!(length > 0)) throw DomainError("interval length must be positive");
    ValidationReport report{"H2", {}, {}, {}, {}};
    for (bool v : {true, false}) {
        Curve diff = no_change_curve(schema, v, length) - forward_curve(schema, v, length);
        add_findings(report, negative(diff), "bounded gap less certain than forward extrapolation (value " +
                                                 polarity(v) + ")");
    }
    return report;
}

ValidationReport check_H3(const FluentSchema& schema, const Rational& length1, const Rational& length2,
                          HDirection direction) {
    require_lengths(length1, length2);
    ValidationReport report{"H3", {}, {}, {}, {}};
    for (bool v : {true, false}) {
        auto short_gap = with_change_curves(schema, v, length1);
        auto long_gap = with_change_curves(schema, v, length2);
        std::string tag = " (left value " + polarity(v) + ")";
        Curve kept = short_gap.left - long_gap.left.restrict(0, length1);
        if (direction == HDirection::Prose) {
            Curve gained = short_gap.right - long_gap.right.restrict(0, length1);
            add_findings(report, negative(negate(kept)), "shorter gap keeps the left value longer" + tag);
            add_findings(report, negative(gained), "shorter gap gains the right value later" + tag);
        } else {
            Curve gained_from_right =
                short_gap.right.compose(length1, -1) - long_gap.right.compose(length2, -1).restrict(0, length1);
            add_findings(report, negative(kept), "shorter gap loses the left value sooner" + tag);
            add_findings(report, negative(negate(gained_from_right)),
                         "shorter gap more certain of the right value from the right end" + tag);
        }
        if (length1 == length2) {
            Curve gained = short_gap.right - long_gap.right;
            add_findings(report, kept.nonzero_parts(0, length1), "equal-length gaps differ on the left value" + tag);
            add_findings(report, gained.nonzero_parts(0, length1), "equal-length gaps differ on the right value" + tag);
        }
    }
    return report;
}

namespace {

void compare_functions(ValidationReport& report, const PiecewiseLinearFn& a, const PiecewiseLinearFn& b,
                       const std::string& what) {
    auto na = a.normalized();
    auto nb = b.normalized();
    if (na == nb) return;
    Rational end = std::max(na.horizon(), nb.horizon());
    report.violations.push_back({{0, end}, what + ": " + render(na) + " vs " + render(nb)});
}

}  // namespace

ValidationReport check_fb_symmetry(const FluentSchema& schema) {
    ValidationReport report{"forward/backward symmetry", {}, {}, {}, {}};
    report.required = false;
    compare_functions(report, schema.forward(true), schema.backward(true), "forward true differs from backward true");
    compare_functions(report, schema.forward(false), schema.backward(false),
                      "forward false differs from backward false");
    return report;
}

ValidationReport check_negation_symmetry(const FluentSchema& schema) {
    ValidationReport report{"negation symmetry", {}, {}, {}, {}};
    report.required = false;
    compare_functions(report, schema.forward(true), schema.forward(false), "forward true differs from forward false");
    compare_functions(report, schema.backward(true), schema.backward(false),
                      "backward true differs from backward false");
    return report;
}

std::vector<Rational> default_lengths(const FluentSchema& schema) {
    std::vector<Rational> offsets;
    for (bool v : {true, false}) {
        for (const auto* fn : {&schema.forward(v), &schema.backward(v)})
            for (const auto& k : fn->knots())
                if (k.offset > 0) offsets.push_back(k.offset);
    }
    std::vector<Rational> out = offsets;
    for (std::size_t i = 0; i < offsets.size(); ++i)
        for (std::size_t j = i; j < offsets.size(); ++j) out.push_back(offsets[i] + offsets[j]);
    out.emplace_back(1);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<ValidationReport> validate_schema(const FluentSchema& schema, const std::vector<Rational>& lengths,
                                              HDirection direction) {
    std::vector<ValidationReport> out;
    auto push = [&out](ValidationReport r, const std::string& context) {
        r.check += " " + context;
        out.push_back(std::move(r));
    };
    const std::string& f = schema.fluent();
    for (bool v : {true, false}) {
        push(check_D1(schema.forward(v)), f + " forward " + polarity(v));
        push(check_D2(schema.backward(v)), f + " backward " + polarity(v));
    }
    for (const auto& len : lengths) {
        for (bool v : {true, false}) {
            push(check_D3(no_change_curve(schema, v, len)), f + " value " + polarity(v) + " length " + to_string(len));
            auto change = with_change_curves(schema, v, len);
            push(check_D4(change.left, change.right),
                 f + " left " + polarity(v) + " length " + to_string(len));
        }
        push(check_H2(schema, len), f + " length " + to_string(len));
    }
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        for (std::size_t j = i; j < lengths.size(); ++j) {
            const auto& a = std::min(lengths[i], lengths[j]);
            const auto& b = std::max(lengths[i], lengths[j]);
            std::string ctx = f + " lengths " + to_string(a) + "," + to_string(b);
            push(check_H1(schema, a, b, direction), ctx);
            push(check_H3(schema, a, b, direction), ctx);
        }
    }
    push(check_fb_symmetry(schema), f);
    push(check_negation_symmetry(schema), f);
    return out;
}

}  // namespace dpers
