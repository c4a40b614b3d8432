#include "dpers/timeline.hpp"

#include <algorithm>

#include "dpers/errors.hpp"
#include "parse_detail.hpp"

namespace dpers {

const Rational& TimePoint::value() const {
    if (!finite()) throw DomainError("infinite time point has no value");
    return value_;
}

std::strong_ordering operator<=>(const TimePoint& a, const TimePoint& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (a.kind_ != TimePoint::Kind::Finite) return std::strong_ordering::equal;
    return compare(a.value_, b.value_);
}

std::string to_string(const TimePoint& t) {
    if (t.is_neg_inf()) return "-inf";
    if (t.is_pos_inf()) return "+inf";
    return to_string(t.value());
}

Interval::Interval(TimePoint lower, Bound lower_bound, TimePoint upper, Bound upper_bound)
    : lower_(std::move(lower)), lower_bound_(lower_bound), upper_(std::move(upper)), upper_bound_(upper_bound) {
    if (lower_.is_pos_inf() || upper_.is_neg_inf()) throw DomainError("interval endpoint on the wrong infinity");
    if (!lower_.finite() && lower_bound_ == Bound::Closed) throw DomainError("infinite lower endpoint must be open");
    if (!upper_.finite() && upper_bound_ == Bound::Closed) throw DomainError("infinite upper endpoint must be open");
    if (upper_ < lower_) throw DomainError("interval lower endpoint exceeds upper endpoint");
    if (lower_ == upper_ && (lower_bound_ == Bound::Open || upper_bound_ == Bound::Open))
        throw DomainError("degenerate interval must be closed on both sides");
}

bool Interval::is_closed_set() const noexcept {
    return (lower_closed() || !lower_.finite()) && (upper_closed() || !upper_.finite());
}

bool Interval::contains(const TimePoint& t) const {
    auto lo = t <=> lower_;
    auto hi = t <=> upper_;
    bool above = lo > 0 || (lo == 0 && lower_closed());
    bool below = hi < 0 || (hi == 0 && upper_closed());
    return above && below;
}

namespace detail {

Rational parse_number(Cursor& in) {
    auto where = in.location();
    auto tok = in.number_token();
    auto value = try_parse_rational(tok);
    if (!value) in.fail_at("expected rational number", where);
    return *value;
}

TimePoint parse_time_point(Cursor& in) {
    if (in.accept("-inf")) return TimePoint::neg_inf();
    if (in.accept("+inf") || in.accept("inf")) return TimePoint::pos_inf();
    return TimePoint(parse_number(in));
}

Interval parse_interval(Cursor& in) {
    auto where = in.location();
    Bound lower_bound;
    if (in.accept("["))
        lower_bound = Bound::Closed;
    else if (in.accept("("))
        lower_bound = Bound::Open;
    else
        in.fail("expected '[' or '('");
    TimePoint lower = parse_time_point(in);
    TimePoint upper = lower;
    bool single = !in.accept(",");
    if (!single) upper = parse_time_point(in);
    Bound upper_bound;
    if (in.accept("]"))
        upper_bound = Bound::Closed;
    else if (in.accept(")"))
        upper_bound = Bound::Open;
    else
        in.fail("expected ']' or ')'");
    if (single && (lower_bound != Bound::Closed || upper_bound != Bound::Closed))
        in.fail_at("single-point interval must be written [a]", where);
    try {
        return Interval(lower, lower_bound, upper, upper_bound);
    } catch (const DomainError& e) {
        in.fail_at(e.what(), where);
    }
}

}  // namespace detail

Interval parse_interval(std::string_view text) {
    detail::Cursor in(text);
    Interval result = detail::parse_interval(in);
    if (!in.at_end()) in.fail("unexpected trailing input");
    return result;
}

std::string render(const Interval& interval) {
    if (interval.is_point()) return "[" + to_string(interval.lower()) + "]";
    return std::string(interval.lower_closed() ? "[" : "(") + to_string(interval.lower()) + "," +
           to_string(interval.upper()) + (interval.upper_closed() ? "]" : ")");
}

namespace {

// Order of lower ends: smaller point first; at equal points a closed end
// starts earlier than an open one.
bool lower_before(const Interval& a, const Interval& b) {
    auto c = a.lower() <=> b.lower();
    if (c != 0) return c < 0;
    return a.lower_closed() && !b.lower_closed();
}

// True if b's upper end reaches beyond a's.
bool upper_beyond(const Interval& b, const Interval& a) {
    auto c = b.upper() <=> a.upper();
    if (c != 0) return c > 0;
    return b.upper_closed() && !a.upper_closed();
}

// Assuming next does not start before cur: do they overlap or touch so that
// their union is a single interval?
bool joinable(const Interval& cur, const Interval& next) {
    auto c = next.lower() <=> cur.upper();
    if (c < 0) return true;
    if (c > 0) return false;
    return cur.upper_closed() || next.lower_closed();
}

}  // namespace

IntervalSet::IntervalSet(std::vector<Interval> parts) {
    std::sort(parts.begin(), parts.end(), lower_before);
    for (auto& p : parts) {
        if (!parts_.empty() && joinable(parts_.back(), p)) {
            auto& cur = parts_.back();
            if (upper_beyond(p, cur))
                cur = Interval(cur.lower(), cur.lower_closed() ? Bound::Closed : Bound::Open, p.upper(),
                               p.upper_closed() ? Bound::Closed : Bound::Open);
        } else {
            parts_.push_back(std::move(p));
        }
    }
}

bool IntervalSet::contains(const TimePoint& t) const {
    return std::any_of(parts_.begin(), parts_.end(), [&t](const Interval& i) { return i.contains(t); });
}

std::string render(const IntervalSet& set) {
    if (set.empty()) return "{}";
    std::string out;
    for (const auto& p : set.parts()) {
        if (!out.empty()) out += " u ";
        out += render(p);
    }
    return out;
}

std::vector<Rational> TimedKB::breakpoints() const {
    std::vector<Rational> out;
    for (const auto& e : entries_) {
        for (const auto& p : e.when.parts()) {
            if (p.lower().finite()) out.push_back(p.lower().value());
            if (p.upper().finite()) out.push_back(p.upper().value());
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::set<Atom> TimedKB::vocabulary() const {
    std::set<Atom> out;
    for (const auto& e : entries_) out.merge(atoms(e.what));
    return out;
}

std::vector<Formula> cut(const TimedKB& kb, const TimePoint& t) {
    if (!t.finite()) throw DomainError("cut requires a finite time point");
    std::vector<Formula> out;
    for (const auto& e : kb.entries())
        if (e.when.contains(t)) out.push_back(e.what);
    return out;
}

BeliefStatus history_status(const TimedKB& kb, const TimePoint& t, const Formula& phi) {
    auto gamma = cut(kb, t);
    auto status = belief_status(gamma, phi);
    if (status != BeliefStatus::Inconsistent) return status;
    if (is_tautology(phi)) return BeliefStatus::True;
    if (is_contradiction(phi)) return BeliefStatus::False;
    return BeliefStatus::Unknown;
}

namespace {

// One cell of the breakpoint partition: a breakpoint or an open gap between
// consecutive breakpoints (or towards an infinity).
struct Cell {
    Interval span;
    Rational sample;
};

std::vector<Cell> partition(const std::vector<Rational>& breaks) {
    std::vector<Cell> cells;
    if (breaks.empty()) {
        cells.push_back({Interval::everything(), Rational(0)});
        return cells;
    }
    cells.push_back({Interval::open(TimePoint::neg_inf(), breaks.front()), breaks.front() - 1});
    for (std::size_t i = 0; i < breaks.size(); ++i) {
        cells.push_back({Interval::point(breaks[i]), breaks[i]});
        if (i + 1 < breaks.size())
            cells.push_back({Interval::open(breaks[i], breaks[i + 1]), (breaks[i] + breaks[i + 1]) / 2});
    }
    cells.push_back({Interval::open(breaks.back(), TimePoint::pos_inf()), breaks.back() + 1});
    return cells;
}

bool informative(BeliefStatus s) { return s == BeliefStatus::True || s == BeliefStatus::False; }

}  // namespace

IntervalSet itp(const TimedKB& kb, const Atom& fluent) {
    auto f = Formula::atom(fluent);
    auto cells = partition(kb.breakpoints());
    std::vector<Interval> components;
    std::size_t i = 0;
    while (i < cells.size()) {
        if (!informative(history_status(kb, cells[i].sample, f))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < cells.size() && informative(history_status(kb, cells[j + 1].sample, f))) ++j;
        const auto& first = cells[i].span;
        const auto& last = cells[j].span;
        Interval component(first.lower(), first.lower_closed() ? Bound::Closed : Bound::Open, last.upper(),
                           last.upper_closed() ? Bound::Closed : Bound::Open);
        if (!component.is_closed_set()) throw ClosedHistoryViolation(fluent, render(component));
        components.push_back(component);
        i = j + 1;
    }
    return IntervalSet(std::move(components));
}

std::string to_string(ProblemClass kind) {
    switch (kind) {
        case ProblemClass::ForwardUnbounded: return "ForwardUnbounded";
        case ProblemClass::BackwardUnbounded: return "BackwardUnbounded";
        case ProblemClass::BoundedNoChange: return "BoundedNoChange";
        case ProblemClass::BoundedWithChange: return "BoundedWithChange";
    }
    return "?";
}

std::vector<ExtrapolationProblem> extrapolation_problems(const TimedKB& kb, const Atom& fluent) {
    auto informative_set = itp(kb, fluent);
    if (informative_set.empty()) throw EmptyItpError(fluent);
    auto f = Formula::atom(fluent);
    auto truth_at = [&](const TimePoint& t) { return history_status(kb, t, f) == BeliefStatus::True; };

    std::vector<ExtrapolationProblem> out;
    const auto& parts = informative_set.parts();
    if (parts.front().lower().finite()) {
        const auto& t0 = parts.front().lower();
        out.push_back({fluent, Interval::open(TimePoint::neg_inf(), t0), ProblemClass::BackwardUnbounded,
                       std::nullopt, truth_at(t0)});
    }
    for (std::size_t k = 0; k + 1 < parts.size(); ++k) {
        const auto& ti = parts[k].upper();
        const auto& tj = parts[k + 1].lower();
        if (!(ti < tj)) continue;  // touching reference points leave no gap
        bool left = truth_at(ti);
        bool right = truth_at(tj);
        out.push_back({fluent, Interval::open(ti, tj),
                       left == right ? ProblemClass::BoundedNoChange : ProblemClass::BoundedWithChange, left,
                       right});
    }
    if (parts.back().upper().finite()) {
        const auto& tn = parts.back().upper();
        out.push_back({fluent, Interval::open(tn, TimePoint::pos_inf()), ProblemClass::ForwardUnbounded,
                       truth_at(tn), std::nullopt});
    }
    return out;
}

}  // namespace dpers
