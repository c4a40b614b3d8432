#pragma once

// Timed knowledge bases over the rational time line: cuts, belief status of
// the partial history, informative time points and extrapolation problems.

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dpers/proplogic.hpp"
#include "dpers/rational.hpp"

namespace dpers {

/// A point of the extended time line: a rational, -inf or +inf.
class TimePoint {
public:
    TimePoint() = default;
    TimePoint(Rational value) : value_(std::move(value)) {}  // NOLINT: implicit by intent
    TimePoint(int value) : value_(value) {}                  // NOLINT

    static TimePoint neg_inf() { return TimePoint(Kind::NegInf); }
    static TimePoint pos_inf() { return TimePoint(Kind::PosInf); }

    bool finite() const noexcept { return kind_ == Kind::Finite; }
    bool is_neg_inf() const noexcept { return kind_ == Kind::NegInf; }
    bool is_pos_inf() const noexcept { return kind_ == Kind::PosInf; }
    /// Throws DomainError for infinite points.
    const Rational& value() const;

    friend bool operator==(const TimePoint& a, const TimePoint& b) {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
    }
    friend std::strong_ordering operator<=>(const TimePoint& a, const TimePoint& b);

private:
    enum class Kind { NegInf, Finite, PosInf };
    explicit TimePoint(Kind k) : kind_(k) {}

    Kind kind_ = Kind::Finite;
    Rational value_{0};
};

std::string to_string(const TimePoint& t);

enum class Bound { Open, Closed };

/// A non-empty interval of the time line. Infinite ends are open; a
/// degenerate interval [a,a] is closed on both sides.
class Interval {
public:
    Interval(TimePoint lower, Bound lower_bound, TimePoint upper, Bound upper_bound);

    static Interval closed(TimePoint a, TimePoint b) { return {std::move(a), Bound::Closed, std::move(b), Bound::Closed}; }
    static Interval open(TimePoint a, TimePoint b) { return {std::move(a), Bound::Open, std::move(b), Bound::Open}; }
    static Interval point(TimePoint a) { return closed(a, a); }
    static Interval everything() { return open(TimePoint::neg_inf(), TimePoint::pos_inf()); }

    const TimePoint& lower() const noexcept { return lower_; }
    const TimePoint& upper() const noexcept { return upper_; }
    bool lower_closed() const noexcept { return lower_bound_ == Bound::Closed; }
    bool upper_closed() const noexcept { return upper_bound_ == Bound::Closed; }
    bool is_point() const noexcept { return lower_ == upper_; }
    /// True for the closed forms [a,b], [a,+inf), (-inf,b] and (-inf,+inf).
    bool is_closed_set() const noexcept;

    bool contains(const TimePoint& t) const;

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    TimePoint lower_;
    Bound lower_bound_;
    TimePoint upper_;
    Bound upper_bound_;
};

/// `[a,b]`, `(a,b)`, `[a,b)`, `(a,b]`, `[a]`; ends are rationals or `-inf`/`+inf`.
Interval parse_interval(std::string_view text);
std::string render(const Interval& interval);

/// Finite union of intervals kept sorted, disjoint and maximally merged.
class IntervalSet {
public:
    IntervalSet() = default;
    IntervalSet(Interval interval) : parts_{std::move(interval)} {}  // NOLINT
    explicit IntervalSet(std::vector<Interval> parts);

    const std::vector<Interval>& parts() const noexcept { return parts_; }
    bool empty() const noexcept { return parts_.empty(); }
    bool contains(const TimePoint& t) const;

    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
    std::vector<Interval> parts_;
};

std::string render(const IntervalSet& set);

struct TimedFormula {
    IntervalSet when;
    Formula what;
};

class TimedKB {
public:
    TimedKB() = default;
    TimedKB(std::initializer_list<TimedFormula> entries) : entries_(entries) {}

    void add(IntervalSet when, Formula what) { entries_.push_back({std::move(when), std::move(what)}); }
    const std::vector<TimedFormula>& entries() const noexcept { return entries_; }

    /// Sorted distinct finite interval endpoints.
    std::vector<Rational> breakpoints() const;
    std::set<Atom> vocabulary() const;

private:
    std::vector<TimedFormula> entries_;
};

/// Formulas of all entries holding at the finite point t.
std::vector<Formula> cut(const TimedKB& kb, const TimePoint& t);

/// Belief status of phi at t. At inconsistent time points contingent
/// formulas are reported Unknown (tautologies True, contradictions False).
BeliefStatus history_status(const TimedKB& kb, const TimePoint& t, const Formula& phi);

/// Informative time points of the fluent: where its status is True or False.
/// Throws ClosedHistoryViolation when a component is not a closed interval.
IntervalSet itp(const TimedKB& kb, const Atom& fluent);

enum class ProblemClass { ForwardUnbounded, BackwardUnbounded, BoundedNoChange, BoundedWithChange };

std::string to_string(ProblemClass kind);

struct ExtrapolationProblem {
    Atom fluent;
    Interval interval;
    ProblemClass kind;
    /// Truth value of the fluent at the finite lower / upper reference point.
    std::optional<bool> left_value;
    std::optional<bool> right_value;
};

/// Maximal non-informative intervals of the fluent, classified.
/// Throws EmptyItpError if the fluent is never informative.
std::vector<ExtrapolationProblem> extrapolation_problems(const TimedKB& kb, const Atom& fluent);

}  // namespace dpers
