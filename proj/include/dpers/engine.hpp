#pragma once

// Query-time reasoning: build the possibilistic base for an instant from the
// timed KB and the schemata, then answer (conditional) nonmonotonic queries.

#include <optional>
#include <string>
#include <vector>

#include "dpers/persistence.hpp"
#include "dpers/timeline.hpp"

namespace dpers {

struct QueryVerdict {
    Formula formula;
    /// Condition of a conditional query; absent for plain acceptance.
    std::optional<Formula> given;
    TimePoint time;
    /// N*(formula), or N*(given -> formula) for a conditional query.
    Degree necessity;
    /// Incons, or N*(!given) for a conditional query.
    Degree inconsistency;
    bool accepted = false;
};

/// |~_t psi: N*_t(psi) > Incons_t.
QueryVerdict nm_query_at(const TimedKB& kb, const SchemaSet& schemas, const TimePoint& t, const Formula& psi);

/// phi |~_t psi: N*_t(phi -> psi) > N*_t(!phi).
QueryVerdict conditional_query_at(const TimedKB& kb, const SchemaSet& schemas, const TimePoint& t,
                                  const Formula& phi, const Formula& psi);

struct TimelineRow {
    TimePoint t;
    Degree n_true;
    Degree n_false;
    BeliefStatus status;
};

/// Rows at lower, lower + step, ... and always at upper. The range must be
/// finite; its open/closed markers are ignored.
std::vector<TimelineRow> timeline(const TimedKB& kb, const SchemaSet& schemas, const Atom& fluent,
                                  const Interval& range, const Rational& step);

/// Header `t,N_true,N_false,status`; degrees as exact `p/q`, or rounded
/// decimals when `decimal_digits` is given.
std::string timeline_csv(const std::vector<TimelineRow>& rows, std::optional<int> decimal_digits = std::nullopt);

}  // namespace dpers
