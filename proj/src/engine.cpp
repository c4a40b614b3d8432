#include "dpers/engine.hpp"

#include "dpers/errors.hpp"

namespace dpers {

QueryVerdict nm_query_at(const TimedKB& kb, const SchemaSet& schemas, const TimePoint& t, const Formula& psi) {
    auto base = apply_at(kb, schemas, t);
    auto n = necessity(base, psi);
    auto incons = inconsistency_degree(base);
    return {psi, std::nullopt, t, n, incons, n > incons};
}

QueryVerdict conditional_query_at(const TimedKB& kb, const SchemaSet& schemas, const TimePoint& t,
                                  const Formula& phi, const Formula& psi) {
    auto base = apply_at(kb, schemas, t);
    auto n = necessity(base, implies(phi, psi));
    auto bound = necessity(base, !phi);
    return {psi, phi, t, n, bound, n > bound};
}

std::vector<TimelineRow> timeline(const TimedKB& kb, const SchemaSet& schemas, const Atom& fluent,
                                  const Interval& range, const Rational& step) {
    if (!range.lower().finite() || !range.upper().finite()) throw DomainError("timeline range must be finite");
    if (!(step > 0)) throw DomainError("timeline step must be positive");
    auto f = Formula::atom(fluent);
    const Rational& end = range.upper().value();
    std::vector<TimelineRow> rows;
    auto row_at = [&](const Rational& t) {
        auto base = apply_at(kb, schemas, t);
        rows.push_back({t, necessity(base, f), necessity(base, !f), history_status(kb, t, f)});
    };
    for (Rational t = range.lower().value(); t < end; t += step) row_at(t);
    row_at(end);
    return rows;
}

std::string timeline_csv(const std::vector<TimelineRow>& rows, std::optional<int> decimal_digits) {
    auto show = [&](const Rational& r) { return decimal_digits ? to_decimal(r, *decimal_digits) : to_string(r); };
    std::string out = "t,N_true,N_false,status\n";
    for (const auto& row : rows) {
        out += show(row.t.value()) + "," + show(row.n_true.value()) + "," + show(row.n_false.value()) + "," +
               to_string(row.status) + "\n";
    }
    return out;
}

}  // namespace dpers
