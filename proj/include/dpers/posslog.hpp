#pragma once

// Possibilistic knowledge bases under the least specific possibility
// distribution: necessity, possibility, inconsistency degree and the
// induced nonmonotonic inference relation.

#include <initializer_list>
#include <set>
#include <vector>

#include "dpers/proplogic.hpp"
#include "dpers/rational.hpp"

namespace dpers {

/// Constraint N(formula) >= lower_bound.
struct NecessityFormula {
    Formula formula;
    Degree lower_bound;
};

/// Finite set of necessity-valued formulas. Zero bounds are dropped and a
/// repeated formula keeps the larger bound.
class PossibilisticKB {
public:
    PossibilisticKB() = default;
    PossibilisticKB(std::initializer_list<NecessityFormula> entries);

    void add(const Formula& formula, const Degree& lower_bound);

    const std::vector<NecessityFormula>& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }
    std::size_t size() const noexcept { return entries_.size(); }
    std::set<Atom> vocabulary() const;

private:
    std::vector<NecessityFormula> entries_;
};

/// min{1 - a_i : omega falsifies phi_i}, or 1 when omega falsifies nothing.
Degree least_specific_pi(const PossibilisticKB& kb, const Interpretation& omega);

/// inf{1 - pi*(w) : w |= !phi}; 1 when phi has no countermodel.
Degree necessity(const PossibilisticKB& kb, const Formula& phi);

/// sup{pi*(w) : w |= phi}; 0 when phi is unsatisfiable.
Degree possibility(const PossibilisticKB& kb, const Formula& phi);

/// 1 - sup pi*, which equals necessity(kb, false).
Degree inconsistency_degree(const PossibilisticKB& kb);

/// phi |~ psi  iff  N(phi -> psi) > N(!phi).
bool nm_entails(const PossibilisticKB& kb, const Formula& phi, const Formula& psi);

/// |~ psi  iff  N(psi) > Incons.
bool nm_accepts(const PossibilisticKB& kb, const Formula& psi);

}  // namespace dpers
