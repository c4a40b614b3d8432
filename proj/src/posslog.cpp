#include "dpers/posslog.hpp"

#include <algorithm>
#include <optional>

#include "dpers/errors.hpp"

namespace dpers {

PossibilisticKB::PossibilisticKB(std::initializer_list<NecessityFormula> entries) {
    for (const auto& e : entries) add(e.formula, e.lower_bound);
}

void PossibilisticKB::add(const Formula& formula, const Degree& lower_bound) {
    if (lower_bound == Degree::zero()) return;
    for (auto& e : entries_) {
        if (e.formula == formula) {
            e.lower_bound = std::max(e.lower_bound, lower_bound);
            return;
        }
    }
    entries_.push_back({formula, lower_bound});
}

std::set<Atom> PossibilisticKB::vocabulary() const {
    std::set<Atom> out;
    for (const auto& e : entries_) out.merge(atoms(e.formula));
    return out;
}

namespace {

// pi* tabulated over the joint model space of the base and extra formulas.
class Distribution {
public:
    Distribution(const PossibilisticKB& kb, std::initializer_list<Formula> extra) {
        auto vocab = kb.vocabulary();
        for (const auto& f : extra) vocab.merge(atoms(f));
        space_.emplace(vocab);
        std::vector<CompiledFormula> compiled;
        for (const auto& e : kb.entries()) compiled.emplace_back(e.formula, *space_);
        pi_.reserve(space_->size());
        for (std::uint64_t m = 0; m < space_->size(); ++m) {
            Rational value = 1;
            for (std::size_t i = 0; i < compiled.size(); ++i) {
                if (!compiled[i].eval(m)) value = std::min(value, Rational(1) - kb.entries()[i].lower_bound.value());
            }
            pi_.push_back(std::move(value));
        }
    }

    // sup of pi over the models of phi (0 if none).
    Rational sup_over_models(const Formula& phi) const {
        CompiledFormula c(phi, *space_);
        Rational best = 0;
        for (std::uint64_t m = 0; m < space_->size(); ++m)
            if (c.eval(m)) best = std::max(best, pi_[m]);
        return best;
    }

private:
    std::optional<ModelSpace> space_;
    std::vector<Rational> pi_;
};

}  // namespace

Degree least_specific_pi(const PossibilisticKB& kb, const Interpretation& omega) {
    Rational value = 1;
    for (const auto& e : kb.entries())
        if (!evaluate(omega, e.formula)) value = std::min(value, Rational(1) - e.lower_bound.value());
    return Degree(value);
}

Degree necessity(const PossibilisticKB& kb, const Formula& phi) {
    Distribution d(kb, {phi});
    return Degree(Rational(1) - d.sup_over_models(!phi));
}

Degree possibility(const PossibilisticKB& kb, const Formula& phi) {
    Distribution d(kb, {phi});
    return Degree(d.sup_over_models(phi));
}

Degree inconsistency_degree(const PossibilisticKB& kb) {
    Distribution d(kb, {});
    return Degree(Rational(1) - d.sup_over_models(Formula::top()));
}

bool nm_entails(const PossibilisticKB& kb, const Formula& phi, const Formula& psi) {
    return necessity(kb, implies(phi, psi)) > necessity(kb, !phi);
}

bool nm_accepts(const PossibilisticKB& kb, const Formula& psi) {
    return necessity(kb, psi) > inconsistency_degree(kb);
}

}  // namespace dpers
