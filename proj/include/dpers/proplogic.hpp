#pragma once

// Propositional formulas over fluent atoms, two-valued semantics by model
// enumeration, and the four-valued belief status of a formula w.r.t. a base.

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dpers {

/// A fluent name. Non-empty identifier `[A-Za-z_][A-Za-z0-9_]*`.
using Atom = std::string;

bool is_identifier(std::string_view name);

/// Immutable propositional formula. Implication is not a node kind: it is
/// rewritten to `!a | b` on construction.
class Formula {
public:
    enum class Kind { Top, Bottom, Atom, Not, And, Or };

    /// Defaults to Top.
    Formula();

    static Formula top();
    static Formula bottom();
    static Formula atom(std::string name);

    friend Formula operator!(const Formula& f);
    friend Formula operator&(const Formula& a, const Formula& b);
    friend Formula operator|(const Formula& a, const Formula& b);

    Kind kind() const noexcept;
    bool is_atomic() const noexcept { return kind() == Kind::Atom; }
    /// Atom name; empty for non-atoms.
    const std::string& name() const noexcept;
    /// One child for Not, two for And/Or, none otherwise.
    std::span<const Formula> children() const noexcept;

    friend bool operator==(const Formula& a, const Formula& b);

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

Formula implies(const Formula& a, const Formula& b);

/// Total order used for deduplication (not semantic).
bool structural_less(const Formula& a, const Formula& b);

std::set<Atom> atoms(const Formula& f);
std::set<Atom> vocabulary(std::span<const Formula> formulas);

/// Concrete syntax: `!` > `&` > `|` > `->` (right-assoc), `true`, `false`.
Formula parse_formula(std::string_view text);
/// Minimal-parenthesis rendering; reparses to an equal formula.
std::string render(const Formula& f);

class Interpretation {
public:
    Interpretation() = default;
    explicit Interpretation(std::map<Atom, bool> values) : values_(std::move(values)) {}

    /// Throws VocabularyError for atoms outside the vocabulary.
    bool at(const Atom& atom) const;
    bool defines(const Atom& atom) const { return values_.contains(atom); }
    const std::map<Atom, bool>& values() const noexcept { return values_; }

private:
    std::map<Atom, bool> values_;
};

bool evaluate(const Interpretation& omega, const Formula& phi);

/// Finite set of atoms with interpretations indexed by bitmask: bit i of the
/// mask is the truth value of atoms()[i].
class ModelSpace {
public:
    static constexpr std::size_t max_atoms = 24;

    explicit ModelSpace(const std::set<Atom>& vocabulary);

    const std::vector<Atom>& atoms() const noexcept { return atoms_; }
    std::uint64_t size() const noexcept { return std::uint64_t{1} << atoms_.size(); }
    Interpretation interpretation(std::uint64_t mask) const;
    /// Index of the atom, or -1.
    int index_of(const Atom& atom) const;

private:
    std::vector<Atom> atoms_;
};

/// Formula flattened to postfix over a ModelSpace for fast repeated evaluation.
class CompiledFormula {
public:
    CompiledFormula(const Formula& f, const ModelSpace& space);
    bool eval(std::uint64_t mask) const;

private:
    enum class Op : std::uint8_t { True, False, Var, Not, And, Or };
    struct Instr {
        Op op;
        int var;
    };
    std::vector<Instr> code_;
};

bool satisfiable(std::span<const Formula> gamma);
/// Classical entailment by enumeration over atoms(gamma) ∪ atoms(phi).
bool entails(std::span<const Formula> gamma, const Formula& phi);
bool is_tautology(const Formula& phi);
bool is_contradiction(const Formula& phi);

enum class BeliefStatus { True, False, Unknown, Inconsistent };

std::string to_string(BeliefStatus status);

BeliefStatus belief_status(std::span<const Formula> gamma, const Formula& phi);

}  // namespace dpers
