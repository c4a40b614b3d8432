#pragma once

// Shared fixtures and brute-force oracles for the test suites. The oracles
// enumerate interpretations through std::map and dpers::evaluate only, so
// they stay independent of the compiled model-space path used by the library.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dpers/io.hpp"
#include "dpers/persistence.hpp"
#include "dpers/posslog.hpp"
#include "dpers/proplogic.hpp"
#include "dpers/timeline.hpp"

namespace dpers::test {

inline Formula F(const char* text) { return parse_formula(text); }
inline Rational Q(const char* text) { return parse_rational(text); }
inline Rational Q(int n, int d = 1) { return Rational(n, d); }
inline Degree D(int n, int d = 1) { return Degree(n, d); }

/// The machines example: A works on [0,10], B on [17,30], one of them is
/// down at 15.
inline TimedKB machines_kb() {
    return parse_kb(
        "at [0,10] : A\n"
        "at [15] : !A | !B\n"
        "at [17,30] : B\n");
}

inline PiecewiseLinearFn pw(std::vector<std::pair<Rational, Rational>> knots) {
    std::vector<PiecewiseLinearFn::Knot> out;
    for (auto& [o, v] : knots) out.push_back({o, v});
    return PiecewiseLinearFn(std::move(out));
}

/// Reference schema for a working machine: slow decay of "works" with a 1/5
/// floor forwards, no floor backwards, fast decay of "failed".
inline FluentSchema machine_schema(const std::string& fluent) {
    return FluentSchema(fluent, pw({{0, 1}, {8, Q(1, 5)}}), pw({{0, 1}, {10, 0}}), pw({{0, 1}, {2, 0}}),
                        pw({{0, 1}, {2, 0}}));
}

inline SchemaSet machine_schemas() {
    SchemaSet s;
    s.add(machine_schema("A"));
    s.add(machine_schema("B"));
    return s;
}

// --- enumeration oracles ----------------------------------------------------

inline std::vector<Interpretation> all_interpretations(const std::set<Atom>& vocab) {
    std::vector<Interpretation> out{Interpretation{}};
    for (const auto& a : vocab) {
        std::vector<Interpretation> next;
        for (const auto& w : out) {
            for (bool v : {false, true}) {
                auto values = w.values();
                values[a] = v;
                next.emplace_back(values);
            }
        }
        out = std::move(next);
    }
    return out;
}

inline bool oracle_entails(const std::vector<Formula>& gamma, const Formula& phi) {
    auto vocab = vocabulary(gamma);
    vocab.merge(atoms(phi));
    for (const auto& w : all_interpretations(vocab)) {
        bool sat = true;
        for (const auto& g : gamma) sat = sat && evaluate(w, g);
        if (sat && !evaluate(w, phi)) return false;
    }
    return true;
}

inline std::set<Atom> joint_vocab(const PossibilisticKB& kb, const std::vector<Formula>& extra) {
    auto vocab = kb.vocabulary();
    for (const auto& f : extra) vocab.merge(atoms(f));
    return vocab;
}

inline Rational oracle_pi(const PossibilisticKB& kb, const Interpretation& w) {
    Rational v = 1;
    for (const auto& e : kb.entries())
        if (!evaluate(w, e.formula) && Rational(1) - e.lower_bound.value() < v) v = Rational(1) - e.lower_bound.value();
    return v;
}

inline Rational oracle_necessity(const PossibilisticKB& kb, const Formula& phi) {
    Rational n = 1;
    for (const auto& w : all_interpretations(joint_vocab(kb, {phi})))
        if (!evaluate(w, phi) && Rational(1) - oracle_pi(kb, w) < n) n = Rational(1) - oracle_pi(kb, w);
    return n;
}

inline Rational oracle_possibility(const PossibilisticKB& kb, const Formula& phi) {
    Rational p = 0;
    for (const auto& w : all_interpretations(joint_vocab(kb, {phi})))
        if (evaluate(w, phi) && oracle_pi(kb, w) > p) p = oracle_pi(kb, w);
    return p;
}

// --- random generators ------------------------------------------------------

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return uniform(0, 1) == 1; }

    Formula formula(const std::vector<std::string>& atoms, int depth) {
        if (depth == 0 || uniform(0, 3) == 0) {
            int pick = uniform(0, static_cast<int>(atoms.size()) + 1);
            if (pick == static_cast<int>(atoms.size())) return Formula::top();
            if (pick == static_cast<int>(atoms.size()) + 1) return Formula::bottom();
            return Formula::atom(atoms[static_cast<std::size_t>(pick)]);
        }
        switch (uniform(0, 3)) {
            case 0: return !formula(atoms, depth - 1);
            case 1: return formula(atoms, depth - 1) & formula(atoms, depth - 1);
            case 2: return formula(atoms, depth - 1) | formula(atoms, depth - 1);
            default: return implies(formula(atoms, depth - 1), formula(atoms, depth - 1));
        }
    }

    std::vector<std::string> atoms(int max_atoms) {
        static const std::vector<std::string> pool{"A", "B", "C", "D"};
        int n = uniform(1, max_atoms);
        return {pool.begin(), pool.begin() + n};
    }

    /// Rational in [0,1] with denominator up to 10.
    Rational unit_rational() {
        int den = uniform(1, 10);
        return Rational(uniform(0, den), den);
    }

    PossibilisticKB kb(const std::vector<std::string>& atoms, int max_entries) {
        PossibilisticKB kb;
        int n = uniform(0, max_entries);
        for (int i = 0; i < n; ++i) kb.add(formula(atoms, 3), Degree(unit_rational()));
        return kb;
    }

    /// Non-increasing function starting at 1, with 1-4 knots.
    PiecewiseLinearFn decreasing_fn() {
        std::vector<PiecewiseLinearFn::Knot> knots{{0, 1}};
        int extra = uniform(0, 3);
        Rational offset = 0;
        Rational value = 1;
        for (int i = 0; i < extra; ++i) {
            offset += Rational(uniform(1, 12), uniform(1, 3));
            value -= value * Rational(uniform(0, 4), 4);
            knots.push_back({offset, value});
        }
        return PiecewiseLinearFn(std::move(knots));
    }

    FluentSchema schema(const std::string& fluent) {
        Rational split(uniform(1, 9), 10);
        if (coin()) split = Rational(1, 2);
        return FluentSchema(fluent, decreasing_fn(), decreasing_fn(), decreasing_fn(), decreasing_fn(), split);
    }

    Rational length() { return Rational(uniform(1, 60), uniform(1, 4)); }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace dpers::test
