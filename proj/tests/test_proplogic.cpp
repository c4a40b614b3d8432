#include <gtest/gtest.h>

#include "dpers/errors.hpp"
#include "dpers/proplogic.hpp"
#include "support.hpp"

using namespace dpers;
using namespace dpers::test;

TEST(Vocabulary, CollectsAtoms) {
    EXPECT_TRUE(vocabulary({}).empty());
    std::vector<Formula> one{F("A & !B")};
    EXPECT_EQ(vocabulary(one), (std::set<Atom>{"A", "B"}));
    std::vector<Formula> two{F("A | B"), F("!A | !B")};
    EXPECT_EQ(vocabulary(two), (std::set<Atom>{"A", "B"}));
}

TEST(Evaluate, ClassicalSemantics) {
    EXPECT_TRUE(evaluate(Interpretation({{"A", true}}), F("A")));
    EXPECT_FALSE(evaluate(Interpretation({{"A", true}, {"B", true}}), F("!A | !B")));
    EXPECT_FALSE(evaluate(Interpretation({{"A", false}}), Formula::bottom()));
}

TEST(Evaluate, AtomOutsideVocabulary) {
    EXPECT_THROW(evaluate(Interpretation({{"A", true}}), F("A & B")), VocabularyError);
}

TEST(Entails, Examples) {
    std::vector<Formula> g1{F("A")};
    EXPECT_TRUE(entails(g1, F("A")));

    std::vector<Formula> g2{F("A"), F("!A | !B")};
    ASSERT_TRUE(oracle_entails(g2, F("!B")));
    EXPECT_TRUE(entails(g2, F("!B")));

    std::vector<Formula> g3{F("A | B")};
    ASSERT_FALSE(oracle_entails(g3, F("A")));
    EXPECT_FALSE(entails(g3, F("A")));
}

TEST(Entails, UnsatisfiableBaseEntailsEverything) {
    std::vector<Formula> g{F("A"), F("!A")};
    EXPECT_TRUE(entails(g, F("Z")));
    EXPECT_TRUE(entails(g, Formula::bottom()));
}

TEST(BeliefStatus, Examples) {
    std::vector<Formula> g1{F("A | B")};
    EXPECT_EQ(belief_status(g1, F("A")), BeliefStatus::Unknown);

    std::vector<Formula> g2{F("A"), F("!A")};
    EXPECT_EQ(belief_status(g2, F("B")), BeliefStatus::Inconsistent);

    std::vector<Formula> g3{F("!A | !B"), F("B")};
    ASSERT_TRUE(oracle_entails(g3, F("!A")));
    EXPECT_EQ(belief_status(g3, F("A")), BeliefStatus::False);
}

TEST(Formula, IsAtomic) {
    EXPECT_TRUE(F("A").is_atomic());
    EXPECT_FALSE(F("!A").is_atomic());
    EXPECT_FALSE(Formula::top().is_atomic());
    EXPECT_THROW(Formula::atom("1x"), DomainError);
}

TEST(Parser, PrecedenceAndAssociativity) {
    EXPECT_EQ(F("!A & B | C"), ((!F("A")) & F("B")) | F("C"));
    EXPECT_EQ(F("A -> B -> C"), implies(F("A"), implies(F("B"), F("C"))));
    EXPECT_EQ(F("A | B -> C & D"), implies(F("A") | F("B"), F("C") & F("D")));
    EXPECT_EQ(F("A -> B"), (!F("A")) | F("B"));
    EXPECT_EQ(F("(true)"), Formula::top());
    EXPECT_EQ(F("false"), Formula::bottom());
}

TEST(Parser, ReportsPosition) {
    try {
        parse_formula("A & ");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 1U);
        EXPECT_EQ(e.column(), 5U);
    }
    EXPECT_THROW(parse_formula("A B"), ParseError);
    EXPECT_THROW(parse_formula("(A"), ParseError);
    EXPECT_THROW(parse_formula(""), ParseError);
}

TEST(Parser, RenderRoundTrip) {
    Gen gen(7);
    for (int i = 0; i < 300; ++i) {
        auto f = gen.formula(gen.atoms(4), 5);
        auto text = render(f);
        EXPECT_EQ(parse_formula(text), f) << text;
    }
}

TEST(Properties, StatusDuality) {
    Gen gen(11);
    for (int i = 0; i < 300; ++i) {
        auto atoms = gen.atoms(3);
        std::vector<Formula> gamma{gen.formula(atoms, 3), gen.formula(atoms, 2)};
        auto phi = gen.formula(atoms, 3);
        if (!satisfiable(gamma)) continue;
        EXPECT_EQ(belief_status(gamma, phi) == BeliefStatus::True, belief_status(gamma, !phi) == BeliefStatus::False);
    }
}

TEST(Properties, MonotoneAndConjunctive) {
    Gen gen(13);
    for (int i = 0; i < 300; ++i) {
        auto atoms = gen.atoms(4);
        std::vector<Formula> gamma{gen.formula(atoms, 3)};
        auto phi = gen.formula(atoms, 3);
        auto psi = gen.formula(atoms, 3);
        auto bigger = gamma;
        bigger.push_back(gen.formula(atoms, 3));
        if (entails(gamma, phi)) EXPECT_TRUE(entails(bigger, phi));
        EXPECT_EQ(entails(gamma, phi & psi), entails(gamma, phi) && entails(gamma, psi));
    }
}

TEST(Properties, AgreesWithTruthTableOracle) {
    Gen gen(17);
    for (int i = 0; i < 500; ++i) {
        auto atoms = gen.atoms(4);
        std::vector<Formula> gamma;
        for (int k = gen.uniform(0, 3); k > 0; --k) gamma.push_back(gen.formula(atoms, 3));
        auto phi = gen.formula(atoms, 4);
        EXPECT_EQ(entails(gamma, phi), oracle_entails(gamma, phi)) << render(phi);
    }
}

TEST(Properties, UnusedAtomsDoNotMatter) {
    Gen gen(19);
    for (int i = 0; i < 200; ++i) {
        std::vector<std::string> ab{"A", "B"};
        std::vector<Formula> gamma{gen.formula(ab, 3)};
        auto phi = gen.formula(ab, 3);
        auto padded = gamma;
        padded.push_back(F("C | !C"));
        EXPECT_EQ(entails(gamma, phi), entails(padded, phi));
        EXPECT_EQ(belief_status(gamma, phi), belief_status(padded, phi));
    }
}
