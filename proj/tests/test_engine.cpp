#include <gtest/gtest.h>

#include "dpers/engine.hpp"
#include "dpers/errors.hpp"
#include "support.hpp"

using namespace dpers;
using namespace dpers::test;

TEST(Query, MachinesAtFifteen) {
    auto kb = machines_kb();
    auto schemas = machine_schemas();
    auto b = nm_query_at(kb, schemas, 15, F("B"));
    EXPECT_TRUE(b.accepted);
    EXPECT_EQ(b.necessity.value(), Q(4, 5));
    EXPECT_EQ(b.inconsistency.value(), Q(1, 2));
    auto a = nm_query_at(kb, schemas, 15, F("A"));
    EXPECT_FALSE(a.accepted);
    EXPECT_EQ(a.necessity.value(), Q(1, 2));
    auto not_a = nm_query_at(kb, schemas, 15, F("!A"));
    EXPECT_TRUE(not_a.accepted);
    EXPECT_EQ(not_a.necessity.value(), Q(4, 5));
}

TEST(Query, MachinesAtThirtyFive) {
    auto v = nm_query_at(machines_kb(), machine_schemas(), 35, F("B"));
    EXPECT_TRUE(v.accepted);
    EXPECT_EQ(v.necessity.value(), Q(1, 2));
    EXPECT_EQ(v.inconsistency.value(), 0);
    EXPECT_TRUE(nm_query_at(machines_kb(), machine_schemas(), 35, F("A & B")).accepted);
}

TEST(Query, Conditional) {
    auto kb = machines_kb();
    auto schemas = machine_schemas();
    auto v = conditional_query_at(kb, schemas, 15, F("A"), F("!B"));
    EXPECT_TRUE(v.accepted);
    ASSERT_TRUE(v.given);
    EXPECT_EQ(*v.given, F("A"));
    EXPECT_EQ(v.necessity.value(), 1);
    EXPECT_EQ(v.inconsistency.value(), Q(4, 5));
    EXPECT_FALSE(conditional_query_at(kb, schemas, 15, F("A & !A"), F("B")).accepted);
}

TEST(Timeline, FluentAAroundTheFailure) {
    auto rows = timeline(machines_kb(), machine_schemas(), "A", Interval::closed(10, 18), 1);
    ASSERT_EQ(rows.size(), 9U);
    EXPECT_EQ(rows[0].n_true.value(), 1);
    EXPECT_EQ(rows[0].status, BeliefStatus::True);
    EXPECT_EQ(rows[5].t, TimePoint(15));
    EXPECT_EQ(rows[5].n_true.value(), Q(1, 2));
    EXPECT_EQ(rows[5].status, BeliefStatus::Unknown);
    EXPECT_EQ(rows[8].n_true.value(), Q(1, 5));
}

TEST(Timeline, FluentBForwards) {
    auto rows = timeline(machines_kb(), machine_schemas(), "B", Interval::closed(31, 35), 1);
    std::vector<Rational> expected{Q(9, 10), Q(4, 5), Q(7, 10), Q(3, 5), Q(1, 2)};
    ASSERT_EQ(rows.size(), expected.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_EQ(rows[i].n_true.value(), expected[i]);
        EXPECT_EQ(rows[i].n_false.value(), 0);
    }
}

TEST(Timeline, RangeHandling) {
    auto single = timeline(machines_kb(), machine_schemas(), "A", Interval::point(5), 1);
    ASSERT_EQ(single.size(), 1U);
    auto uneven = timeline(machines_kb(), machine_schemas(), "A", Interval::closed(0, 1), Q(2, 5));
    ASSERT_EQ(uneven.size(), 4U);
    EXPECT_EQ(uneven.back().t, TimePoint(1));
    EXPECT_THROW(timeline(machines_kb(), machine_schemas(), "A", Interval::closed(0, 1), 0), DomainError);
    EXPECT_THROW(timeline(machines_kb(), machine_schemas(), "A",
                          Interval(0, Bound::Closed, TimePoint::pos_inf(), Bound::Open), 1),
                 DomainError);
}

TEST(Timeline, Csv) {
    auto rows = timeline(machines_kb(), machine_schemas(), "B", Interval::closed(14, 15), 1);
    EXPECT_EQ(timeline_csv(rows), "t,N_true,N_false,status\n14,7/10,0,Unknown\n15,4/5,1/2,Unknown\n");
    EXPECT_EQ(timeline_csv(rows, 2), "t,N_true,N_false,status\n14.00,0.70,0.00,Unknown\n15.00,0.80,0.50,Unknown\n");
}

TEST(EngineProperties, NeverAcceptsAFormulaAndItsNegation) {
    Gen gen(101);
    auto kb = machines_kb();
    auto schemas = machine_schemas();
    for (int i = 0; i < 200; ++i) {
        Rational t(gen.uniform(-50, 500), gen.uniform(1, 10));
        auto psi = gen.formula({"A", "B"}, 3);
        bool yes = nm_query_at(kb, schemas, t, psi).accepted;
        bool no = nm_query_at(kb, schemas, t, !psi).accepted;
        EXPECT_FALSE(yes && no) << to_string(t) << " " << render(psi);
    }
}

TEST(EngineProperties, InformativePointsKeepTheirHistory) {
    Gen gen(103);
    auto kb = machines_kb();
    auto schemas = machine_schemas();
    for (int i = 0; i < 200; ++i) {
        Rational t(gen.uniform(0, 300), 10);
        for (const char* f : {"A", "B"}) {
            auto status = history_status(kb, t, F(f));
            auto rows = timeline(kb, schemas, f, Interval::point(t), 1);
            if (status == BeliefStatus::True) EXPECT_EQ(rows[0].n_true, Degree::one());
            if (status == BeliefStatus::False) EXPECT_EQ(rows[0].n_false, Degree::one());
        }
    }
}

TEST(Query, TrueConditionReducesToPlainQuery) {
    auto kb = machines_kb();
    auto schemas = machine_schemas();
    auto plain = nm_query_at(kb, schemas, 15, F("!A"));
    auto cond = conditional_query_at(kb, schemas, 15, Formula::top(), F("!A"));
    EXPECT_EQ(cond.necessity, plain.necessity);
    EXPECT_EQ(cond.inconsistency, plain.inconsistency);
    EXPECT_EQ(cond.accepted, plain.accepted);
}

TEST(EngineProperties, TimelineRowsMatchIndependentQueries) {
    auto kb = machines_kb();
    auto schemas = machine_schemas();
    for (const char* f : {"A", "B"}) {
        for (const auto& row : timeline(kb, schemas, f, Interval::closed(-5, 40), Q(7, 4))) {
            EXPECT_EQ(row.n_true, nm_query_at(kb, schemas, row.t, F(f)).necessity);
            EXPECT_EQ(row.n_false, nm_query_at(kb, schemas, row.t, !F(f)).necessity);
            EXPECT_EQ(row.status, history_status(kb, row.t, F(f)));
        }
    }
}

// Where the cut is consistent and settles every fluent, the certain part
// dominates: acceptance coincides with classical entailment from the cut.
TEST(EngineProperties, InformativePointsFollowClassicalEntailment) {
    Gen gen(107);
    TimedKB kb{{Interval::closed(0, 10), F("A")}, {Interval::closed(4, 12), F("!B")}, {Interval::closed(20, 30), F("B & A")}};
    auto schemas = machine_schemas();
    for (int i = 0; i < 300; ++i) {
        Rational t(gen.uniform(0, 300), 10);
        auto gamma = cut(kb, t);
        if (!satisfiable(gamma)) continue;
        if (belief_status(gamma, F("A")) == BeliefStatus::Unknown) continue;
        if (belief_status(gamma, F("B")) == BeliefStatus::Unknown) continue;
        auto psi = gen.formula({"A", "B"}, 3);
        EXPECT_EQ(nm_query_at(kb, schemas, t, psi).accepted, entails(gamma, psi)) << to_string(t) << " " << render(psi);
    }
}
