#include <unistd.h>

#include <gtest/gtest.h>

#include "cli_runner.hpp"

using namespace dpers::test;

namespace {

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        kb = box.write("machines.kb", kMachinesKb);
        schema = box.write("machines.schema", kMachinesSchema);
        both = "--kb '" + kb + "' --schema '" + schema + "' ";
    }
    CliSandbox box;
    std::string kb, schema, both;
};

}  // namespace

TEST_F(Cli, QueryAcceptsNotA) {
    auto r = box.run(both + "query 15 '!A'");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "t: 15\nformula: !A\nnecessity: 4/5\ninconsistency: 1/2\naccepted: yes\n");
}

TEST_F(Cli, QueryRejectsA) {
    auto r = box.run(both + "query 15 A");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("necessity: 1/2\ninconsistency: 1/2\naccepted: no"), std::string::npos) << r.out;
}

TEST_F(Cli, ConditionalQuery) {
    auto r = box.run(both + "query 15 '!B' --given A");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("bound: 4/5\naccepted: yes"), std::string::npos) << r.out;
}

TEST_F(Cli, DecimalRendering) {
    auto r = box.run(both + "--decimal 2 query 35 B");
    EXPECT_NE(r.out.find("necessity: 0.50\ninconsistency: 0.00"), std::string::npos) << r.out;
}

TEST_F(Cli, Problems) {
    auto a = box.run("--kb '" + kb + "' problems A");
    EXPECT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.out, "BackwardUnbounded (-inf,0) left=- right=True\nForwardUnbounded (10,+inf) left=True right=-\n");
    auto b = box.run("--kb '" + kb + "' problems B");
    EXPECT_EQ(b.out, "BackwardUnbounded (-inf,17) left=- right=True\nForwardUnbounded (30,+inf) left=True right=-\n");
}

TEST_F(Cli, Timeline) {
    auto r = box.run(both + "timeline B 31 35 1");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out,
              "t,N_true,N_false,status\n31,9/10,0,Unknown\n32,4/5,0,Unknown\n33,7/10,0,Unknown\n"
              "34,3/5,0,Unknown\n35,1/2,0,Unknown\n");
}

TEST_F(Cli, Status) {
    EXPECT_EQ(box.run("--kb '" + kb + "' status 5 A").out, "True\n");
    EXPECT_EQ(box.run("--kb '" + kb + "' status 15 A").out, "Unknown\n");
    auto clash = box.write("clash.kb", "at [0,1] : A\nat [0,1] : !A\n");
    EXPECT_EQ(box.run("--kb '" + clash + "' status 1/2 B").out, "Unknown\n");
}

TEST_F(Cli, ValidateReferenceSchema) {
    auto r = box.run("--schema '" + schema + "' validate");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("\nvalid\n"), std::string::npos);
    EXPECT_NE(r.out.find("negation symmetry A: FAIL (optional)"), std::string::npos);
    auto displayed = box.run("--schema '" + schema + "' validate --displayed-h-direction --lengths 5 10");
    EXPECT_EQ(displayed.exit_code, 3);
    EXPECT_NE(displayed.out.find("H1 A lengths 5,10: FAIL"), std::string::npos) << displayed.out;
}

TEST_F(Cli, ExitCodeParseError) {
    auto bad = box.write("bad.kb", "at [0,1] : A\nat [0,1 : B\n");
    auto r = box.run("--kb '" + bad + "' status 0 A");
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_NE(box.last_stderr().find("bad.kb:2:"), std::string::npos) << box.last_stderr();
    EXPECT_EQ(box.run("--kb '" + kb + "' status 0 'A &'").exit_code, 2);
    EXPECT_EQ(box.run("--kb '" + kb + "' status zero A").exit_code, 2);
    EXPECT_EQ(box.run("frobnicate").exit_code, 2);
}

TEST_F(Cli, ExitCodeSemanticError) {
    auto rising = box.write("rising.schema", kRisingSchema);
    auto r = box.run("--schema '" + rising + "' validate");
    EXPECT_EQ(r.exit_code, 3);
    EXPECT_NE(box.last_stderr().find("D1"), std::string::npos) << box.last_stderr();
    EXPECT_EQ(box.run("--kb '" + kb + "' problems C").exit_code, 3);
    EXPECT_EQ(box.run(both + "timeline A 0 5 0").exit_code, 3);
}

TEST_F(Cli, ExitCodeClosednessViolation) {
    auto open = box.write("open.kb", "at (0,5) : A\n");
    EXPECT_EQ(box.run("--kb '" + open + "' problems A").exit_code, 4);
    EXPECT_NE(box.last_stderr().find("(0,5)"), std::string::npos);
    EXPECT_EQ(box.run("--kb '" + open + "' --schema '" + schema + "' query 7 A").exit_code, 4);
}
