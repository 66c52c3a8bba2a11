#include "hssep/types.hpp"

#include "doctest.h"

using namespace hssep;

TEST_CASE("system splits parse and report their ratio structure") {
    SystemSplit s = SystemSplit::parse("2x2");
    CHECK(s.n == 4);
    CHECK(s.block == 2);
    CHECK(s.ratio_count == 1);
    auto r = s.ratio_defs();
    REQUIRE(r.size() == 1);
    CHECK(r[0].a == 1);
    CHECK(r[0].b == 4);
    CHECK(r[0].c == 2);
    CHECK(r[0].d == 3);

    CHECK(SystemSplit::parse("2x3").ratio_count == 2);
    CHECK(SystemSplit::parse("3x3").ratio_count == 4);
    CHECK(SystemSplit::parse("4x2").ratio_count == 3);
    CHECK(SystemSplit::parse("2x2x2").ratio_count == 3);
    CHECK(SystemSplit::parse("2x3").n == 6);
    CHECK(SystemSplit::parse("3x3").n == 9);
    CHECK(SystemSplit::parse("4x2").n == 8);
    CHECK(SystemSplit::parse("2x2x2").n == 8);
    CHECK_THROWS_AS(SystemSplit::parse("5x5"), std::invalid_argument);
}

TEST_CASE("qubit-qutrit ratio definitions") {
    auto r = SystemSplit::parse("2x3").ratio_defs();
    REQUIRE(r.size() == 2);
    CHECK(r[0].a == 1);
    CHECK(r[0].b == 5);
    CHECK(r[0].c == 2);
    CHECK(r[0].d == 4);
    CHECK(r[1].a == 2);
    CHECK(r[1].b == 6);
    CHECK(r[1].c == 3);
    CHECK(r[1].d == 5);
}

TEST_CASE("scenario ids round-trip through parse") {
    for (const char* id : {"2x2:real:[(2,3)]", "2x2:complex:[(1,4),(2,3)]",
                           "2x2:quaternion:full", "2x3:real:[(1,2),(3,4)]",
                           "2x2:mixed:[c(1,2),r(1,4)]", "3x3:complex:[(2,9),(6,9)]",
                           "2x2x2:complex:[(1,8),(5,7)]", "4x2:complex:[(2,5),(4,7)]"}) {
        ScenarioSpec s = ScenarioSpec::parse(id);
        CHECK(s.id() == id);
    }
    CHECK_THROWS_AS(ScenarioSpec::parse("2x2:real:[(4,5)]"), std::invalid_argument);
    CHECK_THROWS_AS(ScenarioSpec::parse("2x2:bogus:[(1,2)]"), std::invalid_argument);
}

TEST_CASE("nullified pair count") {
    ScenarioSpec s = ScenarioSpec::parse("2x2:real:[(1,4),(2,3)]");
    CHECK(s.nullified() == 4);
    CHECK(s.homogeneous());
    ScenarioSpec m = ScenarioSpec::parse("2x2:mixed:[c(1,2),r(1,4)]");
    CHECK_FALSE(m.homogeneous());
    CHECK(m.nullified() == 4);
    ScenarioSpec full = ScenarioSpec::parse("2x3:complex:full");
    CHECK(full.nullified() == 0);
    CHECK(full.active.size() == 15);
}

TEST_CASE("ratio variables expose nu and the eta product") {
    RatioVars v;
    v.values = Eigen::Vector2d(0.5, 3.0);
    CHECK(v.nu() == doctest::Approx(0.5));
    CHECK(v.eta() == doctest::Approx(1.5));
}
