#include <doctest.h>

#include "stuq/diagram.hpp"
#include "stuq/fixtures.hpp"

using namespace stuq;
using K = CrossingKind;

TEST_CASE("validate accepts the stuck Hopf link") {
    ValidationResult v = validate(fixture("hopf_stuck"));
    REQUIRE(v.ok);
    CHECK(v.components == 2);
    CHECK(v.semiarcs == 4);
}

TEST_CASE("validate rejects duplicated and dangling ports") {
    SUBCASE("duplicated input role") {
        StuckDiagram d{{{K::StuckPositive, 0, 0, 1, 2}}, 0};
        ValidationResult v = validate(d);
        CHECK(!v.ok);
        bool dup = false;
        for (const auto& e : v.errors)
            if (e.find("semiarc 0") != std::string::npos &&
                e.find("input") != std::string::npos)
                dup = true;
        CHECK(dup);
    }
    SUBCASE("dangling semiarc") {
        StuckDiagram d{{{K::ClassicalA, 0, 1, 0, 2}}, 0}; // 1 and 2 appear once
        ValidationResult v = validate(d);
        CHECK(!v.ok);
        CHECK(v.errors.size() >= 2);
    }
    SUBCASE("negative free_circles") {
        CHECK(!validate(StuckDiagram{{}, -1}).ok);
    }
}

TEST_CASE("the empty diagram and bare circles are valid") {
    ValidationResult empty = validate(fixture("empty"));
    REQUIRE(empty.ok);
    CHECK(empty.components == 0);
    CHECK(empty.semiarcs == 0);

    ValidationResult circle = validate(fixture("unknot"));
    REQUIRE(circle.ok);
    CHECK(circle.components == 1);
    CHECK(circle.semiarcs == 1);
}

TEST_CASE("signed sticking number") {
    CHECK(signed_sticking_number(fixture("rna1_closed")) == -2);
    CHECK(signed_sticking_number(fixture("rna2_closed")) == -2);
    CHECK(signed_sticking_number(fixture("kink_a")) == 0);
    for (const char* name : {"0k+", "2k+", "3k+", "4k+"})
        CHECK(signed_sticking_number(fixture(name)) == 1);
    for (const char* name : {"0k-", "2k-", "3k-", "4k-"})
        CHECK(signed_sticking_number(fixture(name)) == -1);
}

TEST_CASE("sticking number ignores relabeling and crossing order") {
    StuckDiagram d = fixture("rna2_closed");
    StuckDiagram shuffled = d;
    std::swap(shuffled.crossings[0], shuffled.crossings[3]);
    for (Crossing& c : shuffled.crossings)
        for (int* port : {&c.in_nw, &c.in_ne, &c.out_sw, &c.out_se}) *port += 100;
    REQUIRE(validate(shuffled).ok);
    CHECK(signed_sticking_number(shuffled) == signed_sticking_number(d));
}

TEST_CASE("component counts of the stuck knots and links") {
    for (const char* name : {"0k+", "0k-", "2k+", "2k-", "3k+", "3k-", "4k+", "4k-",
                             "rna1_closed", "rna2_closed"})
        CHECK(components(fixture(name)) == 1);
    for (const char* name : {"0l+", "0l-", "hopf_stuck", "S1", "S2"})
        CHECK(components(fixture(name)) == 2);
}

TEST_CASE("every shipped fixture validates") {
    for (const auto& [name, d] : fixtures()) {
        ValidationResult v = validate(d);
        REQUIRE_MESSAGE(v.ok, "fixture " << name);
    }
    CHECK_THROWS_AS(fixture("no_such_thing"), DomainError);
}

TEST_CASE("move pair partners have equal component counts") {
    for (const MovePair& p : reidemeister_pairs())
        CHECK(components(fixture(p.lhs)) == components(fixture(p.rhs)));
}

TEST_CASE("diagram json round trip") {
    const StuckDiagram& d = fixture("rna2_closed");
    CHECK(diagram_from_json(diagram_to_json(d)) == d);
    CHECK_THROWS_AS(diagram_from_json(nlohmann::json{{"free_circles", 0}}), ParseError);
    CHECK_THROWS_AS(kind_from_name("Sideways"), ParseError);
}
