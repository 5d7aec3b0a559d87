#include <doctest.h>

#include "stuq/fixtures.hpp"
#include "stuq/presentation.hpp"

using namespace stuq;

namespace {
Term V(int i) { return Term::leaf(i); }
Term T(Op o, Term a, Term b) { return Term::apply(o, std::move(a), std::move(b)); }
} // namespace

TEST_CASE("term utilities") {
    Term t = T(Op::Star, V(0), T(Op::R3, V(1), V(0)));
    CHECK(contains_var(t, 1));
    CHECK(!contains_var(t, 2));
    CHECK(substitute(t, 1, V(5)) == T(Op::Star, V(0), T(Op::R3, V(5), V(0))));
    CHECK(normalize(T(Op::Star, V(3), V(3))) == V(3));
    CHECK(normalize(T(Op::StarInv, t, t)) == normalize(t));
    CHECK(normalize(T(Op::R1, V(3), V(3))) == T(Op::R1, V(3), V(3)));
}

TEST_CASE("stuck Hopf presentation: arcs at the classical crossing merge") {
    Presentation p = presentation(fixture("hopf_stuck"));
    CHECK(p.generators == std::vector<int>{0, 1, 2});
    REQUIRE(p.relations.size() == 3);
    CHECK(p.relations[0] == Relation{V(2), T(Op::R3, V(1), V(0))});
    CHECK(p.relations[1] == Relation{V(0), T(Op::R4, V(1), V(0))});
    CHECK(p.relations[2] == Relation{V(1), T(Op::Star, V(2), V(0))});
}

TEST_CASE("stuck Hopf simplifies to two generators") {
    Presentation p = simplify(presentation(fixture("hopf_stuck")));
    REQUIRE(p.generators == std::vector<int>{0, 1});
    REQUIRE(p.relations.size() == 2);
    // x = R4(y, x) and y = R3(y, x) * x
    CHECK(p.relations[0] == Relation{V(0), T(Op::R4, V(1), V(0))});
    CHECK(p.relations[1] == Relation{V(1), T(Op::Star, T(Op::R3, V(1), V(0)), V(0))});
}

TEST_CASE("substituting the first Hopf relation gives the one-relation form") {
    Presentation p = simplify(presentation(fixture("hopf_stuck")));
    const Term& rhs = p.relations[1].rhs;
    REQUIRE(rhs.op == Op::Star);
    REQUIRE(rhs.args[1] == V(0));
    Term rewritten = T(Op::Star, rhs.args[0], p.relations[0].rhs);
    CHECK(rewritten ==
          T(Op::Star, T(Op::R3, V(1), V(0)), T(Op::R4, V(1), V(0))));
}

TEST_CASE("a kink presents the one-generator free structure") {
    Presentation raw = presentation(fixture("kink_a"));
    REQUIRE(raw.generators.size() == 1);
    REQUIRE(raw.relations.size() == 1);
    CHECK(raw.relations[0] == Relation{V(0), T(Op::Star, V(0), V(0))});

    Presentation p = simplify(raw);
    CHECK(p.generators == std::vector<int>{0});
    CHECK(p.relations.empty());

    CHECK(simplify(presentation(fixture("kink_b"))).relations.empty());
}

TEST_CASE("unknot presents one free generator") {
    Presentation p = presentation(fixture("unknot"));
    CHECK(p.generators.size() == 1);
    CHECK(p.relations.empty());
}

TEST_CASE("first RNA closure simplifies to the three published equations") {
    Presentation p = simplify(presentation(fixture("rna1_closed")));
    REQUIRE(p.generators == std::vector<int>{0, 2, 3});
    REQUIRE(p.relations.size() == 3);
    Term m = T(Op::R3, V(0), V(3)); // R3(b, a)
    CHECK(p.relations[0] == Relation{V(0), T(Op::R4, V(0), V(3))}); // b = R4(b,a)
    CHECK(p.relations[1] == Relation{V(3), T(Op::R3, V(2), m)});    // a = R3(c, R3(b,a))
    CHECK(p.relations[2] == Relation{V(2), T(Op::R4, V(2), m)});    // c = R4(c, R3(b,a))
}

TEST_CASE("rendering uses prefix operators") {
    Presentation p = simplify(presentation(fixture("hopf_stuck")));
    std::string s = presentation_to_string(p);
    CHECK(s == "< x0, x1 | x0 = R4(x1, x0), x1 = star(R3(x1, x0), x0) >");
}

TEST_CASE("simplified presentations keep the same coloring count") {
    // generator elimination must not change the number of homomorphisms;
    // spot-check by solving the simplified system by brute force
    const Stuquandle& x = fixture_stuquandle("z3_table");
    Presentation p = simplify(presentation(fixture("S1")));
    std::function<int(const Term&, const std::vector<int>&)> eval =
        [&](const Term& t, const std::vector<int>& env) -> int {
        if (t.is_var()) return env[t.var];
        return x.op(t.op, eval(t.args[0], env), eval(t.args[1], env));
    };
    int count = 0;
    std::vector<int> env(2);
    for (env[0] = 0; env[0] < 3; ++env[0])
        for (env[1] = 0; env[1] < 3; ++env[1]) {
            bool ok = true;
            for (const Relation& r : p.relations)
                if (eval(r.lhs, env) != eval(r.rhs, env)) ok = false;
            if (ok) ++count;
        }
    CHECK(count == 0); // matches the published count for this diagram
}
