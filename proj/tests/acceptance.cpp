// Acceptance suite: each published value the library must reproduce is a
// numbered check with one PASS/FAIL line.  Exit code is the failure count.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "stuq/cli.hpp"
#include "stuq/coloring.hpp"
#include "stuq/enumerate.hpp"
#include "stuq/fixtures.hpp"
#include "stuq/io.hpp"
#include "stuq/presentation.hpp"
#include "stuq/rna.hpp"

using namespace stuq;

namespace {

struct CheckFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& what) {
    if (!cond) throw CheckFailed(what);
}

template <typename A, typename B>
void expect_eq(const A& a, const B& b, const std::string& what) {
    if (!(a == static_cast<A>(b))) {
        std::ostringstream msg;
        msg << what << " (got " << a << ", expected " << b << ")";
        throw CheckFailed(msg.str());
    }
}

std::string data_file(const std::string& name) {
    std::ifstream in(std::string(STUQ_DATA_DIR) + "/" + name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// --- criteria -------------------------------------------------------------

void criterion1_affine_reproduction() {
    const std::string expected =
        "0 2 1 | 0 1 2 | 0 0 0 | 0 1 2 | 0 2 1\n"
        "2 1 0 | 0 1 2 | 1 1 1 | 0 1 2 | 2 1 0\n"
        "1 0 2 | 0 1 2 | 2 2 2 | 0 1 2 | 1 0 2\n";
    expect(serialize_block_matrix(make_affine(3, 2, 1, 0)) == expected,
           "affine(3,2,1,0) block matrix differs from the published one");
    expect(parse_block_matrix(expected) == make_affine(3, 2, 1, 0),
           "published block matrix does not parse back to affine(3,2,1,0)");
}

void criterion2_axiom_soundness() {
    const Stuquandle structures[2] = {fixture_stuquandle("z3_affine"),
                                      fixture_stuquandle("z3_table")};
    for (const Stuquandle& x : structures)
        expect(check_axioms(x).passed, "published structure fails check_axioms");

    std::mt19937 rng(6573);
    for (const Stuquandle& x : structures) {
        int rejected = 0, accepted_genuine = 0;
        for (int trial = 0; trial < 100; ++trial) {
            Stuquandle y = x;
            Table* tables[5] = {&y.star, &y.r1, &y.r2, &y.r3, &y.r4};
            Table& t = *tables[rng() % 5];
            int cell = static_cast<int>(rng() % (x.n * x.n));
            int bump = 1 + static_cast<int>(rng() % (x.n - 1));
            t[cell / x.n][cell % x.n] = (t[cell / x.n][cell % x.n] + bump) % x.n;

            bool mine = check_axioms(y.n, y.star, y.r1, y.r2, y.r3, y.r4).passed;
            bool truth = oracle::stuquandle_ok(y.n, y.star, y.r1, y.r2, y.r3, y.r4);
            expect(mine == truth, "checker verdict disagrees with brute-force oracle");
            if (!mine) ++rejected;
            if (mine) ++accepted_genuine;
        }
        expect(rejected + accepted_genuine == 100, "mutation bookkeeping");
        expect(rejected > 0, "no mutation was rejected at all");
    }
}

void criterion3_affine_completeness() {
    int built = 0;
    for (int n = 2; n <= 8; ++n)
        for (const auto& [p, x] : enumerate_affine(n)) {
            expect(check_axioms(x, true).passed,
                   "affine structure fails axioms at n=" + std::to_string(n));
            ++built;
        }
    expect_eq(built, 776, "number of affine structures over n=2..8");
}

void criterion4_order3_counts() {
    Stuquandle x = parse_block_matrix(data_file("z3_table.sq"));
    expect(x == fixture_stuquandle("z3_table"), "shipped z3_table.sq drifted");
    expect_eq(count_colorings(fixture("S1"), x), 0, "Col(S1)");
    expect_eq(count_colorings(fixture("S2"), x), 2, "Col(S2)");
}

void criterion5_rna_values() {
    const Stuquandle x = make_affine(4, 1, 2, 1);
    ArcDiagram f1 = parse_arc_diagram(data_file("fold1.arc"));
    ArcDiagram f2 = parse_arc_diagram(data_file("fold2.arc"));
    expect_eq(rna_invariant(f1, x), 64, "invariant of the first folding");
    expect_eq(rna_invariant(f2, x), 4, "invariant of the second folding");
    expect_eq(signed_sticking_number(to_stuck_diagram(f1)), -2, "sticking of folding 1");
    expect_eq(signed_sticking_number(to_stuck_diagram(f2)), -2, "sticking of folding 2");
}

void criterion6_batch_table() {
    std::vector<const char*> argv = {"stuq", "count", "--stuquandle",
                                     "affine:12,11,10,11", "--json"};
    std::vector<std::string> specs;
    for (const char* n : {"0k+", "0k-", "2k+", "2k-", "3k+", "3k-", "4k+", "4k-"})
        specs.push_back(std::string("fixtures:") + n);
    for (const std::string& s : specs) {
        argv.push_back("--diagram");
        argv.push_back(s.c_str());
    }
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    expect_eq(code, 0, "batch count exit code");

    auto rows = nlohmann::json::parse(out.str());
    expect_eq(rows.size(), std::size_t(8), "batch row count");
    std::map<std::string, std::pair<int, std::uint64_t>> want = {
        {"fixtures:0k-", {-1, 24}}, {"fixtures:4k-", {-1, 24}},
        {"fixtures:3k-", {-1, 48}}, {"fixtures:2k-", {-1, 144}},
        {"fixtures:2k+", {1, 12}},  {"fixtures:3k+", {1, 12}},
        {"fixtures:4k+", {1, 12}},  {"fixtures:0k+", {1, 36}}};
    for (const auto& row : rows) {
        auto it = want.find(row.at("diagram").get<std::string>());
        expect(it != want.end(), "unexpected row in batch table");
        expect_eq(row.at("sticking").get<int>(), it->second.first,
                  "sticking of " + it->first);
        expect_eq(row.at("count").get<std::uint64_t>(), it->second.second,
                  "count of " + it->first);
    }
}

void criterion7_oracle_equivalence() {
    std::mt19937 rng(99173);
    std::vector<Stuquandle> sample;
    while (sample.size() < 20) {
        int n = 1 + static_cast<int>(rng() % 4);
        int a = static_cast<int>(rng() % n);
        if (std::gcd(a == 0 ? n : a, n) != 1) continue;
        sample.push_back(make_affine(n, a, static_cast<int>(rng() % n),
                                     static_cast<int>(rng() % n)));
    }
    for (const auto& [name, d] : fixtures()) {
        ValidationResult v = validate(d);
        for (const Stuquandle& x : sample) {
            double total = 1;
            bool small = true;
            for (int i = 0; i < v.semiarcs && small; ++i)
                if ((total *= x.n) > 1e6) small = false;
            if (!small) continue;
            expect_eq(count_colorings(d, x), brute_force_count(d, x),
                      "solver vs brute force on " + name);
        }
    }
}

void criterion8_move_invariance() {
    for (const MovePair& p : reidemeister_pairs())
        for (const auto& [name, x] : fixture_stuquandles())
            expect_eq(count_colorings(fixture(p.lhs), x),
                      count_colorings(fixture(p.rhs), x),
                      "move " + p.name + " over " + name);
}

void criterion9_isomorphism_invariance() {
    std::mt19937 rng(5417);
    const Stuquandle& x = fixture_stuquandle("z3_affine");
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<int> perm(x.n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Stuquandle y = relabel(x, perm);
        auto f = are_isomorphic(x, y);
        expect(f.has_value(), "relabeled copy not recognized as isomorphic");
        for (int u = 0; u < x.n; ++u)
            for (int v = 0; v < x.n; ++v)
                for (Op o : {Op::Star, Op::R1, Op::R2, Op::R3, Op::R4})
                    expect(y.op(o, (*f)[u], (*f)[v]) == (*f)[x.op(o, u, v)],
                           "returned map is not a homomorphism");
        for (const auto& [name, d] : fixtures())
            expect_eq(count_colorings(d, x), count_colorings(d, y),
                      "counts differ on " + name + " after relabeling");
    }
}

void criterion10_presentation() {
    Presentation p = simplify(presentation(fixture("hopf_stuck")));
    expect_eq(p.generators.size(), std::size_t(2), "generator count");
    expect_eq(p.relations.size(), std::size_t(2), "relation count");
    int x = p.generators[0], y = p.generators[1];
    Term r3yx = Term::apply(Op::R3, Term::leaf(y), Term::leaf(x));
    Term r4yx = Term::apply(Op::R4, Term::leaf(y), Term::leaf(x));
    expect(p.relations[0] == Relation{Term::leaf(x), r4yx}, "x = R4(y,x)");
    expect(p.relations[1] == Relation{Term::leaf(y),
                                      Term::apply(Op::Star, r3yx, Term::leaf(x))},
           "y = R3(y,x)*x");
    // substituting the first relation into the second yields the published
    // one-relation form, verbatim up to generator naming
    Term rewritten = Term::apply(Op::Star, p.relations[1].rhs.args[0], r4yx);
    expect(Relation{Term::leaf(y), rewritten} ==
               Relation{Term::leaf(y), Term::apply(Op::Star, r3yx, r4yx)},
           "R3(y,x)*R4(y,x) = y");
}

void criterion11_constant_coloring_bound() {
    for (int n = 2; n <= 6; ++n)
        for (const auto& [p, x] : enumerate_affine(n))
            for (const auto& [name, d] : fixtures()) {
                if (d.crossings.empty() && d.free_circles == 0) continue;
                expect(count_colorings(d, x) >= static_cast<std::uint64_t>(n),
                       "count below n on " + name + " at n=" + std::to_string(n));
            }
}

void criterion12_separation() {
    const Stuquandle x = make_affine(4, 1, 2, 1);
    StuckDiagram d1 = to_stuck_diagram(parse_arc_diagram(data_file("fold1.arc")));
    StuckDiagram d2 = to_stuck_diagram(parse_arc_diagram(data_file("fold2.arc")));
    expect_eq(signed_sticking_number(d1), signed_sticking_number(d2),
              "sticking numbers should tie");
    expect(count_colorings(d1, x) != count_colorings(d2, x),
           "coloring counts should differ");
    expect_eq(count_colorings(d1, x), 64, "count of folding 1");
    expect_eq(count_colorings(d2, x), 4, "count of folding 2");
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<void()> body;
    };
    const std::vector<Criterion> criteria = {
        {1, "affine structure serializes to the published block matrix",
         criterion1_affine_reproduction},
        {2, "axiom checker is sound under random single-entry mutations",
         criterion2_axiom_soundness},
        {3, "every affine structure up to order 8 satisfies the axioms",
         criterion3_affine_completeness},
        {4, "order-3 table gives 0 and 2 colorings for the two curls",
         criterion4_order3_counts},
        {5, "RNA foldings give 64 and 4 colorings with sticking number -2",
         criterion5_rna_values},
        {6, "batch table over the eight stuck knots matches the published values",
         criterion6_batch_table},
        {7, "propagating solver equals the brute-force oracle",
         criterion7_oracle_equivalence},
        {8, "coloring counts are invariant under the generating moves",
         criterion8_move_invariance},
        {9, "isomorphic structures are detected and count alike",
         criterion9_isomorphism_invariance},
        {10, "stuck Hopf presentation simplifies to the published form",
         criterion10_presentation},
        {11, "affine structures color every nonempty diagram at least n ways",
         criterion11_constant_coloring_bound},
        {12, "equal sticking numbers, different coloring counts",
         criterion12_separation},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        try {
            c.body();
            std::cout << "PASS  " << c.id << "  " << c.title << "\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "FAIL  " << c.id << "  " << c.title << ": " << e.what() << "\n";
        }
    }
    if (failures) std::cout << failures << " criterion(s) failed\n";
    return failures;
}
