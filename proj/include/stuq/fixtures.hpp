#pragma once

// Shipped diagrams and structures used throughout the tests and the CLI.
//
// The stuck-knot entries 0k/2k/3k/4k encode the stuck knots derived from the
// first four 2-bouquet graphs of type K, one stuck crossing each, in the
// positively (+) and negatively (-) stuck variant.  Their transcriptions are
// validated against the known counting values rather than against pictures;
// see tests/acceptance.cpp.  The r*-prefixed entries come in pairs related
// by one generating move, closed up into honest diagrams.

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "stuq/diagram.hpp"
#include "stuq/stuquandle.hpp"

namespace stuq {

namespace detail {

struct BraidLetter {
    int pos; // crossing between strand positions pos and pos+1
    CrossingKind kind;
};

// Trace closure of a braid word: downward strands, position pos enters the
// crossing at NW and continues at position pos+1.
inline StuckDiagram braid_closure(int strands, const std::vector<BraidLetter>& word) {
    std::vector<int> cur(strands);
    std::iota(cur.begin(), cur.end(), 0);
    int next = strands;
    StuckDiagram d;
    for (const BraidLetter& l : word) {
        int se = next++, sw = next++;
        d.crossings.push_back({l.kind, cur[l.pos], cur[l.pos + 1], sw, se});
        cur[l.pos] = sw;
        cur[l.pos + 1] = se;
    }
    for (int j = 0; j < strands; ++j) {
        if (cur[j] == j) {
            ++d.free_circles;
            continue;
        }
        for (Crossing& c : d.crossings)
            for (int* port : {&c.in_nw, &c.in_ne, &c.out_sw, &c.out_se})
                if (*port == cur[j]) *port = j;
    }
    // renumber semiarcs densely
    std::map<int, int> dense;
    for (const Crossing& c : d.crossings)
        for (int port : {c.in_nw, c.in_ne, c.out_sw, c.out_se}) dense.emplace(port, 0);
    int k = 0;
    for (auto& [id, v] : dense) v = k++;
    for (Crossing& c : d.crossings)
        for (int* port : {&c.in_nw, &c.in_ne, &c.out_sw, &c.out_se}) *port = dense[*port];
    return d;
}

} // namespace detail

// Named catalog of shipped diagrams.  Throws DomainError for unknown names.
inline const std::map<std::string, StuckDiagram>& fixtures() {
    static const std::map<std::string, StuckDiagram> catalog = [] {
        using K = CrossingKind;
        std::map<std::string, StuckDiagram> m;

        m["empty"] = StuckDiagram{};
        m["unknot"] = StuckDiagram{{}, 1};
        m["unlink2"] = StuckDiagram{{}, 2};
        m["kink_a"] = StuckDiagram{{{K::ClassicalA, 0, 1, 0, 1}}, 0};
        m["kink_b"] = StuckDiagram{{{K::ClassicalB, 0, 1, 0, 1}}, 0};

        // Two circles, one stuck crossing and one classical crossing.  The
        // negative variant is the stuck Hopf link whose presentation is
        // < x,y,z | x = R4(y,x), z = R3(y,x), z*x = y >.
        auto hopf = [](K stuck) {
            return StuckDiagram{{{stuck, 0, 1, 2, 3}, {K::ClassicalA, 2, 3, 0, 1}}, 0};
        };
        m["hopf_stuck"] = hopf(K::StuckNegative);
        m["S1"] = hopf(K::StuckNegative);
        m["S2"] = hopf(K::StuckPositive);

        // One stuck crossing alone: knot-type (single component) and
        // link-type (two components) closures.
        m["0k+"] = StuckDiagram{{{K::StuckPositive, 0, 1, 0, 1}}, 0};
        m["0k-"] = StuckDiagram{{{K::StuckNegative, 0, 1, 0, 1}}, 0};
        m["0l+"] = StuckDiagram{{{K::StuckPositive, 0, 1, 1, 0}}, 0};
        m["0l-"] = StuckDiagram{{{K::StuckNegative, 0, 1, 1, 0}}, 0};

        // Stuck knots with 2..4 classical crossings, one strand each.
        // Semiarc i enters the strand's i-th crossing pass and leaves on
        // semiarc i+1 (mod 2m); the 2k wiring is the trefoil with one
        // crossing made stuck.
        auto k2 = [&](K stuck) {
            return StuckDiagram{{{stuck, 0, 3, 4, 1},
                                 {K::ClassicalA, 1, 4, 5, 2},
                                 {K::ClassicalA, 5, 2, 3, 0}},
                                0};
        };
        auto k3 = [&](K stuck) {
            return StuckDiagram{{{stuck, 0, 3, 4, 1},
                                 {K::ClassicalA, 4, 1, 2, 5},
                                 {K::ClassicalA, 2, 6, 7, 3},
                                 {K::ClassicalA, 5, 7, 0, 6}},
                                0};
        };
        auto k4 = [&](K stuck) {
            return StuckDiagram{{{stuck, 0, 2, 3, 1},
                                 {K::ClassicalA, 1, 3, 4, 2},
                                 {K::ClassicalA, 4, 6, 7, 5},
                                 {K::ClassicalA, 5, 8, 9, 6},
                                 {K::ClassicalA, 7, 9, 0, 8}},
                                0};
        };
        m["2k+"] = k2(K::StuckPositive);
        m["2k-"] = k2(K::StuckNegative);
        m["3k+"] = k3(K::StuckPositive);
        m["3k-"] = k3(K::StuckNegative);
        m["4k+"] = k4(K::StuckPositive);
        m["4k-"] = k4(K::StuckNegative);

        // Self-closures of the two RNA foldings with two antiparallel bonds:
        // nested bonds close with no classical crossing, interleaved bonds
        // force two classical over-passes of the closure arc.
        m["rna1_closed"] = StuckDiagram{
            {{K::StuckNegative, 3, 0, 1, 0}, {K::StuckNegative, 1, 2, 3, 2}}, 0};
        m["rna2_closed"] = StuckDiagram{{{K::StuckNegative, 2, 3, 6, 7},
                                         {K::ClassicalA, 7, 0, 1, 4},
                                         {K::StuckNegative, 5, 4, 3, 0},
                                         {K::ClassicalA, 6, 1, 2, 5}},
                                        0};

        // Closed-up generating-move pairs.
        m["r2a_poke"] = detail::braid_closure(
            2, {{0, K::ClassicalA}, {0, K::ClassicalB}});
        m["r3a_lhs"] = detail::braid_closure(
            3, {{0, K::ClassicalA}, {1, K::ClassicalA}, {0, K::ClassicalA}});
        m["r3a_rhs"] = detail::braid_closure(
            3, {{1, K::ClassicalA}, {0, K::ClassicalA}, {1, K::ClassicalA}});

        // Stuck crossing sliding through a classical crossing of its own two
        // strands (one move per stuck sign).
        auto o5a_rhs = [](K stuck) {
            return StuckDiagram{{{K::ClassicalA, 1, 0, 2, 3}, {stuck, 2, 3, 1, 0}}, 0};
        };
        m["r5a_pos_lhs"] = hopf(K::StuckPositive);
        m["r5a_pos_rhs"] = o5a_rhs(K::StuckPositive);
        m["r5a_neg_lhs"] = hopf(K::StuckNegative);
        m["r5a_neg_rhs"] = o5a_rhs(K::StuckNegative);

        // A third strand passing over both strands of a stuck crossing,
        // below (lhs) or above (rhs) it.
        auto o4a = [](K stuck, bool above) {
            if (!above)
                return StuckDiagram{{{stuck, 1, 2, 3, 0},
                                     {K::ClassicalB, 5, 0, 1, 4},
                                     {K::ClassicalA, 3, 4, 5, 2}},
                                    0};
            return StuckDiagram{{{stuck, 0, 3, 2, 1},
                                 {K::ClassicalB, 4, 1, 0, 5},
                                 {K::ClassicalA, 2, 5, 4, 3}},
                                0};
        };
        m["r4a_pos_lhs"] = o4a(K::StuckPositive, false);
        m["r4a_pos_rhs"] = o4a(K::StuckPositive, true);
        m["r4a_neg_lhs"] = o4a(K::StuckNegative, false);
        m["r4a_neg_rhs"] = o4a(K::StuckNegative, true);

        // Same slide with the third strand passing under both strands.
        auto o4e = [](K stuck, bool above) {
            if (!above)
                return StuckDiagram{{{stuck, 1, 2, 3, 0},
                                     {K::ClassicalA, 5, 0, 1, 4},
                                     {K::ClassicalB, 3, 4, 5, 2}},
                                    0};
            return StuckDiagram{{{stuck, 0, 3, 2, 1},
                                 {K::ClassicalA, 4, 1, 0, 5},
                                 {K::ClassicalB, 2, 5, 4, 3}},
                                0};
        };
        m["r4e_pos_lhs"] = o4e(K::StuckPositive, false);
        m["r4e_pos_rhs"] = o4e(K::StuckPositive, true);
        m["r4e_neg_lhs"] = o4e(K::StuckNegative, false);
        m["r4e_neg_rhs"] = o4e(K::StuckNegative, true);

        return m;
    }();
    return catalog;
}

inline const StuckDiagram& fixture(const std::string& name) {
    const auto& m = fixtures();
    auto it = m.find(name);
    if (it == m.end()) throw DomainError("unknown fixture diagram '" + name + "'");
    return it->second;
}

struct MovePair {
    std::string name;
    std::string lhs, rhs;
};

// Diagram pairs differing by one generating move.
inline const std::vector<MovePair>& reidemeister_pairs() {
    static const std::vector<MovePair> pairs = {
        {"r1a", "unknot", "kink_a"},       {"r1b", "unknot", "kink_b"},
        {"r2a", "unlink2", "r2a_poke"},    {"r3a", "r3a_lhs", "r3a_rhs"},
        {"r4a_pos", "r4a_pos_lhs", "r4a_pos_rhs"},
        {"r4a_neg", "r4a_neg_lhs", "r4a_neg_rhs"},
        {"r4e_pos", "r4e_pos_lhs", "r4e_pos_rhs"},
        {"r4e_neg", "r4e_neg_lhs", "r4e_neg_rhs"},
        {"r5a_pos", "r5a_pos_lhs", "r5a_pos_rhs"},
        {"r5a_neg", "r5a_neg_lhs", "r5a_neg_rhs"},
    };
    return pairs;
}

// Shipped finite stuquandles.
inline const std::map<std::string, Stuquandle>& fixture_stuquandles() {
    static const std::map<std::string, Stuquandle> catalog = [] {
        std::map<std::string, Stuquandle> m;
        m["z3_affine"] = make_affine(3, 2, 1, 0);
        m["z4_affine"] = make_affine(4, 1, 2, 1);
        m["z5_affine"] = make_affine(5, 3, 2, 4);
        m["z12_affine"] = make_affine(12, 11, 10, 11);
        // Non-affine order-3 structure over the trivial quandle x*y = x.
        m["z3_table"] = from_tables(3,
                                    {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}},   // star
                                    {{0, 1, 1}, {2, 1, 2}, {2, 0, 1}},   // R1
                                    {{0, 2, 2}, {1, 1, 0}, {1, 2, 1}},   // R2
                                    {{1, 1, 1}, {1, 2, 2}, {2, 1, 0}},   // R3
                                    {{1, 1, 2}, {1, 2, 1}, {1, 2, 0}});  // R4
        return m;
    }();
    return catalog;
}

inline const Stuquandle& fixture_stuquandle(const std::string& name) {
    const auto& m = fixture_stuquandles();
    auto it = m.find(name);
    if (it == m.end()) throw DomainError("unknown fixture stuquandle '" + name + "'");
    return it->second;
}

} // namespace stuq
