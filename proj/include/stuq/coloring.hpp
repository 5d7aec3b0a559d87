#pragma once

// Coloring rules, the counting invariant, and an independent brute-force
// oracle.
//
// Rule convention in the canonical downward frame (calibrated against the
// published example values; the bar marks the over strand):
//   ClassicalA     : out_sw = in_ne,              out_se = in_nw * in_ne
//   ClassicalB     : out_sw = in_ne *bar in_nw,   out_se = in_nw
//   StuckPositive  : out_sw = R1(in_nw, in_ne),   out_se = R2(in_nw, in_ne)
//   StuckNegative  : out_sw = R3(in_ne, in_nw),   out_se = R4(in_ne, in_nw)
// A positively stuck crossing has the bar on the NE->SW strand, a negatively
// stuck crossing on the NW->SE strand.

#include <algorithm>
#include <cstdint>
#include <map>
#include <thread>
#include <vector>

#include "stuq/diagram.hpp"
#include "stuq/stuquandle.hpp"

namespace stuq {

struct RuleEquation {
    int out;       // semiarc receiving the value
    bool is_copy;  // true: out = arg1 verbatim
    Op op;         // when not a copy
    int arg1, arg2;
};

struct CrossingRule {
    int crossing;
    RuleEquation sw, se;
};

inline CrossingRule crossing_rule(const Crossing& c, int index) {
    CrossingRule r;
    r.crossing = index;
    switch (c.kind) {
        case CrossingKind::ClassicalA:
            r.sw = {c.out_sw, true, Op::Star, c.in_ne, -1};
            r.se = {c.out_se, false, Op::Star, c.in_nw, c.in_ne};
            break;
        case CrossingKind::ClassicalB:
            r.sw = {c.out_sw, false, Op::StarInv, c.in_ne, c.in_nw};
            r.se = {c.out_se, true, Op::Star, c.in_nw, -1};
            break;
        case CrossingKind::StuckPositive:
            r.sw = {c.out_sw, false, Op::R1, c.in_nw, c.in_ne};
            r.se = {c.out_se, false, Op::R2, c.in_nw, c.in_ne};
            break;
        case CrossingKind::StuckNegative:
            r.sw = {c.out_sw, false, Op::R3, c.in_ne, c.in_nw};
            r.se = {c.out_se, false, Op::R4, c.in_ne, c.in_nw};
            break;
    }
    return r;
}

inline std::vector<CrossingRule> constraints(const StuckDiagram& d) {
    std::vector<CrossingRule> out;
    out.reserve(d.crossings.size());
    for (size_t i = 0; i < d.crossings.size(); ++i)
        out.push_back(crossing_rule(d.crossings[i], static_cast<int>(i)));
    return out;
}

struct Coloring {
    std::map<int, int> semiarc;   // semiarc id -> color
    std::vector<int> free_circles; // one color per crossing-free circle

    bool operator==(const Coloring&) const = default;
};

namespace detail {

// Shared solver state over densely renumbered semiarcs.
struct SolverContext {
    int n = 0;
    const Stuquandle* x = nullptr;
    std::vector<int> ids; // dense index -> original id
    struct Eq {
        int out;
        bool is_copy;
        Op op;
        int a, b;
    };
    std::vector<Eq> eqs; // two per crossing, dense indices

    static SolverContext build(const StuckDiagram& d, const Stuquandle& x) {
        SolverContext ctx;
        ctx.n = x.n;
        ctx.x = &x;
        ctx.ids = semiarc_ids(d);
        std::map<int, int> dense;
        for (size_t i = 0; i < ctx.ids.size(); ++i) dense[ctx.ids[i]] = static_cast<int>(i);
        for (const CrossingRule& r : constraints(d))
            for (const RuleEquation* e : {&r.sw, &r.se})
                ctx.eqs.push_back({dense[e->out], e->is_copy, e->op, dense[e->arg1],
                                   e->is_copy ? -1 : dense[e->arg2]});
        return ctx;
    }

    // Forward propagation to a fixpoint; returns false on contradiction.
    bool propagate(std::vector<int>& color) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const Eq& e : eqs) {
                if (color[e.a] < 0 || (!e.is_copy && color[e.b] < 0)) continue;
                int v = e.is_copy ? color[e.a] : x->op(e.op, color[e.a], color[e.b]);
                if (color[e.out] < 0) {
                    color[e.out] = v;
                    changed = true;
                } else if (color[e.out] != v) {
                    return false;
                }
            }
        }
        return true;
    }

    template <typename OnSolution>
    void search(std::vector<int>& color, const OnSolution& on_solution) const {
        std::vector<int> work = color;
        if (!propagate(work)) return;
        auto it = std::find(work.begin(), work.end(), -1);
        if (it == work.end()) {
            // fully colored; every equation was checked by propagate
            on_solution(work);
            return;
        }
        int seed = static_cast<int>(it - work.begin());
        for (int v = 0; v < n; ++v) {
            std::vector<int> branch = work;
            branch[seed] = v;
            search(branch, on_solution);
        }
    }
};

inline std::uint64_t pow_u64(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

} // namespace detail

// Exact number of colorings of d by x.  The search seeds one semiarc at a
// time and propagates crossing rules forward, checking cycle closures as
// they complete; free circles contribute a factor n each.  With threads > 1
// the first seed's value range is split across workers; the result does not
// depend on the worker count.
inline std::uint64_t count_colorings(const StuckDiagram& d, const Stuquandle& x,
                                     int threads = 1) {
    validated(d);
    auto ctx = detail::SolverContext::build(d, x);
    std::uint64_t free_factor = detail::pow_u64(x.n, d.free_circles);
    if (ctx.ids.empty()) return free_factor;

    std::vector<int> blank(ctx.ids.size(), -1);
    if (threads <= 1) {
        std::uint64_t count = 0;
        ctx.search(blank, [&](const std::vector<int>&) { ++count; });
        return count * free_factor;
    }

    // Partition on the first seed (index 0 is always the first branch point
    // because nothing propagates from an empty assignment).
    int workers = std::min(threads, x.n);
    std::vector<std::uint64_t> partial(workers, 0);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (int v0 = w; v0 < x.n; v0 += workers) {
                std::vector<int> start = blank;
                start[0] = v0;
                ctx.search(start, [&](const std::vector<int>&) { ++partial[w]; });
            }
        });
    for (auto& t : pool) t.join();
    std::uint64_t count = 0;
    for (std::uint64_t p : partial) count += p;
    return count * free_factor;
}

// All colorings in lexicographic order (semiarc colors by ascending id,
// then free-circle colors), truncated to limit.
inline std::vector<Coloring> list_colorings(const StuckDiagram& d, const Stuquandle& x,
                                            std::size_t limit) {
    validated(d);
    if (limit == 0) return {};
    auto ctx = detail::SolverContext::build(d, x);
    std::vector<std::vector<int>> base;
    if (ctx.ids.empty()) {
        base.push_back({});
    } else {
        std::vector<int> blank(ctx.ids.size(), -1);
        ctx.search(blank, [&](const std::vector<int>& sol) { base.push_back(sol); });
        std::sort(base.begin(), base.end());
    }

    std::vector<Coloring> out;
    for (const auto& sol : base) {
        // free-circle colors run through all n^f combinations, odometer order
        std::vector<int> free(d.free_circles, 0);
        while (true) {
            Coloring c;
            for (size_t i = 0; i < ctx.ids.size(); ++i) c.semiarc[ctx.ids[i]] = sol[i];
            c.free_circles = free;
            out.push_back(std::move(c));
            if (out.size() >= limit) return out;
            int i = d.free_circles - 1;
            while (i >= 0 && free[i] == x.n - 1) free[i--] = 0;
            if (i < 0) break;
            ++free[i];
        }
    }
    return out;
}

// Re-evaluates every crossing rule on an explicit assignment.
inline bool satisfies(const StuckDiagram& d, const Stuquandle& x, const Coloring& c) {
    for (const CrossingRule& r : constraints(d))
        for (const RuleEquation* e : {&r.sw, &r.se}) {
            int lhs = c.semiarc.at(e->out);
            int rhs = e->is_copy ? c.semiarc.at(e->arg1)
                                 : x.op(e->op, c.semiarc.at(e->arg1), c.semiarc.at(e->arg2));
            if (lhs != rhs) return false;
        }
    return true;
}

// Independent oracle: enumerates all n^semiarcs assignments outright.
// Throws DomainError when n^semiarcs exceeds the budget.
inline std::uint64_t brute_force_count(const StuckDiagram& d, const Stuquandle& x,
                                       std::uint64_t budget = 100'000'000ULL) {
    ValidationResult v = validated(d);
    double total = 1;
    for (int i = 0; i < v.semiarcs; ++i) {
        total *= x.n;
        if (total > static_cast<double>(budget))
            throw DomainError("brute-force budget exceeded: " + std::to_string(x.n) + "^" +
                              std::to_string(v.semiarcs) + " assignments");
    }

    auto ctx = detail::SolverContext::build(d, x);
    std::size_t m = ctx.ids.size();
    std::vector<int> color(m, 0);
    std::uint64_t count = 0;
    while (true) {
        bool ok = true;
        for (const auto& e : ctx.eqs) {
            int val = e.is_copy ? color[e.a] : x.op(e.op, color[e.a], color[e.b]);
            if (color[e.out] != val) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
        std::size_t i = 0;
        while (i < m && color[i] == x.n - 1) color[i++] = 0;
        if (i == m) break;
        ++color[i];
    }
    return count * detail::pow_u64(x.n, d.free_circles);
}

} // namespace stuq
