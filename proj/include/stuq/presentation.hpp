#pragma once

// Fundamental stuquandle presentations read off a diagram, and generator
// elimination.
//
// Generators are arc labels: semiarcs, except that the over strand at a
// classical crossing keeps its label through the crossing (its two semiarcs
// are merged).  Each stuck crossing contributes two relations, each
// classical crossing one.

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "stuq/diagram.hpp"

namespace stuq {

struct Term {
    int var = -1; // leaf when >= 0
    Op op = Op::Star;
    std::vector<Term> args;

    bool is_var() const { return var >= 0; }

    static Term leaf(int v) {
        Term t;
        t.var = v;
        return t;
    }
    static Term apply(Op op, Term a, Term b) {
        Term t;
        t.var = -1;
        t.op = op;
        t.args = {std::move(a), std::move(b)};
        return t;
    }

    bool operator==(const Term&) const = default;
};

inline bool contains_var(const Term& t, int v) {
    if (t.is_var()) return t.var == v;
    for (const Term& a : t.args)
        if (contains_var(a, v)) return true;
    return false;
}

inline Term substitute(const Term& t, int v, const Term& replacement) {
    if (t.is_var()) return t.var == v ? replacement : t;
    Term out;
    out.op = t.op;
    for (const Term& a : t.args) out.args.push_back(substitute(a, v, replacement));
    return out;
}

// Collapses x*x and x *bar x to x (quandle idempotence).
inline Term normalize(const Term& t) {
    if (t.is_var()) return t;
    Term out;
    out.op = t.op;
    for (const Term& a : t.args) out.args.push_back(normalize(a));
    if ((out.op == Op::Star || out.op == Op::StarInv) && out.args[0] == out.args[1])
        return out.args[0];
    return out;
}

struct Relation {
    Term lhs, rhs;
    bool operator==(const Relation&) const = default;
};

struct Presentation {
    std::vector<int> generators;
    std::vector<Relation> relations;
};

inline Presentation presentation(const StuckDiagram& d) {
    validated(d);

    // Union-find over semiarc ids; classical crossings identify the over
    // strand's input and output labels.
    std::map<int, int> parent;
    for (int id : semiarc_ids(d)) parent[id] = id;
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent[b] = a; // keep the smaller label
    };
    for (const Crossing& c : d.crossings) {
        if (c.kind == CrossingKind::ClassicalA) unite(c.in_ne, c.out_sw);
        if (c.kind == CrossingKind::ClassicalB) unite(c.in_nw, c.out_se);
    }

    auto leaf = [&](int id) { return Term::leaf(find(id)); };

    Presentation p;
    for (const Crossing& c : d.crossings) {
        switch (c.kind) {
            case CrossingKind::ClassicalA:
                p.relations.push_back(
                    {leaf(c.out_se), Term::apply(Op::Star, leaf(c.in_nw), leaf(c.in_ne))});
                break;
            case CrossingKind::ClassicalB:
                p.relations.push_back(
                    {leaf(c.out_sw), Term::apply(Op::StarInv, leaf(c.in_ne), leaf(c.in_nw))});
                break;
            case CrossingKind::StuckPositive:
                p.relations.push_back(
                    {leaf(c.out_sw), Term::apply(Op::R1, leaf(c.in_nw), leaf(c.in_ne))});
                p.relations.push_back(
                    {leaf(c.out_se), Term::apply(Op::R2, leaf(c.in_nw), leaf(c.in_ne))});
                break;
            case CrossingKind::StuckNegative:
                p.relations.push_back(
                    {leaf(c.out_sw), Term::apply(Op::R3, leaf(c.in_ne), leaf(c.in_nw))});
                p.relations.push_back(
                    {leaf(c.out_se), Term::apply(Op::R4, leaf(c.in_ne), leaf(c.in_nw))});
                break;
        }
    }

    for (int id : semiarc_ids(d))
        if (find(id) == id) p.generators.push_back(id);
    int next = p.generators.empty() ? 0 : p.generators.back() + 1;
    for (int i = 0; i < d.free_circles; ++i) p.generators.push_back(next + i);
    return p;
}

// Repeatedly eliminates generators with a defining relation g = w (w not
// mentioning g), merging plain label equalities onto the smaller label
// first, and drops relations made trivial by idempotence.  Deterministic:
// generators defined by a stuck-crossing operation (R1..R4 at the root) go
// first, lowest label first, then generators defined through * or *bar.
inline Presentation simplify(Presentation p) {
    auto drop_generator = [&](int g) {
        p.generators.erase(std::remove(p.generators.begin(), p.generators.end(), g),
                           p.generators.end());
    };
    auto substitute_everywhere = [&](int g, const Term& w, size_t skip) {
        for (size_t i = 0; i < p.relations.size(); ++i) {
            if (i == skip) continue;
            p.relations[i].lhs = substitute(p.relations[i].lhs, g, w);
            p.relations[i].rhs = substitute(p.relations[i].rhs, g, w);
        }
    };

    bool changed = true;
    while (changed) {
        changed = false;

        for (Relation& r : p.relations) {
            Term l = normalize(r.lhs), h = normalize(r.rhs);
            if (!(l == r.lhs) || !(h == r.rhs)) {
                r.lhs = std::move(l);
                r.rhs = std::move(h);
                changed = true;
            }
        }
        size_t before = p.relations.size();
        p.relations.erase(std::remove_if(p.relations.begin(), p.relations.end(),
                                         [](const Relation& r) { return r.lhs == r.rhs; }),
                          p.relations.end());
        if (p.relations.size() != before) changed = true;

        // label = label: keep the smaller name
        bool merged = false;
        for (size_t i = 0; i < p.relations.size() && !merged; ++i) {
            const Relation& r = p.relations[i];
            if (r.lhs.is_var() && r.rhs.is_var()) {
                int lo = std::min(r.lhs.var, r.rhs.var), hi = std::max(r.lhs.var, r.rhs.var);
                substitute_everywhere(hi, Term::leaf(lo), i);
                p.relations.erase(p.relations.begin() + i);
                drop_generator(hi);
                merged = true;
                changed = true;
            }
        }
        if (merged) continue;

        // defining relation for the preferred eliminable generator
        int best_rank = 2, best_gen = -1;
        size_t best_rel = 0;
        Term best_def;
        for (size_t i = 0; i < p.relations.size(); ++i) {
            const Relation& r = p.relations[i];
            auto consider = [&](const Term& var_side, const Term& def_side) {
                if (!var_side.is_var() || contains_var(def_side, var_side.var)) return;
                int rank =
                    (def_side.op == Op::Star || def_side.op == Op::StarInv) ? 1 : 0;
                if (best_gen < 0 ||
                    std::pair(rank, var_side.var) < std::pair(best_rank, best_gen)) {
                    best_rank = rank;
                    best_gen = var_side.var;
                    best_rel = i;
                    best_def = def_side;
                }
            };
            consider(r.lhs, r.rhs);
            consider(r.rhs, r.lhs);
        }
        if (best_gen >= 0) {
            substitute_everywhere(best_gen, best_def, best_rel);
            p.relations.erase(p.relations.begin() + best_rel);
            drop_generator(best_gen);
            changed = true;
        }
    }
    return p;
}

// ---------------------------------------------------------------------------
// Rendering.  Prefix operators star(x,y), starinv(x,y), R1(x,y) .. R4(x,y);
// by default generators print as x0, x1, ... in generator-list order.

inline std::string term_to_string(const Term& t, const std::map<int, std::string>& names) {
    if (t.is_var()) {
        auto it = names.find(t.var);
        return it != names.end() ? it->second : "g" + std::to_string(t.var);
    }
    return std::string(op_name(t.op)) + "(" + term_to_string(t.args[0], names) + ", " +
           term_to_string(t.args[1], names) + ")";
}

inline std::map<int, std::string> default_names(const Presentation& p) {
    std::map<int, std::string> names;
    for (size_t i = 0; i < p.generators.size(); ++i)
        names[p.generators[i]] = "x" + std::to_string(i);
    return names;
}

inline std::string presentation_to_string(const Presentation& p) {
    auto names = default_names(p);
    std::string out = "<";
    for (size_t i = 0; i < p.generators.size(); ++i)
        out += (i ? ", " : " ") + names[p.generators[i]];
    out += " |";
    for (size_t i = 0; i < p.relations.size(); ++i)
        out += (i ? ", " : " ") + term_to_string(p.relations[i].lhs, names) + " = " +
               term_to_string(p.relations[i].rhs, names);
    out += " >";
    return out;
}

} // namespace stuq
