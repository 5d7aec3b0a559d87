#pragma once

// Combinatorial codes for oriented stuck link diagrams.
//
// Every crossing is recorded in a canonical frame with both strands
// oriented downward: the strand entering at NW leaves at SE, the strand
// entering at NE leaves at SW.  Ports hold semiarc identifiers; a valid
// diagram uses each semiarc exactly once as an input and once as an
// output.  Crossing-free circle components carry no ports and are counted
// separately in free_circles.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "stuq/stuquandle.hpp"

namespace stuq {

enum class CrossingKind { ClassicalA, ClassicalB, StuckPositive, StuckNegative };

inline const char* kind_name(CrossingKind k) {
    switch (k) {
        case CrossingKind::ClassicalA: return "ClassicalA";
        case CrossingKind::ClassicalB: return "ClassicalB";
        case CrossingKind::StuckPositive: return "StuckPositive";
        case CrossingKind::StuckNegative: return "StuckNegative";
    }
    return "?";
}

inline CrossingKind kind_from_name(const std::string& s) {
    if (s == "ClassicalA") return CrossingKind::ClassicalA;
    if (s == "ClassicalB") return CrossingKind::ClassicalB;
    if (s == "StuckPositive") return CrossingKind::StuckPositive;
    if (s == "StuckNegative") return CrossingKind::StuckNegative;
    throw ParseError("unknown crossing kind '" + s + "'");
}

inline bool is_stuck(CrossingKind k) {
    return k == CrossingKind::StuckPositive || k == CrossingKind::StuckNegative;
}

struct Crossing {
    CrossingKind kind;
    int in_nw, in_ne, out_sw, out_se;

    bool operator==(const Crossing&) const = default;
};

struct StuckDiagram {
    std::vector<Crossing> crossings;
    int free_circles = 0;

    bool operator==(const StuckDiagram&) const = default;
};

struct ValidationResult {
    bool ok = false;
    int components = 0;
    int semiarcs = 0; // distinct port ids, plus one per free circle
    std::vector<std::string> errors;
};

inline ValidationResult validate(const StuckDiagram& d) {
    ValidationResult res;
    if (d.free_circles < 0) {
        res.errors.push_back("free_circles is negative");
        return res;
    }
    std::map<int, std::pair<int, int>> uses; // id -> (input uses, output uses)
    for (size_t i = 0; i < d.crossings.size(); ++i) {
        const Crossing& c = d.crossings[i];
        for (int id : {c.in_nw, c.in_ne, c.out_sw, c.out_se})
            if (id < 0)
                res.errors.push_back("crossing " + std::to_string(i) +
                                     " has a negative semiarc id");
        ++uses[c.in_nw].first;
        ++uses[c.in_ne].first;
        ++uses[c.out_sw].second;
        ++uses[c.out_se].second;
    }
    for (const auto& [id, cnt] : uses) {
        auto [in, out] = cnt;
        if (in > 1) res.errors.push_back("semiarc " + std::to_string(id) + " used " +
                                         std::to_string(in) + " times as an input");
        if (out > 1) res.errors.push_back("semiarc " + std::to_string(id) + " used " +
                                          std::to_string(out) + " times as an output");
        if (in == 1 && out == 0)
            res.errors.push_back("dangling semiarc " + std::to_string(id) +
                                 " (input only)");
        if (in == 0 && out == 1)
            res.errors.push_back("dangling semiarc " + std::to_string(id) +
                                 " (output only)");
    }
    if (!res.errors.empty()) return res;
    int distinct_ids = static_cast<int>(uses.size());

    // Strand successor: entering a crossing at NW continues to out_se,
    // entering at NE continues to out_sw.  Cycles of this map are the
    // closed components that pass through crossings.
    std::map<int, int> next;
    for (const Crossing& c : d.crossings) {
        next[c.in_nw] = c.out_se;
        next[c.in_ne] = c.out_sw;
    }
    std::map<int, bool> seen;
    int cycles = 0;
    for (auto& [id, unused] : next) {
        if (seen[id]) continue;
        ++cycles;
        int cur = id;
        while (!seen[cur]) {
            seen[cur] = true;
            cur = next[cur];
        }
    }
    res.ok = true;
    res.components = cycles + d.free_circles;
    res.semiarcs = distinct_ids + d.free_circles;
    return res;
}

inline ValidationResult validated(const StuckDiagram& d) {
    ValidationResult res = validate(d);
    if (!res.ok) {
        std::string msg = "invalid diagram:";
        for (const auto& e : res.errors) msg += " " + e + ";";
        throw DomainError(msg);
    }
    return res;
}

inline int components(const StuckDiagram& d) { return validated(d).components; }
inline int semiarcs(const StuckDiagram& d) { return validated(d).semiarcs; }

inline int signed_sticking_number(const StuckDiagram& d) {
    int s = 0;
    for (const Crossing& c : d.crossings) {
        if (c.kind == CrossingKind::StuckPositive) ++s;
        if (c.kind == CrossingKind::StuckNegative) --s;
    }
    return s;
}

// Sorted list of semiarc ids used by the diagram.
inline std::vector<int> semiarc_ids(const StuckDiagram& d) {
    std::vector<int> ids;
    for (const Crossing& c : d.crossings) {
        ids.push_back(c.in_nw);
        ids.push_back(c.in_ne);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

inline nlohmann::json diagram_to_json(const StuckDiagram& d) {
    nlohmann::json xs = nlohmann::json::array();
    for (const Crossing& c : d.crossings)
        xs.push_back({{"kind", kind_name(c.kind)},
                      {"in_nw", c.in_nw},
                      {"in_ne", c.in_ne},
                      {"out_sw", c.out_sw},
                      {"out_se", c.out_se}});
    return nlohmann::json{{"free_circles", d.free_circles}, {"crossings", xs}};
}

inline StuckDiagram diagram_from_json(const nlohmann::json& j) {
    StuckDiagram d;
    try {
        d.free_circles = j.at("free_circles").get<int>();
        for (const auto& c : j.at("crossings")) {
            Crossing x{kind_from_name(c.at("kind").get<std::string>()),
                       c.at("in_nw").get<int>(), c.at("in_ne").get<int>(),
                       c.at("out_sw").get<int>(), c.at("out_se").get<int>()};
            d.crossings.push_back(x);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad diagram JSON: ") + e.what());
    }
    return d;
}

} // namespace stuq
