#pragma once

// Arc diagrams of RNA foldings and their conversion to stuck link diagrams.
//
// An arc diagram is a set of oriented backbone strands with bonds between
// attachment positions.  Conversion replaces each bond by one stuck crossing
// (antiparallel bonds are negatively stuck, parallel bonds positively stuck;
// the convention is calibrated so the published invariant values and signed
// sticking numbers are reproduced) and self-closes every strand.  Closure is
// pure endpoint identification in the successor map; it adds no crossings.
//
// Text format, one record per line, '#' starts a comment:
//   strand <id> <length>
//   bond <s1>:<p1> <s2>:<p2> <parallel|antiparallel>

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "stuq/coloring.hpp"
#include "stuq/diagram.hpp"

namespace stuq {

enum class BondOrientation { Parallel, Antiparallel };

struct BondEnd {
    int strand = 0; // strand id as declared
    int pos = 0;

    bool operator==(const BondEnd&) const = default;
    auto operator<=>(const BondEnd&) const = default;
};

struct Bond {
    BondEnd a, b;
    BondOrientation orientation = BondOrientation::Antiparallel;

    bool operator==(const Bond&) const = default;
};

struct ArcStrand {
    int id = 0;
    int length = 0; // number of attachment positions

    bool operator==(const ArcStrand&) const = default;
};

struct ArcDiagram {
    std::vector<ArcStrand> strands;
    std::vector<Bond> bonds;

    bool operator==(const ArcDiagram&) const = default;
};

inline void validate_arc_diagram(const ArcDiagram& a) {
    std::map<int, int> length;
    for (const ArcStrand& s : a.strands) {
        if (s.length < 0) throw DomainError("strand " + std::to_string(s.id) +
                                            " has negative length");
        if (!length.emplace(s.id, s.length).second)
            throw DomainError("strand id " + std::to_string(s.id) + " declared twice");
    }
    std::set<BondEnd> used;
    for (const Bond& b : a.bonds) {
        for (const BondEnd& e : {b.a, b.b}) {
            auto it = length.find(e.strand);
            if (it == length.end())
                throw DomainError("bond references undeclared strand " +
                                  std::to_string(e.strand));
            if (e.pos < 0 || e.pos >= it->second)
                throw DomainError("bond position " + std::to_string(e.strand) + ":" +
                                  std::to_string(e.pos) + " out of range");
            if (!used.insert(e).second)
                throw DomainError("position " + std::to_string(e.strand) + ":" +
                                  std::to_string(e.pos) + " used by two bond ends");
        }
    }
}

inline ArcDiagram parse_arc_diagram(const std::string& text) {
    ArcDiagram a;
    std::istringstream lines(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& what) {
        throw ParseError("line " + std::to_string(lineno) + ": " + what);
    };
    auto parse_end = [&](const std::string& tok) {
        auto colon = tok.find(':');
        if (colon == std::string::npos) fail("expected <strand>:<pos>, got '" + tok + "'");
        try {
            return BondEnd{std::stoi(tok.substr(0, colon)), std::stoi(tok.substr(colon + 1))};
        } catch (const std::exception&) {
            fail("bad bond end '" + tok + "'");
        }
        return BondEnd{};
    };

    while (std::getline(lines, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream toks(line);
        std::string kw;
        if (!(toks >> kw)) continue;
        if (kw == "strand") {
            ArcStrand s;
            if (!(toks >> s.id >> s.length)) fail("expected: strand <id> <length>");
            a.strands.push_back(s);
        } else if (kw == "bond") {
            std::string ea, eb, orient;
            if (!(toks >> ea >> eb >> orient))
                fail("expected: bond <s>:<p> <s>:<p> <parallel|antiparallel>");
            Bond b;
            b.a = parse_end(ea);
            b.b = parse_end(eb);
            if (orient == "parallel")
                b.orientation = BondOrientation::Parallel;
            else if (orient == "antiparallel")
                b.orientation = BondOrientation::Antiparallel;
            else
                fail("unknown bond orientation '" + orient + "'");
            a.bonds.push_back(b);
        } else {
            fail("unknown record '" + kw + "'");
        }
        std::string extra;
        if (toks >> extra) fail("trailing token '" + extra + "'");
    }
    validate_arc_diagram(a);
    return a;
}

inline nlohmann::json arc_to_json(const ArcDiagram& a) {
    nlohmann::json strands = nlohmann::json::array(), bonds = nlohmann::json::array();
    for (const ArcStrand& s : a.strands) strands.push_back({{"id", s.id}, {"length", s.length}});
    for (const Bond& b : a.bonds)
        bonds.push_back({{"a", {{"strand", b.a.strand}, {"pos", b.a.pos}}},
                         {"b", {{"strand", b.b.strand}, {"pos", b.b.pos}}},
                         {"orientation", b.orientation == BondOrientation::Parallel
                                             ? "parallel"
                                             : "antiparallel"}});
    return nlohmann::json{{"strands", strands}, {"bonds", bonds}};
}

inline ArcDiagram arc_from_json(const nlohmann::json& j) {
    ArcDiagram a;
    try {
        for (const auto& s : j.at("strands"))
            a.strands.push_back({s.at("id").get<int>(), s.at("length").get<int>()});
        for (const auto& b : j.at("bonds")) {
            Bond bond;
            bond.a = {b.at("a").at("strand").get<int>(), b.at("a").at("pos").get<int>()};
            bond.b = {b.at("b").at("strand").get<int>(), b.at("b").at("pos").get<int>()};
            std::string o = b.at("orientation").get<std::string>();
            if (o == "parallel")
                bond.orientation = BondOrientation::Parallel;
            else if (o == "antiparallel")
                bond.orientation = BondOrientation::Antiparallel;
            else
                throw ParseError("unknown bond orientation '" + o + "'");
            a.bonds.push_back(bond);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad arc-diagram JSON: ") + e.what());
    }
    validate_arc_diagram(a);
    return a;
}

// Bond-by-bond replacement plus self-closure.  Each strand's bond endpoints,
// in backbone order, split the closed strand into one semiarc per endpoint;
// the pass through endpoint j enters on semiarc j and leaves on semiarc
// j+1 (cyclically).  At each crossing the pass whose outgoing semiarc has
// the smaller global index takes the NW->SE diagonal.
inline StuckDiagram to_stuck_diagram(const ArcDiagram& a) {
    validate_arc_diagram(a);

    struct Pass {
        int in = -1, out = -1;
    };
    std::map<BondEnd, Pass> passes;
    StuckDiagram d;
    int base = 0;
    for (const ArcStrand& s : a.strands) {
        std::vector<int> positions;
        for (const Bond& b : a.bonds) {
            if (b.a.strand == s.id) positions.push_back(b.a.pos);
            if (b.b.strand == s.id) positions.push_back(b.b.pos);
        }
        if (positions.empty()) {
            ++d.free_circles;
            continue;
        }
        std::sort(positions.begin(), positions.end());
        int m = static_cast<int>(positions.size());
        for (int j = 0; j < m; ++j)
            passes[{s.id, positions[j]}] = {base + j, base + (j + 1) % m};
        base += m;
    }

    for (const Bond& b : a.bonds) {
        const Pass& pa = passes.at(b.a);
        const Pass& pb = passes.at(b.b);
        const Pass& nw = pa.out < pb.out ? pa : pb;
        const Pass& ne = pa.out < pb.out ? pb : pa;
        CrossingKind kind = b.orientation == BondOrientation::Antiparallel
                                ? CrossingKind::StuckNegative
                                : CrossingKind::StuckPositive;
        d.crossings.push_back({kind, nw.in, ne.in, ne.out, nw.out});
    }
    return d;
}

inline std::uint64_t rna_invariant(const ArcDiagram& a, const Stuquandle& x,
                                   int threads = 1) {
    return count_colorings(to_stuck_diagram(a), x, threads);
}

} // namespace stuq
