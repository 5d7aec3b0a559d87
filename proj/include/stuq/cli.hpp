#pragma once

// Command-line front end.  Deterministic, scriptable output: human text by
// default, --json for machine consumption.  Exit codes: 0 success, 1 domain
// error (axiom failure, invalid diagram, bad file), 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stuq/coloring.hpp"
#include "stuq/diagram.hpp"
#include "stuq/enumerate.hpp"
#include "stuq/fixtures.hpp"
#include "stuq/io.hpp"
#include "stuq/presentation.hpp"
#include "stuq/rna.hpp"
#include "stuq/stuquandle.hpp"

namespace stuq::cli {

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline bool has_suffix(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Stuquandle argument forms: @file (.json or block matrix by extension),
// affine:n,a,b,e, fixtures:<name>.
inline Stuquandle resolve_stuquandle(const std::string& spec, bool check = true) {
    if (spec.rfind("affine:", 0) == 0) {
        std::istringstream in(spec.substr(7));
        int vals[4];
        char comma;
        for (int i = 0; i < 4; ++i) {
            if (i && !(in >> comma && comma == ','))
                throw ParseError("expected affine:n,a,b,e, got '" + spec + "'");
            if (!(in >> vals[i]))
                throw ParseError("expected affine:n,a,b,e, got '" + spec + "'");
        }
        if (in >> comma) throw ParseError("expected affine:n,a,b,e, got '" + spec + "'");
        return make_affine(vals[0], vals[1], vals[2], vals[3]);
    }
    if (spec.rfind("fixtures:", 0) == 0) return fixture_stuquandle(spec.substr(9));
    if (spec.rfind('@', 0) == 0) {
        std::string path = spec.substr(1);
        std::string text = read_file(path);
        if (has_suffix(path, ".json"))
            return stuquandle_from_json(nlohmann::json::parse(text), check);
        return parse_block_matrix(text, check);
    }
    throw ParseError("unrecognized stuquandle spec '" + spec +
                     "' (use @file, affine:n,a,b,e or fixtures:<name>)");
}

// Diagram argument forms: fixtures:<name> or @file.json.
inline StuckDiagram resolve_diagram(const std::string& spec) {
    if (spec.rfind("fixtures:", 0) == 0) return fixture(spec.substr(9));
    if (spec.rfind('@', 0) == 0)
        return diagram_from_json(nlohmann::json::parse(read_file(spec.substr(1))));
    throw ParseError("unrecognized diagram spec '" + spec +
                     "' (use fixtures:<name> or @file.json)");
}

inline int default_threads() {
    if (const char* env = std::getenv("STUQ_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

} // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite stuquandles and coloring invariants of stuck links"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine-readable output");

    std::string sq_spec, lhs_spec, rhs_spec, arc_path, diagram_spec;
    std::vector<std::string> diagram_specs;
    int n = 0, a = 0, b = 0, e = 0;
    int threads = detail::default_threads();
    std::size_t census_limit = 0, list_limit = 100;
    bool first_violation = false, skip_check = false, raw = false, to_diagram = false;
    bool count_only = false;

    CLI::App* cmd_check = app.add_subcommand("check", "verify the axioms of a structure");
    cmd_check->add_option("--stuquandle", sq_spec)->required();
    cmd_check->add_flag("--first-violation", first_violation,
                        "stop at the first violation of each axiom");

    CLI::App* cmd_affine = app.add_subcommand("make-affine", "build an affine structure");
    cmd_affine->add_option("-n", n)->required();
    cmd_affine->add_option("-a", a)->required();
    cmd_affine->add_option("-b", b)->required();
    cmd_affine->add_option("-e", e)->required();

    CLI::App* cmd_enum = app.add_subcommand("enumerate", "list the affine family of order n");
    cmd_enum->add_option("-n", n)->required();
    cmd_enum->add_flag("--count-only", count_only, "print only the number of structures");

    CLI::App* cmd_census = app.add_subcommand("census", "exhaustive structure search");
    cmd_census->add_option("-n", n)->required();
    cmd_census->add_option("--limit", census_limit,
                           "emit the first L structures instead of counting");

    CLI::App* cmd_iso = app.add_subcommand("iso", "find an isomorphism between two structures");
    cmd_iso->add_option("--lhs", lhs_spec)->required();
    cmd_iso->add_option("--rhs", rhs_spec)->required();

    CLI::App* cmd_count = app.add_subcommand("count", "count colorings of diagrams");
    cmd_count->add_option("--diagram", diagram_specs)->take_all(); // empty set allowed
    cmd_count->add_option("--stuquandle", sq_spec)->required();
    cmd_count->add_option("--threads", threads);

    CLI::App* cmd_list = app.add_subcommand("list", "list colorings of a diagram");
    cmd_list->add_option("--diagram", diagram_spec)->required();
    cmd_list->add_option("--stuquandle", sq_spec)->required();
    cmd_list->add_option("--limit", list_limit);

    CLI::App* cmd_present = app.add_subcommand("present", "fundamental stuquandle presentation");
    cmd_present->add_option("--diagram", diagram_spec)->required();
    cmd_present->add_flag("--raw", raw, "skip generator elimination");

    CLI::App* cmd_stick = app.add_subcommand("sticking", "signed sticking number");
    cmd_stick->add_option("--diagram", diagram_spec)->required();

    CLI::App* cmd_rna = app.add_subcommand("rna", "invariant of an RNA folding arc diagram");
    cmd_rna->add_option("--arcs", arc_path)->required();
    cmd_rna->add_option("--stuquandle", sq_spec)->required();
    cmd_rna->add_option("--threads", threads);
    cmd_rna->add_flag("--to-diagram", to_diagram, "print the stuck diagram instead");

    CLI::App* cmd_fixtures = app.add_subcommand("fixtures", "list shipped diagrams and structures");

    app.add_flag("--skip-check", skip_check, "do not verify axioms of parsed structures");

    // global flags may follow the subcommand name
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& pe) {
        int code = app.exit(pe, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_check->parsed()) {
            Stuquandle x = detail::resolve_stuquandle(sq_spec, false);
            AxiomReport rep = check_axioms(x, first_violation);
            if (json) {
                nlohmann::json vs = nlohmann::json::array();
                for (const auto& v : rep.violations)
                    vs.push_back({{"axiom", v.axiom}, {"witness", v.witness}});
                out << nlohmann::json{{"passed", rep.passed}, {"violations", vs}}.dump(2)
                    << "\n";
            } else if (rep.passed) {
                out << "ok: all axioms hold (order " << x.n << ")\n";
            } else {
                for (const auto& v : rep.violations) {
                    out << "violation " << v.axiom << " at (";
                    for (size_t i = 0; i < v.witness.size(); ++i)
                        out << (i ? "," : "") << v.witness[i];
                    out << ")\n";
                }
            }
            return rep.passed ? 0 : 1;
        }

        if (cmd_affine->parsed()) {
            Stuquandle x = make_affine(n, a, b, e);
            if (json)
                out << stuquandle_to_json(x).dump(2) << "\n";
            else
                out << serialize_block_matrix(x);
            return 0;
        }

        if (cmd_enum->parsed()) {
            auto all = enumerate_affine(n);
            if (count_only) {
                out << all.size() << "\n";
            } else if (json) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& [p, x] : all)
                    arr.push_back({{"a", p.a}, {"b", p.b}, {"e", p.e},
                                   {"stuquandle", stuquandle_to_json(x)}});
                out << arr.dump(2) << "\n";
            } else {
                for (const auto& [p, x] : all)
                    out << "a=" << p.a << " b=" << p.b << " e=" << p.e << "\n";
            }
            return 0;
        }

        if (cmd_census->parsed()) {
            if (census_limit > 0) {
                std::size_t emitted = 0;
                enumerate_all(n, [&](const Stuquandle& x) {
                    if (json)
                        out << stuquandle_to_json(x).dump() << "\n";
                    else
                        out << serialize_block_matrix(x) << "\n";
                    return ++emitted < census_limit;
                });
            } else {
                std::uint64_t total = census(n);
                if (json)
                    out << nlohmann::json{{"n", n}, {"count", total}}.dump(2) << "\n";
                else
                    out << total << "\n";
            }
            return 0;
        }

        if (cmd_iso->parsed()) {
            Stuquandle x = detail::resolve_stuquandle(lhs_spec, !skip_check);
            Stuquandle y = detail::resolve_stuquandle(rhs_spec, !skip_check);
            auto f = are_isomorphic(x, y);
            if (json) {
                nlohmann::json j{{"isomorphic", f.has_value()}};
                if (f) j["map"] = *f;
                out << j.dump(2) << "\n";
            } else if (f) {
                out << "isomorphic:";
                for (size_t i = 0; i < f->size(); ++i)
                    out << " " << i << "->" << (*f)[i];
                out << "\n";
            } else {
                out << "not isomorphic\n";
            }
            return 0;
        }

        if (cmd_count->parsed()) {
            Stuquandle x = detail::resolve_stuquandle(sq_spec, !skip_check);
            if (diagram_specs.size() == 1) {
                StuckDiagram d = detail::resolve_diagram(diagram_specs[0]);
                ValidationResult v = validated(d);
                std::uint64_t c = count_colorings(d, x, threads);
                if (json)
                    out << nlohmann::json{{"count", c},
                                          {"semiarcs", v.semiarcs},
                                          {"components", v.components}}
                               .dump(2)
                        << "\n";
                else
                    out << c << "\n";
                return 0;
            }
            // batch table sorted by name, sticking number as grouping column
            struct Row {
                std::string name;
                int sticking;
                std::uint64_t count;
            };
            std::vector<Row> rows;
            std::vector<std::string> sorted = diagram_specs;
            std::sort(sorted.begin(), sorted.end());
            bool failures = false;
            for (const std::string& spec : sorted) {
                try {
                    StuckDiagram d = detail::resolve_diagram(spec);
                    validated(d);
                    rows.push_back({spec, signed_sticking_number(d),
                                    count_colorings(d, x, threads)});
                } catch (const Error& e2) {
                    err << spec << ": " << e2.what() << "\n";
                    failures = true;
                }
            }
            if (json) {
                nlohmann::json arr = nlohmann::json::array();
                for (const Row& r : rows)
                    arr.push_back({{"diagram", r.name}, {"sticking", r.sticking},
                                   {"count", r.count}});
                out << arr.dump(2) << "\n";
            } else {
                out << "sticking\tcount\tdiagram\n";
                for (const Row& r : rows)
                    out << r.sticking << "\t" << r.count << "\t" << r.name << "\n";
            }
            return failures ? 1 : 0;
        }

        if (cmd_list->parsed()) {
            Stuquandle x = detail::resolve_stuquandle(sq_spec, !skip_check);
            StuckDiagram d = detail::resolve_diagram(diagram_spec);
            ValidationResult v = validated(d);
            auto cols = list_colorings(d, x, list_limit);
            if (json) {
                nlohmann::json arr = nlohmann::json::array();
                for (const Coloring& c : cols) {
                    nlohmann::json semis = nlohmann::json::object();
                    for (const auto& [id, col] : c.semiarc)
                        semis[std::to_string(id)] = col;
                    arr.push_back({{"semiarcs", semis}, {"free_circles", c.free_circles}});
                }
                out << nlohmann::json{{"count", count_colorings(d, x, threads)},
                                      {"semiarcs", v.semiarcs},
                                      {"components", v.components},
                                      {"colorings", arr}}
                           .dump(2)
                    << "\n";
            } else {
                for (const Coloring& c : cols) {
                    bool first = true;
                    for (const auto& [id, col] : c.semiarc) {
                        out << (first ? "" : " ") << id << "=" << col;
                        first = false;
                    }
                    for (int fc : c.free_circles) {
                        out << (first ? "" : " ") << "o=" << fc;
                        first = false;
                    }
                    out << "\n";
                }
            }
            return 0;
        }

        if (cmd_present->parsed()) {
            StuckDiagram d = detail::resolve_diagram(diagram_spec);
            Presentation p = presentation(d);
            if (!raw) p = simplify(p);
            if (json) {
                auto names = default_names(p);
                nlohmann::json gens = nlohmann::json::array(), rels = nlohmann::json::array();
                for (int g : p.generators) gens.push_back(names[g]);
                for (const Relation& r : p.relations)
                    rels.push_back({{"lhs", term_to_string(r.lhs, names)},
                                    {"rhs", term_to_string(r.rhs, names)}});
                out << nlohmann::json{{"generators", gens}, {"relations", rels}}.dump(2)
                    << "\n";
            } else {
                out << presentation_to_string(p) << "\n";
            }
            return 0;
        }

        if (cmd_stick->parsed()) {
            StuckDiagram d = detail::resolve_diagram(diagram_spec);
            validated(d);
            out << signed_sticking_number(d) << "\n";
            return 0;
        }

        if (cmd_rna->parsed()) {
            ArcDiagram arc =
                detail::has_suffix(arc_path, ".json")
                    ? arc_from_json(nlohmann::json::parse(detail::read_file(arc_path)))
                    : parse_arc_diagram(detail::read_file(arc_path));
            StuckDiagram d = to_stuck_diagram(arc);
            if (to_diagram) {
                out << diagram_to_json(d).dump(2) << "\n";
                return 0;
            }
            Stuquandle x = detail::resolve_stuquandle(sq_spec, !skip_check);
            std::uint64_t c = count_colorings(d, x, threads);
            if (json)
                out << nlohmann::json{{"count", c},
                                      {"bonds", arc.bonds.size()},
                                      {"sticking", signed_sticking_number(d)}}
                           .dump(2)
                    << "\n";
            else
                out << c << "\n";
            return 0;
        }

        if (cmd_fixtures->parsed()) {
            if (json) {
                nlohmann::json ds = nlohmann::json::object(), xs = nlohmann::json::object();
                for (const auto& [name, d] : fixtures()) {
                    ValidationResult v = validate(d);
                    ds[name] = {{"crossings", d.crossings.size()},
                                {"free_circles", d.free_circles},
                                {"components", v.components},
                                {"semiarcs", v.semiarcs},
                                {"sticking", signed_sticking_number(d)}};
                }
                for (const auto& [name, x] : fixture_stuquandles()) xs[name] = {{"n", x.n}};
                out << nlohmann::json{{"diagrams", ds}, {"stuquandles", xs}}.dump(2) << "\n";
            } else {
                out << "diagrams:\n";
                for (const auto& [name, d] : fixtures()) {
                    ValidationResult v = validate(d);
                    out << "  " << name << "  crossings=" << d.crossings.size()
                        << " components=" << v.components
                        << " sticking=" << signed_sticking_number(d) << "\n";
                }
                out << "stuquandles:\n";
                for (const auto& [name, x] : fixture_stuquandles())
                    out << "  " << name << "  n=" << x.n << "\n";
            }
            return 0;
        }
    } catch (const Error& e2) {
        err << "error: " << e2.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e2) {
        err << "error: " << e2.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace stuq::cli
