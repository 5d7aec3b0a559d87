#pragma once

// Text and JSON formats for stuquandles.
//
// Block-matrix text: n rows of 5n integers, blocks ordered *, R1, R2, R3, R4,
// optional `|` separators between blocks.  The * block is row-indexed by the
// first argument; the R blocks are column-indexed by the first argument
// (row = second argument), which is the layout the published operation
// tables use.  serialize/parse agree, so round-trips are exact.

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "stuq/stuquandle.hpp"

namespace stuq {

inline std::string serialize_block_matrix(const Stuquandle& x) {
    std::ostringstream out;
    for (int row = 0; row < x.n; ++row) {
        for (int col = 0; col < x.n; ++col) {
            if (col) out << ' ';
            out << x.star[row][col];
        }
        for (const Table* t : {&x.r1, &x.r2, &x.r3, &x.r4}) {
            out << " |";
            for (int col = 0; col < x.n; ++col) out << ' ' << (*t)[col][row];
        }
        out << '\n';
    }
    return out.str();
}

inline Stuquandle parse_block_matrix(const std::string& text, bool check = true) {
    std::vector<std::vector<int>> rows;
    std::istringstream lines(text);
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        std::istringstream toks(line);
        std::vector<int> row;
        std::string tok;
        while (toks >> tok) {
            if (tok == "|") continue;
            if (tok[0] == '#') break;
            try {
                size_t pos = 0;
                int v = std::stoi(tok, &pos);
                if (pos != tok.size()) throw std::invalid_argument(tok);
                row.push_back(v);
            } catch (const std::exception&) {
                throw ParseError("line " + std::to_string(lineno) + ": not an integer: '" +
                                 tok + "'");
            }
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty block matrix");
    int n = static_cast<int>(rows.size());
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(rows[i].size()) != 5 * n)
            throw ParseError("row " + std::to_string(i) + " has " +
                             std::to_string(rows[i].size()) + " entries, expected " +
                             std::to_string(5 * n));

    Table star(n, std::vector<int>(n)), r1 = star, r2 = star, r3 = star, r4 = star;
    for (int row = 0; row < n; ++row) {
        for (int col = 0; col < n; ++col) star[row][col] = rows[row][col];
        Table* blocks[4] = {&r1, &r2, &r3, &r4};
        for (int b = 0; b < 4; ++b)
            for (int col = 0; col < n; ++col)
                (*blocks[b])[col][row] = rows[row][(b + 1) * n + col];
    }
    return from_tables(n, std::move(star), std::move(r1), std::move(r2), std::move(r3),
                       std::move(r4), check);
}

// JSON form is row-major for all five tables; *bar is derived, never stored.
inline nlohmann::json stuquandle_to_json(const Stuquandle& x) {
    return nlohmann::json{{"n", x.n}, {"star", x.star}, {"r1", x.r1},
                          {"r2", x.r2}, {"r3", x.r3},   {"r4", x.r4}};
}

inline Stuquandle stuquandle_from_json(const nlohmann::json& j, bool check = true) {
    try {
        int n = j.at("n").get<int>();
        return from_tables(n, j.at("star").get<Table>(), j.at("r1").get<Table>(),
                           j.at("r2").get<Table>(), j.at("r3").get<Table>(),
                           j.at("r4").get<Table>(), check);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad stuquandle JSON: ") + e.what());
    }
}

} // namespace stuq
