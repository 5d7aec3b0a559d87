#pragma once

// Exhaustive search for stuquandle structures on {0..n-1}.
//
// The search is staged: star tables satisfying the quandle axioms are
// enumerated first, then R1 candidates (R2 is forced pointwise by axiom S4),
// then R3 candidates (R4 is forced by ST7).  The R1/R2 axioms and the R3/R4
// axioms share no constraint, so valid pairs combine freely.  Everything is
// emitted in lexicographic order: tables flattened row-major, compared in
// block order *, R1, R3.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "stuq/stuquandle.hpp"

namespace stuq {

namespace detail {

// Axiom instances that relate two cells of the table being filled in,
// bucketed by the later (row-major) cell so a DFS can check each instance
// as soon as both cells are known.
struct CellConstraint {
    int xa, ya; // cell A
    int xb, yb; // cell B
    int x, y, z; // witness substitution, kept for recomputing the check
};

class TableSearch {
public:
    // check(t, c) evaluates one instance against the partial table; it is
    // only called when both referenced cells are assigned.
    using InstanceCheck = std::function<bool(const Table&, const CellConstraint&)>;
    using CellCheck = std::function<bool(const Table&, int x, int y)>;
    using Emit = std::function<bool(const Table&)>;

    explicit TableSearch(int n) : n_(n), table_(n, std::vector<int>(n, -1)) {}

    void add_instance(CellConstraint c, InstanceCheck check) {
        int ia = c.xa * n_ + c.ya, ib = c.xb * n_ + c.yb;
        buckets_.resize(n_ * n_);
        buckets_[std::max(ia, ib)].push_back({c, std::move(check)});
    }

    void set_cell_check(CellCheck check) { cell_check_ = std::move(check); }

    // Runs the DFS; returns false if the emit callback asked to stop.
    bool run(const Emit& emit) {
        buckets_.resize(n_ * n_);
        return dfs(0, emit);
    }

private:
    bool dfs(int cell, const Emit& emit) {
        if (cell == n_ * n_) return emit(table_);
        int x = cell / n_, y = cell % n_;
        for (int v = 0; v < n_; ++v) {
            table_[x][y] = v;
            if (cell_check_ && !cell_check_(table_, x, y)) continue;
            bool ok = true;
            for (const auto& [c, check] : buckets_[cell])
                if (!check(table_, c)) {
                    ok = false;
                    break;
                }
            if (ok && !dfs(cell + 1, emit)) {
                table_[x][y] = -1;
                return false;
            }
        }
        table_[x][y] = -1;
        return true;
    }

    int n_;
    Table table_;
    CellCheck cell_check_;
    std::vector<std::vector<std::pair<CellConstraint, InstanceCheck>>> buckets_;
};

} // namespace detail

// Streams every quandle table on {0..n-1} in lexicographic order.
inline bool for_each_quandle(int n, const std::function<bool(const Table&)>& visit) {
    detail::TableSearch search(n);
    // Q1 on the diagonal and Q2 column-injectivity prune per cell.
    search.set_cell_check([n](const Table& t, int x, int y) {
        if (x == y && t[x][y] != x) return false;
        for (int u = 0; u < x; ++u)
            if (t[u][y] == t[x][y]) return false;
        return true;
    });
    // Q3: (x*y)*z = (x*z)*(y*z).  All four inner cells depend on values, so
    // instance bucketing does not apply; verify at emission.
    return search.run([&](const Table& star) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (star[star[x][y]][z] != star[star[x][z]][star[y][z]]) return true;
        return visit(star);
    });
}

// R2 is determined by S4: R2(x,y) = R1(y, x*y).
inline Table derive_r2(int n, const Table& star, const Table& r1) {
    Table r2(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            r2[x][y] = r1[y][star[x][y]];
    return r2;
}

// R4 is determined by ST7: R4(y,x) = R3(x*y, y).
inline Table derive_r4(int n, const Table& star, const Table& r3) {
    Table r4(n, std::vector<int>(n));
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x)
            r4[y][x] = r3[star[x][y]][y];
    return r4;
}

// Streams every R1 making (star, R1, derived R2) an oriented singquandle.
inline bool for_each_r1(int n, const Table& star, const Table& si,
                        const std::function<bool(const Table&)>& visit) {
    detail::TableSearch search(n);
    // S1 relates two R1 cells; check each instance as soon as possible.
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                search.add_instance({si[x][y], z, x, star[z][y], x, y, z},
                                    [&star](const Table& t, const detail::CellConstraint& c) {
                                        return star[t[c.xa][c.ya]][c.y] == t[c.xb][c.yb];
                                    });
    return search.run([&](const Table& r1) {
        Table r2 = derive_r2(n, star, r1);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (star[r1[x][y]][r2[x][y]] != r2[y][star[x][y]]) return true; // S5
                for (int z = 0; z < n; ++z) {
                    if (r2[si[x][y]][z] != si[r2[x][star[z][y]]][y]) return true;        // S2
                    if (star[si[y][r1[x][z]]][x] != si[star[y][r2[x][z]]][z]) return true; // S3
                }
            }
        return visit(r1);
    });
}

// Streams every R3 making (star, R3, derived R4) satisfy ST6..ST10.
inline bool for_each_r3(int n, const Table& star, const Table& si,
                        const std::function<bool(const Table&)>& visit) {
    detail::TableSearch search(n);
    // ST8 relates two R3 cells.
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                search.add_instance({star[y][x], z, y, si[z][x], x, y, z},
                                    [&star](const Table& t, const detail::CellConstraint& c) {
                                        return t[c.xa][c.ya] == star[t[c.xb][c.yb]][c.x];
                                    });
    return search.run([&](const Table& r3) {
        Table r4 = derive_r4(n, star, r3);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (star[r3[y][x]][r4[y][x]] != r4[star[x][y]][y]) return true; // ST6
                for (int z = 0; z < n; ++z) {
                    if (r4[y][si[z][x]] != si[r4[star[y][x]][z]][x]) return true; // ST9
                    if (si[star[x][r4[y][z]]][y] != star[si[x][r3[y][z]]][z]) return true; // ST10
                }
            }
        return visit(r3);
    });
}

// Streams every stuquandle on {0..n-1} in canonical order.  The visitor
// returns false to stop early.  Feasible exhaustively for n <= 3; larger
// orders rely on the caller stopping after a limit.
inline bool enumerate_all(int n, const std::function<bool(const Stuquandle&)>& visit) {
    if (n <= 0) throw DomainError("order must be positive");
    return for_each_quandle(n, [&](const Table& star) {
        Table si = invert_star(star);
        return for_each_r1(n, star, si, [&](const Table& r1) {
            Table r2 = derive_r2(n, star, r1);
            return for_each_r3(n, star, si, [&](const Table& r3) {
                Stuquandle x;
                x.n = n;
                x.star = star;
                x.star_inv = si;
                x.r1 = r1;
                x.r2 = r2;
                x.r3 = r3;
                x.r4 = derive_r4(n, star, r3);
                return visit(x);
            });
        });
    });
}

inline std::vector<Stuquandle> enumerate_all(int n, std::size_t limit) {
    std::vector<Stuquandle> out;
    enumerate_all(n, [&](const Stuquandle& x) {
        out.push_back(x);
        return out.size() < limit;
    });
    return out;
}

// Total number of stuquandles on {0..n-1}.  R1-side and R3-side counts are
// independent per star, so the census is a sum of products.
inline std::uint64_t census(int n) {
    if (n > 3) throw DomainError("census is exhaustive only up to order 3");
    std::uint64_t total = 0;
    for_each_quandle(n, [&](const Table& star) {
        Table si = invert_star(star);
        std::uint64_t c1 = 0, c3 = 0;
        for_each_r1(n, star, si, [&](const Table&) {
            ++c1;
            return true;
        });
        for_each_r3(n, star, si, [&](const Table&) {
            ++c3;
            return true;
        });
        total += c1 * c3;
        return true;
    });
    return total;
}

} // namespace stuq
