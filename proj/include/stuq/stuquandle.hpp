#pragma once

// Finite stuquandles: a carrier {0..n-1} together with five binary
// operations (*, R1, R2, R3, R4) given as n x n tables, plus the derived
// inverse operation *bar.  Tables are indexed row = first argument,
// column = second argument throughout.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace stuq {

using Table = std::vector<std::vector<int>>;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual or structural input.
class ParseError : public Error {
public:
    using Error::Error;
};

// Mathematically invalid object (axiom failure, non-unit parameter, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

enum class Op { Star, StarInv, R1, R2, R3, R4 };

inline const char* op_name(Op op) {
    switch (op) {
        case Op::Star: return "star";
        case Op::StarInv: return "starinv";
        case Op::R1: return "R1";
        case Op::R2: return "R2";
        case Op::R3: return "R3";
        case Op::R4: return "R4";
    }
    return "?";
}

struct Stuquandle {
    int n = 0;
    Table star, star_inv, r1, r2, r3, r4;

    int op(Op o, int x, int y) const {
        switch (o) {
            case Op::Star: return star[x][y];
            case Op::StarInv: return star_inv[x][y];
            case Op::R1: return r1[x][y];
            case Op::R2: return r2[x][y];
            case Op::R3: return r3[x][y];
            case Op::R4: return r4[x][y];
        }
        throw Error("bad op");
    }

    bool operator==(const Stuquandle&) const = default;
};

namespace detail {

inline int mod(long long v, int n) {
    long long r = v % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

inline int mod_inverse(int a, int n) {
    // extended Euclid; requires gcd(a, n) = 1
    int t = 0, new_t = 1, r = n, new_r = mod(a, n);
    while (new_r != 0) {
        int q = r / new_r;
        int tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1)
        throw DomainError("element " + std::to_string(a) + " is not a unit mod " +
                          std::to_string(n));
    return mod(t, n);
}

inline Table affine_table(int n, long long p, long long q) {
    Table t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            t[x][y] = mod(p * x + q * y, n);
    return t;
}

} // namespace detail

// Throws ParseError naming the first out-of-range entry.
inline void validate_table(int n, const Table& t, const std::string& name) {
    if (static_cast<int>(t.size()) != n)
        throw ParseError("table " + name + " has " + std::to_string(t.size()) +
                         " rows, expected " + std::to_string(n));
    for (int x = 0; x < n; ++x) {
        if (static_cast<int>(t[x].size()) != n)
            throw ParseError("table " + name + " row " + std::to_string(x) + " has " +
                             std::to_string(t[x].size()) + " entries, expected " +
                             std::to_string(n));
        for (int y = 0; y < n; ++y)
            if (t[x][y] < 0 || t[x][y] >= n)
                throw ParseError("table " + name + " entry (" + std::to_string(x) + "," +
                                 std::to_string(y) + ") = " + std::to_string(t[x][y]) +
                                 " out of range [0," + std::to_string(n) + ")");
    }
}

// Column-wise inverse of *: result[z][y] is the unique x with star[x][y] = z.
// Throws DomainError naming the first column that is not a permutation.
inline Table invert_star(const Table& star) {
    int n = static_cast<int>(star.size());
    Table inv(n, std::vector<int>(n, -1));
    for (int y = 0; y < n; ++y) {
        for (int x = 0; x < n; ++x) {
            int z = star[x][y];
            if (inv[z][y] != -1)
                throw DomainError("operation * is not right-invertible: column " +
                                  std::to_string(y) + " repeats value " + std::to_string(z));
            inv[z][y] = x;
        }
    }
    return inv;
}

// ---------------------------------------------------------------------------
// Axiom checking.
//
// Q1..Q3 are the quandle axioms, S1..S5 the singquandle axioms relating
// (*, R1, R2), ST6..ST10 the stuquandle axioms relating (*, R3, R4).
// Witnesses record the substitution that broke the axiom.

struct AxiomViolation {
    std::string axiom;
    std::vector<int> witness;
};

struct AxiomReport {
    bool passed = true;
    std::vector<AxiomViolation> violations;

    void add(const std::string& axiom, std::vector<int> witness) {
        passed = false;
        violations.push_back({axiom, std::move(witness)});
    }
};

// When first_per_axiom is set, only the first violation of each axiom is
// recorded; the default reports all of them.
inline AxiomReport check_axioms(int n, const Table& star, const Table& r1, const Table& r2,
                                const Table& r3, const Table& r4,
                                bool first_per_axiom = false) {
    validate_table(n, star, "star");
    validate_table(n, r1, "R1");
    validate_table(n, r2, "R2");
    validate_table(n, r3, "R3");
    validate_table(n, r4, "R4");

    AxiomReport report;
    auto seen = [&](const char* axiom) {
        return first_per_axiom && !report.violations.empty() &&
               report.violations.back().axiom == axiom;
    };

    for (int x = 0; x < n; ++x)
        if (star[x][x] != x && !seen("Q1")) report.add("Q1", {x});

    bool invertible = true;
    for (int y = 0; y < n; ++y) {
        std::vector<bool> hit(n, false);
        for (int x = 0; x < n; ++x) {
            int z = star[x][y];
            if (hit[z]) {
                invertible = false;
                if (!seen("Q2")) report.add("Q2", {x, y});
            }
            hit[z] = true;
        }
    }
    // The remaining axioms all mention *bar; without right-invertibility
    // they cannot even be stated, so stop here.
    if (!invertible) return report;

    Table si = invert_star(star);
    auto st = [&](int x, int y) { return star[x][y]; };
    auto sv = [&](int x, int y) { return si[x][y]; };

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (st(st(x, y), z) != st(st(x, z), st(y, z)) && !seen("Q3"))
                    report.add("Q3", {x, y, z});
                if (st(r1[sv(x, y)][z], y) != r1[x][st(z, y)] && !seen("S1"))
                    report.add("S1", {x, y, z});
                if (r2[sv(x, y)][z] != sv(r2[x][st(z, y)], y) && !seen("S2"))
                    report.add("S2", {x, y, z});
                if (st(sv(y, r1[x][z]), x) != sv(st(y, r2[x][z]), z) && !seen("S3"))
                    report.add("S3", {x, y, z});
                if (r3[st(y, x)][z] != st(r3[y][sv(z, x)], x) && !seen("ST8"))
                    report.add("ST8", {x, y, z});
                if (r4[y][sv(z, x)] != sv(r4[st(y, x)][z], x) && !seen("ST9"))
                    report.add("ST9", {x, y, z});
                if (sv(st(x, r4[y][z]), y) != st(sv(x, r3[y][z]), z) && !seen("ST10"))
                    report.add("ST10", {x, y, z});
            }

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (r2[x][y] != r1[y][st(x, y)] && !seen("S4"))
                report.add("S4", {x, y});
            if (st(r1[x][y], r2[x][y]) != r2[y][st(x, y)] && !seen("S5"))
                report.add("S5", {x, y});
            if (st(r3[y][x], r4[y][x]) != r4[st(x, y)][y] && !seen("ST6"))
                report.add("ST6", {x, y});
            if (r4[y][x] != r3[st(x, y)][y] && !seen("ST7"))
                report.add("ST7", {x, y});
        }

    return report;
}

inline AxiomReport check_axioms(const Stuquandle& x, bool first_per_axiom = false) {
    return check_axioms(x.n, x.star, x.r1, x.r2, x.r3, x.r4, first_per_axiom);
}

// Builds a Stuquandle from its five primary tables, deriving *bar.
// With check set (the default) an axiom failure raises DomainError.
inline Stuquandle from_tables(int n, Table star, Table r1, Table r2, Table r3, Table r4,
                              bool check = true) {
    if (n <= 0) throw DomainError("order must be positive");
    validate_table(n, star, "star");
    validate_table(n, r1, "R1");
    validate_table(n, r2, "R2");
    validate_table(n, r3, "R3");
    validate_table(n, r4, "R4");
    if (check) {
        AxiomReport report = check_axioms(n, star, r1, r2, r3, r4, true);
        if (!report.passed) {
            std::string msg = "tables do not satisfy the stuquandle axioms:";
            for (const auto& v : report.violations) msg += " " + v.axiom;
            throw DomainError(msg);
        }
    }
    Stuquandle x;
    x.n = n;
    x.star_inv = invert_star(star);
    x.star = std::move(star);
    x.r1 = std::move(r1);
    x.r2 = std::move(r2);
    x.r3 = std::move(r3);
    x.r4 = std::move(r4);
    return x;
}

// ---------------------------------------------------------------------------
// The affine family on Z_n:
//   x * y    = a x + (1-a) y          (a a unit)
//   x *bar y = a^-1 x + (1-a^-1) y
//   R1(x,y)  = b x + (1-b) y
//   R2(x,y)  = a(1-b) x + (1-a(1-b)) y
//   R3(x,y)  = (1-e) x + e y
//   R4(x,y)  = (1-a(1-e)) x + a(1-e) y

struct AffineParams {
    int n = 0;
    int a = 0, b = 0, e = 0;
};

inline Stuquandle make_affine(const AffineParams& p) {
    if (p.n <= 0) throw DomainError("order must be positive");
    int n = p.n;
    int a = detail::mod(p.a, n), b = detail::mod(p.b, n), e = detail::mod(p.e, n);
    int g = std::gcd(a == 0 ? n : a, n);
    if (g != 1)
        throw DomainError("parameter a = " + std::to_string(p.a) + " is not a unit mod " +
                          std::to_string(n) + " (gcd " + std::to_string(g) + ")");
    int ainv = detail::mod_inverse(a, n);

    Stuquandle x;
    x.n = n;
    x.star = detail::affine_table(n, a, 1 - a);
    x.star_inv = detail::affine_table(n, ainv, 1 - ainv);
    x.r1 = detail::affine_table(n, b, 1 - b);
    long long a1b = static_cast<long long>(a) * (1 - b);
    x.r2 = detail::affine_table(n, a1b, 1 - a1b);
    x.r3 = detail::affine_table(n, 1 - e, e);
    long long a1e = static_cast<long long>(a) * (1 - e);
    x.r4 = detail::affine_table(n, 1 - a1e, a1e);
    return x;
}

inline Stuquandle make_affine(int n, int a, int b, int e) {
    return make_affine(AffineParams{n, a, b, e});
}

// Every (a, b, e) with a a unit, in lexicographic order.
inline std::vector<std::pair<AffineParams, Stuquandle>> enumerate_affine(int n) {
    if (n <= 0) throw DomainError("order must be positive");
    std::vector<std::pair<AffineParams, Stuquandle>> out;
    for (int a = 0; a < n; ++a) {
        if (std::gcd(a == 0 ? n : a, n) != 1) continue;
        for (int b = 0; b < n; ++b)
            for (int e = 0; e < n; ++e) {
                AffineParams p{n, a, b, e};
                out.emplace_back(p, make_affine(p));
            }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Isomorphism search.  Returns the lexicographically least bijection f
// (as the image vector f[0], f[1], ...) preserving all five operations,
// or nullopt when none exists.

namespace detail {

inline bool iso_consistent(const Stuquandle& x, const Stuquandle& y, const std::vector<int>& f,
                           int assigned) {
    static constexpr std::array<Op, 5> ops = {Op::Star, Op::R1, Op::R2, Op::R3, Op::R4};
    int i = assigned - 1; // newly assigned element
    for (int j = 0; j < assigned; ++j)
        for (Op o : ops) {
            int ij = x.op(o, i, j), ji = x.op(o, j, i);
            if (ij < assigned && y.op(o, f[i], f[j]) != f[ij]) return false;
            if (ji < assigned && y.op(o, f[j], f[i]) != f[ji]) return false;
        }
    return true;
}

inline bool iso_search(const Stuquandle& x, const Stuquandle& y, std::vector<int>& f,
                       std::vector<bool>& used, int depth) {
    if (depth == x.n) return true;
    for (int img = 0; img < x.n; ++img) {
        if (used[img]) continue;
        f[depth] = img;
        used[img] = true;
        if (iso_consistent(x, y, f, depth + 1) && iso_search(x, y, f, used, depth + 1))
            return true;
        used[img] = false;
    }
    return false;
}

} // namespace detail

inline std::optional<std::vector<int>> are_isomorphic(const Stuquandle& x,
                                                      const Stuquandle& y) {
    if (x.n != y.n) return std::nullopt;
    std::vector<int> f(x.n, -1);
    std::vector<bool> used(x.n, false);
    if (detail::iso_search(x, y, f, used, 0)) return f;
    return std::nullopt;
}

// Relabels x along a permutation: result.op(p[x], p[y]) = p[x.op(x, y)].
inline Stuquandle relabel(const Stuquandle& x, const std::vector<int>& perm) {
    auto apply = [&](const Table& t) {
        Table out(x.n, std::vector<int>(x.n));
        for (int a = 0; a < x.n; ++a)
            for (int b = 0; b < x.n; ++b)
                out[perm[a]][perm[b]] = perm[t[a][b]];
        return out;
    };
    Stuquandle y;
    y.n = x.n;
    y.star = apply(x.star);
    y.star_inv = apply(x.star_inv);
    y.r1 = apply(x.r1);
    y.r2 = apply(x.r2);
    y.r3 = apply(x.r3);
    y.r4 = apply(x.r4);
    return y;
}

} // namespace stuq
