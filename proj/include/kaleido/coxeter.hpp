#pragma once

#include <cctype>
#include <charconv>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "geom.hpp"

namespace kaleido {

// Coxeter symbol [m,n] of a rank-3 reflection group acting on R^3.
// Admissible here: [3,3], [3,4], [3,5] (the polyhedral kaleidoscopes) and
// [2,n] for n >= 2 (dihedral x mirror).  Other symbols are either infinite
// or not realizable with these angle constraints.
struct CoxeterSymbol {
    int m{2};
    int n{2};
    bool operator==(const CoxeterSymbol&) const = default;
};

inline bool symbol_is_valid(const CoxeterSymbol& s) {
    return (s.m == 3 && s.n >= 3 && s.n <= 5) || (s.m == 2 && s.n >= 2);
}

inline void require_valid(const CoxeterSymbol& s) {
    if (!symbol_is_valid(s))
        throw std::invalid_argument("symbol [" + std::to_string(s.m) + "," + std::to_string(s.n) +
                                    "] is not admissible: expected [3,n] with n in {3,4,5}, or [2,n] with n >= 2");
}

inline std::string to_string(const CoxeterSymbol& s) {
    return "[" + std::to_string(s.m) + "," + std::to_string(s.n) + "]";
}

inline CoxeterSymbol parse_symbol(std::string_view text) {
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    if (compact.size() < 5 || compact.front() != '[' || compact.back() != ']')
        throw std::invalid_argument("cannot parse Coxeter symbol '" + std::string(text) +
                                    "': expected the form [m,n]");
    const auto comma = compact.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("cannot parse Coxeter symbol '" + std::string(text) +
                                    "': expected the form [m,n]");
    auto parse_int = [&](std::string_view part) {
        int value = 0;
        const auto* first = part.data();
        const auto* last = part.data() + part.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last)
            throw std::invalid_argument("cannot parse Coxeter symbol '" + std::string(text) +
                                        "': expected integers in [m,n]");
        return value;
    };
    CoxeterSymbol s{parse_int(std::string_view(compact).substr(1, comma - 1)),
                    parse_int(std::string_view(compact).substr(comma + 1, compact.size() - comma - 2))};
    require_valid(s);
    return s;
}

// Unit normals of the three generating mirrors.
struct GeneratorSet {
    UnitVec n1, n2, n3;
};

// Mirror layout: n1 = (0,0,1) and n3 = (0,1,0) are fixed; n2 is placed so
// that <n1,n2> = cos(pi/m) and <n2,n3> = cos(pi/n), giving the generator
// rotations R1R2 and R2R3 orders m and n.
inline GeneratorSet build_generators(const CoxeterSymbol& s) {
    require_valid(s);
    const Vec3 n1{0.0, 0.0, 1.0};
    const Vec3 n3{0.0, 1.0, 0.0};
    Vec3 n2;
    if (s.m == 3) {
        const double c = std::cos(std::numbers::pi / s.n);
        n2 = {std::sqrt(1.0 - c * c - 0.25), c, 0.5};
    } else {
        const double t = std::numbers::pi / s.n;
        n2 = {-std::sin(t), std::cos(t), 0.0};
    }
    return {UnitVec(n1), UnitVec(n2), UnitVec(n3)};
}

// Finite reflection group: the closure of the three mirror reflections.
// Elements are stored as matrices in breadth-first generation order with
// the identity first; no word bookkeeping is kept.
struct FiniteGroup {
    CoxeterSymbol symbol;
    GeneratorSet generators;
    std::array<OrthogonalMap, 3> mirrors;
    std::vector<OrthogonalMap> elements;

    std::size_t size() const { return elements.size(); }

    bool contains(const OrthogonalMap& q, double tol = kDedupTol) const {
        for (const auto& e : elements)
            if (approx_equal(e, q, tol)) return true;
        return false;
    }
};

inline FiniteGroup generate_group(const GeneratorSet& gens, const CoxeterSymbol& symbol,
                                  double dedup = kDedupTol, std::size_t cap = 1000) {
    FiniteGroup g{symbol, gens,
                  {reflect_normal(gens.n1), reflect_normal(gens.n2), reflect_normal(gens.n3)},
                  {}};
    g.elements.push_back(OrthogonalMap::identity());
    for (std::size_t head = 0; head < g.elements.size(); ++head) {
        for (const auto& mirror : g.mirrors) {
            const OrthogonalMap next = compose(g.elements[head], mirror);
            if (!g.contains(next, dedup)) {
                g.elements.push_back(next);
                if (g.elements.size() > cap)
                    throw std::runtime_error(
                        "generate_group: closure exceeded " + std::to_string(cap) +
                        " elements; generator angles do not define a finite group (or the dedup "
                        "tolerance is too tight)");
            }
        }
    }
    return g;
}

inline FiniteGroup build_group(const CoxeterSymbol& symbol, double dedup = kDedupTol) {
    return generate_group(build_generators(symbol), symbol, dedup);
}

namespace detail {

// q^k == I and no smaller positive power is the identity.
inline bool has_exact_order(const OrthogonalMap& q, int k, double tol = kOrthTol) {
    OrthogonalMap p = q;
    for (int j = 1; j < k; ++j) {
        if (is_identity(p, tol)) return false;
        p = compose(p, q);
    }
    return is_identity(p, tol);
}

}  // namespace detail

// Checks the defining relations R_i^2 = (R1R2)^m = (R2R3)^n = (R1R3)^2 = I,
// with order exactness (no relation holds at a smaller exponent).
inline bool verify_presentation(const FiniteGroup& g, double tol = kOrthTol) {
    const auto& [r1, r2, r3] = g.mirrors;
    for (const auto& r : g.mirrors)
        if (!detail::has_exact_order(r, 2, tol)) return false;
    return detail::has_exact_order(compose(r1, r2), g.symbol.m, tol) &&
           detail::has_exact_order(compose(r2, r3), g.symbol.n, tol) &&
           detail::has_exact_order(compose(r1, r3), 2, tol);
}

// The index-2 subgroup of determinant +1 elements.
inline FiniteGroup rotation_subgroup(const FiniteGroup& g) {
    FiniteGroup rot{g.symbol, g.generators, g.mirrors, {}};
    for (const auto& e : g.elements)
        if (e.det() > 0.0) rot.elements.push_back(e);
    if (2 * rot.elements.size() != g.elements.size())
        throw std::runtime_error("rotation_subgroup: determinant split is not index 2");
    return rot;
}

struct Orbit {
    Vec3 seed;
    std::vector<Vec3> points;
    const FiniteGroup* group{nullptr};
};

// Deduplicated orbit of a point, in group-element order (seed image under
// the identity comes first).
inline Orbit orbit(const FiniteGroup& g, const Vec3& p, double dedup = kDedupTol) {
    Orbit o{p, {}, &g};
    for (const auto& e : g.elements) {
        const Vec3 q = e(p);
        bool seen = false;
        for (const auto& r : o.points)
            if (distance(q, r) <= dedup) {
                seen = true;
                break;
            }
        if (!seen) o.points.push_back(q);
    }
    return o;
}

inline int stabilizer_order(const FiniteGroup& g, const Vec3& p, double dedup = kDedupTol) {
    int count = 0;
    for (const auto& e : g.elements)
        if (distance(e(p), p) <= dedup) ++count;
    return count;
}

}  // namespace kaleido
