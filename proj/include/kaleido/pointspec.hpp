#pragma once

#include <charconv>
#include <optional>
#include <stdexcept>
#include <string>

#include "approx.hpp"
#include "catalog.hpp"
#include "coxeter.hpp"
#include "domain.hpp"

namespace kaleido {

// A seed-point description as accepted on the command line:
//
//   x | y | z | m1 | m2 | m3 | centroid | chebyshev   named triangle point
//   0.79*y                                            scaled named point
//   (0.3, -0.1, 0.9)                                  literal coordinates
//
// Named points live on the fundamental triangle (chebyshev additionally
// needs the symbol); literals may lie anywhere and are folded into the
// fundamental domain before use, so the orbit they generate is unchanged.
struct PointSpec {
    std::optional<std::string> name;    // set for named points
    std::optional<Vec3> literal;        // set for literal coordinates
    double scale = 1.0;                 // prefix factor, named points only
};

namespace detail {

inline const char* skip_ws(const char* p, const char* end) {
    while (p != end && (*p == ' ' || *p == '\t')) ++p;
    return p;
}

inline double parse_number(const char*& p, const char* end, const std::string& what) {
    p = skip_ws(p, end);
    double value = 0.0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc())
        throw std::invalid_argument("point spec: expected a number in " + what);
    p = next;
    return value;
}

}  // namespace detail

inline PointSpec parse_point_spec(const std::string& text) {
    const char* p = text.data();
    const char* end = p + text.size();
    p = detail::skip_ws(p, end);
    if (p == end) throw std::invalid_argument("point spec: empty string");

    if (*p == '(') {
        ++p;
        PointSpec spec;
        Vec3 v;
        v.x = detail::parse_number(p, end, "'" + text + "'");
        p = detail::skip_ws(p, end);
        if (p == end || *p != ',') throw std::invalid_argument("point spec: expected ',' in '" + text + "'");
        ++p;
        v.y = detail::parse_number(p, end, "'" + text + "'");
        p = detail::skip_ws(p, end);
        if (p == end || *p != ',') throw std::invalid_argument("point spec: expected ',' in '" + text + "'");
        ++p;
        v.z = detail::parse_number(p, end, "'" + text + "'");
        p = detail::skip_ws(p, end);
        if (p == end || *p != ')') throw std::invalid_argument("point spec: expected ')' in '" + text + "'");
        p = detail::skip_ws(p + 1, end);
        if (p != end) throw std::invalid_argument("point spec: trailing text in '" + text + "'");
        spec.literal = v;
        return spec;
    }

    PointSpec spec;
    const char* star = nullptr;
    for (const char* q = p; q != end; ++q)
        if (*q == '*') { star = q; break; }
    if (star != nullptr) {
        const char* q = p;
        spec.scale = detail::parse_number(q, end, "scale prefix of '" + text + "'");
        q = detail::skip_ws(q, end);
        if (q != star)
            throw std::invalid_argument("point spec: malformed scale prefix in '" + text + "'");
        p = detail::skip_ws(star + 1, end);
    }
    const char* name_end = end;
    while (name_end != p && (name_end[-1] == ' ' || name_end[-1] == '\t')) --name_end;
    std::string name(p, name_end);
    static const char* const names[] = {"x", "y", "z", "m1", "m2", "m3", "centroid", "chebyshev"};
    for (const char* known : names)
        if (name == known) {
            spec.name = name;
            return spec;
        }
    throw std::invalid_argument(
        "point spec: unknown point '" + name +
        "': expected x, y, z, m1, m2, m3, centroid, chebyshev or a literal (a, b, c)");
}

// Turns a spec into a concrete seed inside the fundamental domain.
inline Vec3 resolve_point_spec(const PointSpec& spec, const FiniteGroup& group,
                               const SphericalTriangle& tri) {
    if (spec.literal) {
        if (norm(*spec.literal) <= kGeoTol)
            throw std::invalid_argument("point spec: literal point is at the origin");
        return fold_to_domain(*spec.literal, group).first;
    }
    const std::string& name = *spec.name;
    Vec3 base;
    if (name == "chebyshev") {
        base = chebyshev_center(tri, group.symbol).center;
    } else {
        TrianglePoint pt;
        if (name == "x") pt = TrianglePoint::vx;
        else if (name == "y") pt = TrianglePoint::vy;
        else if (name == "z") pt = TrianglePoint::vz;
        else if (name == "m1") pt = TrianglePoint::m1;
        else if (name == "m2") pt = TrianglePoint::m2;
        else if (name == "m3") pt = TrianglePoint::m3;
        else pt = TrianglePoint::centroid;
        base = triangle_point(tri, pt);
    }
    return spec.scale * base;
}

// Convenience overload: builds the fundamental triangle only when the spec
// names a triangle point, so literal coordinates also work under [2,n]
// symbols, which have no spherical triangle.
inline Vec3 resolve_point_spec(const PointSpec& spec, const FiniteGroup& group) {
    if (spec.literal) {
        if (norm(*spec.literal) <= kGeoTol)
            throw std::invalid_argument("point spec: literal point is at the origin");
        return fold_to_domain(*spec.literal, group).first;
    }
    return resolve_point_spec(spec, group, fundamental_triangle(group.symbol));
}

}  // namespace kaleido
