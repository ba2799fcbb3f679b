#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "coxeter.hpp"

namespace kaleido {

// Closed fundamental chamber of the reflection group: the wedge bounded by
// the three mirror planes whose walls meet at the dihedral angles pi/m,
// pi/n, pi/2.  With the normals of build_generators this is the side where
// n1 and n3 point outward and n2 points inward, so membership reads
// <p,n1> <= tol, <p,-n2> <= tol, <p,n3> <= tol.  (The all-nonpositive side
// of the raw normals is a union of several chambers, not a fundamental
// domain: its wall angles are pi - pi/m and pi - pi/n.)
class FundamentalCone {
  public:
    explicit FundamentalCone(const GeneratorSet& gens)
        : outward_{gens.n1.vec(), -gens.n2.vec(), gens.n3.vec()} {}

    bool contains(const Vec3& p, double tol = kGeoTol) const {
        return dot(p, outward_[0]) <= tol && dot(p, outward_[1]) <= tol && dot(p, outward_[2]) <= tol;
    }

    // Outward unit normals of the three walls, in mirror order R1, R2, R3.
    const std::array<Vec3, 3>& outward() const { return outward_; }

  private:
    std::array<Vec3, 3> outward_;
};

// Spherical triangle cut out of the unit sphere by the fundamental cone,
// with the midpoints of its chords.  Vertex x lies on mirrors R1,R2;
// y on R2,R3; z on R3,R1.
struct SphericalTriangle {
    UnitVec x, y, z;
    Vec3 m1, m2, m3;  // m1 = (x+z)/2, m2 = (x+y)/2, m3 = (z+y)/2
};

namespace detail {

inline UnitVec cone_ray(const Vec3& a, const Vec3& b, const FundamentalCone& cone) {
    Vec3 r = normalize(cross(a, b));
    if (!cone.contains(r, kGeoTol)) r = -r;
    if (!cone.contains(r, kGeoTol))
        throw std::runtime_error("cone_ray: mirror intersection line misses the fundamental cone");
    return UnitVec(r);
}

}  // namespace detail

// Extreme rays of the fundamental cone on the unit sphere.  Works for any
// admissible generator set; the [3,n] case is exposed as
// fundamental_triangle below.
inline SphericalTriangle cone_patch(const GeneratorSet& gens) {
    const FundamentalCone cone(gens);
    const UnitVec x = detail::cone_ray(gens.n1.vec(), gens.n2.vec(), cone);
    const UnitVec y = detail::cone_ray(gens.n2.vec(), gens.n3.vec(), cone);
    const UnitVec z = detail::cone_ray(gens.n3.vec(), gens.n1.vec(), cone);
    return {x, y, z, 0.5 * (x.vec() + z.vec()), 0.5 * (x.vec() + y.vec()),
            0.5 * (z.vec() + y.vec())};
}

// Fundamental spherical triangle of a polyhedral group [3,n].  The [2,n]
// groups keep their orbits on latitude circles and are handled by
// dihedral_bound instead.
inline SphericalTriangle fundamental_triangle(const CoxeterSymbol& s) {
    require_valid(s);
    if (s.m != 3)
        throw std::invalid_argument("fundamental_triangle: " + to_string(s) +
                                    " is not supported; only [3,n] groups have spherical-triangle "
                                    "domains (for [2,n] see dihedral_bound)");
    return cone_patch(build_generators(s));
}

inline bool in_fundamental_domain(const Vec3& p, const FundamentalCone& cone, double tol = kGeoTol) {
    return cone.contains(p, tol);
}

// Maps p into the fundamental cone: scans group elements in generation
// order and returns the first image that lands inside, together with the
// element that achieved it.
inline std::pair<Vec3, OrthogonalMap> fold_to_domain(const Vec3& p, const FiniteGroup& g) {
    const FundamentalCone cone(g.generators);
    for (const auto& e : g.elements) {
        const Vec3 q = e(p);
        if (cone.contains(q, kGeoTol)) return {q, e};
    }
    throw std::runtime_error("fold_to_domain: no group image lies in the fundamental cone");
}

// Outcome of a randomized property check.  worst_margin is the smallest
// slack seen across all comparisons; negative slack beyond the tolerance
// counts as a violation.
struct PropertyCheckReport {
    int trials{0};
    long long comparisons{0};
    int violations{0};
    double worst_margin{0.0};
    bool pass() const { return violations == 0; }
};

namespace detail {

inline std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    // splitmix-style mixing gives independent, reproducible per-trial streams
    std::uint64_t v = seed + 0x9e3779b97f4a7c15ull * (trial + 1);
    v ^= v >> 30;
    v *= 0xbf58476d1ce4e5b9ull;
    v ^= v >> 27;
    v *= 0x94d049bb133111ebull;
    v ^= v >> 31;
    return std::mt19937_64(v);
}

inline Vec3 sample_in_ball(std::mt19937_64& rng, double radius) {
    std::uniform_real_distribution<double> u(-radius, radius);
    while (true) {
        const Vec3 p{u(rng), u(rng), u(rng)};
        if (norm(p) <= radius) return p;
    }
}

inline Vec3 sample_in_cone_ball(std::mt19937_64& rng, const FundamentalCone& cone, double radius) {
    while (true) {
        const Vec3 p = sample_in_ball(rng, radius);
        if (cone.contains(p, 0.0)) return p;
    }
}

inline Vec3 sample_on_patch(std::mt19937_64& rng, const FundamentalCone& cone) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (true) {
        const Vec3 p{gauss(rng), gauss(rng), gauss(rng)};
        if (norm(p) < 1e-6) continue;
        const Vec3 q = normalize(p);
        if (cone.contains(q, 0.0)) return q;
    }
}

}  // namespace detail

// Voronoi property of the chamber: for p in the cone and y on the spherical
// patch, p is the closest orbit point to y, i.e. d(p,y) <= d(h p, y) for
// every group element h.
inline PropertyCheckReport check_dirichlet(const FiniteGroup& g, int trials, std::uint64_t seed = 0) {
    const FundamentalCone cone(g.generators);
    PropertyCheckReport report;
    report.trials = trials;
    report.worst_margin = std::numeric_limits<double>::infinity();
    for (int t = 0; t < trials; ++t) {
        auto rng = detail::trial_rng(seed, static_cast<std::uint64_t>(t));
        const Vec3 p = detail::sample_in_cone_ball(rng, cone, 2.0);
        const Vec3 y = detail::sample_on_patch(rng, cone);
        const double base = distance(p, y);
        for (const auto& h : g.elements) {
            const double margin = distance(h(p), y) - base;
            report.worst_margin = std::min(report.worst_margin, margin);
            if (margin < -kGeoTol) ++report.violations;
            ++report.comparisons;
        }
    }
    return report;
}

// Images of the closed cone never straddle a mirror: for x, y in the cone
// and any h in the group, h x and h y satisfy <h x, n><h y, n> >= 0 for
// each generator normal n (up to tolerance).
inline PropertyCheckReport check_same_side(const FiniteGroup& g, int trials, std::uint64_t seed = 0) {
    const FundamentalCone cone(g.generators);
    const std::array<Vec3, 3> normals = {g.generators.n1.vec(), g.generators.n2.vec(),
                                         g.generators.n3.vec()};
    PropertyCheckReport report;
    report.trials = trials;
    report.worst_margin = std::numeric_limits<double>::infinity();
    for (int t = 0; t < trials; ++t) {
        auto rng = detail::trial_rng(seed ^ 0x5de5c0ffee0ull, static_cast<std::uint64_t>(t));
        const Vec3 x = detail::sample_in_cone_ball(rng, cone, 2.0);
        const Vec3 y = detail::sample_in_cone_ball(rng, cone, 2.0);
        for (const auto& h : g.elements) {
            const Vec3 hx = h(x), hy = h(y);
            for (const auto& n : normals) {
                const double margin = dot(hx, n) * dot(hy, n);
                report.worst_margin = std::min(report.worst_margin, margin);
                if (margin < -kGeoTol) ++report.violations;
                ++report.comparisons;
            }
        }
    }
    return report;
}

}  // namespace kaleido
