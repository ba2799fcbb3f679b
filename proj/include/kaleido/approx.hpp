#pragma once

#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "domain.hpp"

namespace kaleido {

// Chebyshev center of the fundamental spherical triangle, i.e. the center
// of the smallest ball enclosing its vertices.  t and s parametrize the
// center along the perpendicular bisectors of the chords [x,z] and [x,y]:
//   c = (x+z)/2 + t * w2 = (x+y)/2 + s * w1,
// with u = x-y, v = x-z and in-plane directions
//   w1 = u + coeff_u * v   (perpendicular to u),
//   w2 = v + coeff_v * u   (perpendicular to v),
//   coeff_u = -<u,u>/<u,v>,  coeff_v = -<v,v>/<u,v>.
// Note the linear variant -|u|/<u,v> does not make w1 orthogonal to u; the
// bisectors would then miss each other.  Both coefficient values are kept
// in the solution for inspection.
struct ChebyshevSolution {
    CoxeterSymbol symbol;
    Vec3 center;
    double radius{0.0};
    double t{0.0};
    double s{0.0};
    double coeff_u{0.0};         // -<u,u>/<u,v>, used
    double coeff_v{0.0};         // -<v,v>/<u,v>, used
    double coeff_u_linear{0.0};  // -|u|/<u,v>, for comparison only
};

inline ChebyshevSolution chebyshev_center(const SphericalTriangle& tri, const CoxeterSymbol& symbol) {
    const Vec3 x = tri.x.vec(), y = tri.y.vec(), z = tri.z.vec();
    const Vec3 u = x - y, v = x - z;
    const double uv = dot(u, v);
    if (std::abs(uv) <= kGeoTol)
        throw std::invalid_argument("chebyshev_center: chords [x,y] and [x,z] are orthogonal; "
                                    "bisector parametrization breaks down");
    ChebyshevSolution sol;
    sol.symbol = symbol;
    sol.coeff_u = -dot(u, u) / uv;
    sol.coeff_v = -dot(v, v) / uv;
    sol.coeff_u_linear = -norm(u) / uv;
    const Vec3 w1 = u + sol.coeff_u * v;
    const Vec3 w2 = v + sol.coeff_v * u;

    // (x+y)/2 + s w1 = (x+z)/2 + t w2  ->  s w1 - t w2 = (z-y)/2,
    // an overdetermined but consistent 3x2 system; solve its normal form.
    const Vec3 rhs = 0.5 * (z - y);
    const double a11 = dot(w1, w1), a12 = -dot(w1, w2), a22 = dot(w2, w2);
    const double b1 = dot(w1, rhs), b2 = -dot(w2, rhs);
    const double det = a11 * a22 - a12 * a12;
    if (std::abs(det) <= 1e-15)
        throw std::runtime_error("chebyshev_center: bisector directions are parallel");
    sol.s = (b1 * a22 - a12 * b2) / det;
    sol.t = (a11 * b2 - b1 * a12) / det;

    const Vec3 c1 = 0.5 * (x + y) + sol.s * w1;
    const Vec3 c2 = 0.5 * (x + z) + sol.t * w2;
    if (distance(c1, c2) > 1e-7)
        throw std::runtime_error("chebyshev_center: bisectors failed to intersect");
    sol.center = 0.5 * (c1 + c2);
    sol.radius = std::max({distance(sol.center, x), distance(sol.center, y), distance(sol.center, z)});
    return sol;
}

inline ChebyshevSolution chebyshev_center(const CoxeterSymbol& symbol) {
    return chebyshev_center(fundamental_triangle(symbol), symbol);
}

enum class HausdorffMethod { exact_vertex, sampled };

inline std::string to_string(HausdorffMethod m) {
    return m == HausdorffMethod::exact_vertex ? "exact-vertex" : "sampled";
}

// Two-sided Hausdorff distance report between a finite orbit and the unit
// sphere.  total = max(sphere_to_orbit, orbit_to_sphere).
struct HausdorffReport {
    Vec3 seed;
    double scale{1.0};
    std::size_t orbit_size{0};
    double sphere_to_orbit{0.0};
    double orbit_to_sphere{0.0};
    double total{0.0};
    HausdorffMethod method{HausdorffMethod::exact_vertex};
};

namespace detail {

// Minimizes the linear functional <p, .> over the spherical patch cut out
// by the cone, which is what the farthest patch point from p realizes:
// d(p,y)^2 = |p|^2 + 1 - 2<p,y> for unit y.  The minimum is attained at a
// vertex, at a stationary point on an edge arc (the antipode of p's
// projection onto the arc plane), or at -p/|p| in the patch interior;
// taking the best over all such candidates is exact.
class PatchEvaluator {
  public:
    PatchEvaluator(const SphericalTriangle& tri, const FundamentalCone& cone)
        : v_{tri.x.vec(), tri.y.vec(), tri.z.vec()}, cone_(cone) {
        for (int i = 0; i < 3; ++i) {
            const Vec3& a = v_[static_cast<std::size_t>(i)];
            const Vec3& b = v_[static_cast<std::size_t>((i + 1) % 3)];
            gram_[static_cast<std::size_t>(i)] = dot(a, b);
        }
    }

    double min_dot(const Vec3& p) const {
        double best = std::min({dot(p, v_[0]), dot(p, v_[1]), dot(p, v_[2])});
        for (int i = 0; i < 3; ++i) {
            const Vec3& a = v_[static_cast<std::size_t>(i)];
            const Vec3& b = v_[static_cast<std::size_t>((i + 1) % 3)];
            const double g = gram_[static_cast<std::size_t>(i)];
            const double det = 1.0 - g * g;
            if (det <= 1e-12) continue;
            // coefficients of p's projection onto span{a,b}
            const double pa = dot(p, a), pb = dot(p, b);
            const double ca = (pa - g * pb) / det;
            const double cb = (pb - g * pa) / det;
            const Vec3 proj = ca * a + cb * b;
            const double plen = norm(proj);
            if (plen <= 1e-14) continue;  // functional vanishes on this arc
            // stationary points on the great circle are +-proj/|proj|;
            // they lie on the arc iff both chord coefficients are >= 0
            if (ca <= 1e-12 && cb <= 1e-12) best = std::min(best, -plen);
            if (ca >= -1e-12 && cb >= -1e-12) best = std::min(best, plen);
        }
        const double pn = norm(p);
        if (pn > 1e-14 && cone_.contains(-1.0 / pn * p, kGeoTol)) best = std::min(best, -pn);
        return best;
    }

    double sup_distance(const Vec3& p) const {
        return std::sqrt(std::max(0.0, norm2(p) + 1.0 - 2.0 * min_dot(p)));
    }

  private:
    std::array<Vec3, 3> v_;
    std::array<double, 3> gram_;
    FundamentalCone cone_;
};

// Brute-force counterpart: barycentric grid over the patch plus one local
// ascent pass around the best sample.  Used to corroborate the stationary
// point candidates.
inline double patch_grid_sup(const Vec3& p, const SphericalTriangle& tri, int grid_n) {
    const Vec3 x = tri.x.vec(), y = tri.y.vec(), z = tri.z.vec();
    auto at = [&](double a, double b, double c) {
        return distance(p, normalize(a * x + b * y + c * z));
    };
    double best = 0.0;
    double ba = 1.0, bb = 0.0;
    for (int i = 0; i <= grid_n; ++i) {
        for (int j = 0; j <= grid_n - i; ++j) {
            const int k = grid_n - i - j;
            const double a = static_cast<double>(i) / grid_n;
            const double b = static_cast<double>(j) / grid_n;
            const double c = static_cast<double>(k) / grid_n;
            const double d = at(a, b, c);
            if (d > best) {
                best = d;
                ba = a;
                bb = b;
            }
        }
    }
    // compass ascent in barycentric coordinates
    double step = 1.0 / grid_n;
    while (step > 1e-12) {
        bool improved = false;
        const double moves[4][2] = {{step, 0.0}, {-step, 0.0}, {0.0, step}, {0.0, -step}};
        for (const auto& mv : moves) {
            double a = ba + mv[0], b = bb + mv[1];
            a = std::max(0.0, a);
            b = std::max(0.0, b);
            double c = 1.0 - a - b;
            if (c < 0.0) continue;
            const double d = at(a, b, c);
            if (d > best) {
                best = d;
                ba = a;
                bb = b;
                improved = true;
            }
        }
        if (!improved) step *= 0.5;
    }
    return best;
}

}  // namespace detail

// Hausdorff distance of the orbit of p (p inside the fundamental cone) to
// the unit sphere, computed through the chamber structure: every sphere
// point is a group image of a patch point y, whose closest orbit point is
// p itself, so sphere_to_orbit = sup over the patch of d(p, .).  The sup
// is taken over the stationary-point candidates and corroborated by a
// barycentric grid (>= 10^4 nodes at the default setting) with a local
// ascent pass.
inline HausdorffReport hausdorff_to_sphere_exact(const FiniteGroup& g, const SphericalTriangle& tri,
                                                 const Vec3& p, int grid_n = 140) {
    const FundamentalCone cone(g.generators);
    if (!cone.contains(p, kGeoTol))
        throw std::invalid_argument("hausdorff_to_sphere_exact: seed lies outside the fundamental "
                                    "cone; apply fold_to_domain first");
    const detail::PatchEvaluator patch(tri, cone);
    double sphere_to_orbit = patch.sup_distance(p);
    if (grid_n > 0) {
        const double refined = detail::patch_grid_sup(p, tri, grid_n);
        if (refined > sphere_to_orbit + kGeoTol) sphere_to_orbit = refined;
    }
    const double orbit_to_sphere = std::abs(1.0 - norm(p));
    HausdorffReport rep;
    rep.seed = p;
    rep.scale = 1.0;
    rep.orbit_size = orbit(g, p).points.size();
    rep.sphere_to_orbit = sphere_to_orbit;
    rep.orbit_to_sphere = orbit_to_sphere;
    rep.total = std::max(sphere_to_orbit, orbit_to_sphere);
    rep.method = HausdorffMethod::exact_vertex;
    return rep;
}

namespace detail {

inline Vec3 fibonacci_node(std::size_t k, std::size_t count) {
    const double z = 1.0 - (2.0 * static_cast<double>(k) + 1.0) / static_cast<double>(count);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = static_cast<double>(k) * std::numbers::pi * (3.0 - std::sqrt(5.0));
    return {r * std::cos(phi), r * std::sin(phi), z};
}

inline double nearest_distance(const Vec3& q, std::span<const Vec3> pts) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& w : pts) best = std::min(best, norm2(q - w));
    return std::sqrt(best);
}

}  // namespace detail

// Group-free sampling oracle: sphere_to_orbit is estimated from a Fibonacci
// lattice (approaching the sup from below as samples grow) and sharpened by
// a compass search around the best node; orbit_to_sphere is exact.
inline HausdorffReport hausdorff_to_sphere_sampled(std::span<const Vec3> points, std::size_t samples = 200000) {
    if (points.empty())
        throw std::invalid_argument("hausdorff_to_sphere_sampled: empty point set");
    if (samples < 1000)
        throw std::invalid_argument("hausdorff_to_sphere_sampled: need at least 1000 samples");

    double best = -1.0;
    Vec3 argmax{0, 0, 1};
    for (std::size_t k = 0; k < samples; ++k) {
        const Vec3 q = detail::fibonacci_node(k, samples);
        const double d = detail::nearest_distance(q, points);
        if (d > best) {
            best = d;
            argmax = q;
        }
    }
    // local refinement on the sphere around the best lattice node
    Vec3 t1 = cross(argmax, std::abs(argmax.z) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0});
    t1 = normalize(t1);
    Vec3 t2 = cross(argmax, t1);
    double step = 4.0 * std::sqrt(4.0 * std::numbers::pi / static_cast<double>(samples));
    while (step > 1e-10) {
        bool improved = false;
        const double moves[4][2] = {{step, 0.0}, {-step, 0.0}, {0.0, step}, {0.0, -step}};
        for (const auto& mv : moves) {
            const Vec3 q = normalize(argmax + mv[0] * t1 + mv[1] * t2);
            const double d = detail::nearest_distance(q, points);
            if (d > best) {
                best = d;
                argmax = q;
                improved = true;
            }
        }
        if (!improved) step *= 0.5;
    }

    double orbit_to_sphere = 0.0;
    for (const auto& w : points) orbit_to_sphere = std::max(orbit_to_sphere, std::abs(1.0 - norm(w)));

    HausdorffReport rep;
    rep.seed = points[0];
    rep.scale = 1.0;
    rep.orbit_size = points.size();
    rep.sphere_to_orbit = best;
    rep.orbit_to_sphere = orbit_to_sphere;
    rep.total = std::max(best, orbit_to_sphere);
    rep.method = HausdorffMethod::sampled;
    return rep;
}

// Best scaling of a direction inside the cone: minimizes the exact
// Hausdorff distance of the orbit of t*direction over t in [0,2], by a
// 0.01-step coarse sweep followed by golden-section refinement.
inline std::pair<double, HausdorffReport> optimal_scale(const FiniteGroup& g,
                                                        const SphericalTriangle& tri,
                                                        const Vec3& direction) {
    const FundamentalCone cone(g.generators);
    if (norm(direction) <= 1e-12)
        throw std::invalid_argument("optimal_scale: zero direction");
    if (!cone.contains(direction, kGeoTol))
        throw std::invalid_argument("optimal_scale: direction lies outside the fundamental cone; "
                                    "apply fold_to_domain first");
    const detail::PatchEvaluator patch(tri, cone);
    const double len = norm(direction);
    auto total_at = [&](double t) {
        return std::max(patch.sup_distance(t * direction), std::abs(1.0 - t * len));
    };

    double best_t = 0.0, best_val = total_at(0.0);
    for (int k = 1; k <= 200; ++k) {
        const double t = 0.01 * k;
        const double val = total_at(t);
        if (val < best_val) {
            best_val = val;
            best_t = t;
        }
    }
    double lo = std::max(0.0, best_t - 0.01), hi = std::min(2.0, best_t + 0.01);
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - phi * (hi - lo), d = lo + phi * (hi - lo);
    double fc = total_at(c), fd = total_at(d);
    while (hi - lo > 1e-6) {
        if (fc < fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - phi * (hi - lo);
            fc = total_at(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + phi * (hi - lo);
            fd = total_at(d);
        }
    }
    const double t_star = 0.5 * (lo + hi);
    HausdorffReport rep = hausdorff_to_sphere_exact(g, tri, t_star * direction);
    rep.scale = t_star;
    return {t_star, rep};
}

// Hausdorff distance of the Chebyshev-center orbit of a polyhedral group,
// the group's best homogeneous approximation of the sphere.
inline HausdorffReport group_sphere_distance(const CoxeterSymbol& symbol) {
    require_valid(symbol);
    if (symbol.m != 3)
        throw std::invalid_argument("group_sphere_distance: " + to_string(symbol) +
                                    " has no Chebyshev-center orbit; use dihedral_bound for [2,n]");
    const FiniteGroup g = build_group(symbol);
    const SphericalTriangle tri = fundamental_triangle(symbol);
    const ChebyshevSolution sol = chebyshev_center(tri, symbol);
    HausdorffReport rep = hausdorff_to_sphere_exact(g, tri, sol.center);
    if (std::abs(rep.total - sol.radius) > 1e-6)
        throw std::runtime_error("group_sphere_distance: Hausdorff total and Chebyshev radius "
                                 "disagree beyond tolerance");
    return rep;
}

// Lower envelope of the [2,n] families: minimizes the orbit-to-sphere
// Hausdorff distance over seeds on a (latitude angle) x (radius) grid,
// with the seed azimuth fixed at the chamber bisector.  Orbits of [2,n]
// lie on at most two latitude circles; the returned minimum stays above
// sqrt(2)/2 no matter how the two latitudes are placed.
inline double dihedral_bound(int n, double grid = 1e-3) {
    if (n < 2) throw std::invalid_argument("dihedral_bound: need n >= 2");
    const CoxeterSymbol symbol{2, n};
    const GeneratorSet gens = build_generators(symbol);
    const FundamentalCone cone(gens);
    const SphericalTriangle tri = cone_patch(gens);
    const detail::PatchEvaluator patch(tri, cone);

    // equatorial bisector of the chamber wedge (x and z are its equator rays)
    const Vec3 bisector = normalize(tri.x.vec() + tri.z.vec());

    const double half_pi = 0.5 * std::numbers::pi;
    double best = std::numeric_limits<double>::infinity();
    for (double alpha = 0.0; alpha <= half_pi + 1e-12; alpha += grid) {
        const Vec3 u{bisector.x * std::cos(alpha), bisector.y * std::cos(alpha), -std::sin(alpha)};
        // d(p, y)^2 = r^2 + 1 - 2 r <u,y> for p = r u, so the patch minimum
        // of <p, .> scales linearly in r and one evaluation serves all radii.
        const double mu = patch.min_dot(u);
        for (double r = 0.0; r <= 2.0 + 1e-12; r += grid) {
            const double sphere_to_orbit = std::sqrt(std::max(0.0, r * r + 1.0 - 2.0 * r * mu));
            const double total = std::max(sphere_to_orbit, std::abs(1.0 - r));
            best = std::min(best, total);
        }
    }
    return best;
}

}  // namespace kaleido
