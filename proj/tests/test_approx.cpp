#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include <kaleido/approx.hpp>

using namespace kaleido;

namespace {

struct PublishedRow {
    CoxeterSymbol symbol;
    double t, s;
    Vec3 center;
    double radius;
};

// Chebyshev data for the three polyhedral groups, as published.
const PublishedRow kPublished[] = {
    {{3, 3}, 0.3255, 0.0872, {0.6511, -0.3370, -0.3370}, 0.5907},
    {{3, 4}, 0.3929, 0.0397, {0.7858, -0.2498, -0.3255}, 0.4628},
    {{3, 5}, 0.4485, 0.0153, {0.8971, -0.1655, -0.2548}, 0.3208},
};

Vec3 random_cone_point(std::mt19937_64& rng, const FiniteGroup& g, double radius) {
    std::uniform_real_distribution<double> u(-radius, radius);
    for (;;) {
        const Vec3 p{u(rng), u(rng), u(rng)};
        if (norm(p) < 0.05 || norm(p) > radius) continue;
        return fold_to_domain(p, g).first;
    }
}

}  // namespace

TEST_CASE("chebyshev centers match the published table") {
    for (const PublishedRow& row : kPublished) {
        const ChebyshevSolution sol = chebyshev_center(row.symbol);
        CAPTURE(row.symbol.n);
        REQUIRE(std::abs(sol.t - row.t) <= 5e-4);
        REQUIRE(std::abs(sol.s - row.s) <= 5e-4);
        REQUIRE(std::abs(sol.center.x - row.center.x) <= 5e-4);
        REQUIRE(std::abs(sol.center.y - row.center.y) <= 5e-4);
        REQUIRE(std::abs(sol.center.z - row.center.z) <= 5e-4);
        REQUIRE(std::abs(sol.radius - row.radius) <= 5e-5);
    }
}

TEST_CASE("chebyshev center is the circumcenter and smallest enclosing ball") {
    for (int n = 3; n <= 5; ++n) {
        const SphericalTriangle tri = fundamental_triangle({3, n});
        const ChebyshevSolution sol = chebyshev_center(tri, {3, n});
        const Vec3 x = tri.x.vec(), y = tri.y.vec(), z = tri.z.vec();

        // Equidistant from all three vertices.
        const double dx = distance(sol.center, x);
        REQUIRE(distance(sol.center, y) == Catch::Approx(dx).margin(1e-12));
        REQUIRE(distance(sol.center, z) == Catch::Approx(dx).margin(1e-12));
        REQUIRE(sol.radius == Catch::Approx(dx).margin(1e-12));

        // Independent solvers agree.
        const Ball meb = min_enclosing_ball(std::vector<Vec3>{x, y, z});
        const Ball circ = circumcenter_in_plane(x, y, z);
        REQUIRE(distance(sol.center, meb.center) <= 1e-9);
        REQUIRE(std::abs(sol.radius - meb.radius) <= 1e-9);
        REQUIRE(distance(sol.center, circ.center) <= 1e-9);

        // The center stays inside the chamber and inside the sphere.
        const FundamentalCone cone(build_generators({3, n}));
        REQUIRE(cone.contains(sol.center, 1e-12));
        REQUIRE(norm(sol.center) < 1.0);

        // It sits deeper than the edge chord midpoints.
        const double min_mid = std::min({norm(tri.m1), norm(tri.m2), norm(tri.m3)});
        REQUIRE(norm(sol.center) < min_mid);
    }
}

TEST_CASE("chebyshev bisector parametrization is consistent") {
    for (int n = 3; n <= 5; ++n) {
        const SphericalTriangle tri = fundamental_triangle({3, n});
        const ChebyshevSolution sol = chebyshev_center(tri, {3, n});
        const Vec3 x = tri.x.vec(), y = tri.y.vec(), z = tri.z.vec();
        const Vec3 u = x - y, v = x - z;

        REQUIRE(sol.coeff_u == Catch::Approx(-norm2(u) / dot(u, v)).margin(1e-12));
        REQUIRE(sol.coeff_v == Catch::Approx(-norm2(v) / dot(u, v)).margin(1e-12));

        // w1 runs along the perpendicular bisector of xy, w2 of xz.
        const Vec3 w1 = u + sol.coeff_u * v;
        const Vec3 w2 = v + sol.coeff_v * u;
        REQUIRE(std::abs(dot(w1, u)) <= 1e-9);
        REQUIRE(std::abs(dot(w2, v)) <= 1e-9);

        // Both parametrizations land on the center.
        REQUIRE(distance(0.5 * (x + z) + sol.t * w2, sol.center) <= 1e-9);
        REQUIRE(distance(0.5 * (x + y) + sol.s * w1, sol.center) <= 1e-9);
    }
}

TEST_CASE("chebyshev center needs a spherical triangle") {
    REQUIRE_THROWS_AS(chebyshev_center(CoxeterSymbol{2, 4}), std::invalid_argument);
}

TEST_CASE("exact hausdorff distance of published seed orbits") {
    // Octahedron at full size: six unit vertices of [3,4].
    {
        const FiniteGroup g = build_group({3, 4});
        const SphericalTriangle tri = fundamental_triangle({3, 4});
        const HausdorffReport rep = hausdorff_to_sphere_exact(g, tri, tri.y.vec());
        REQUIRE(rep.orbit_size == 6);
        REQUIRE(rep.orbit_to_sphere <= 1e-12);
        REQUIRE(std::abs(rep.total - 0.9194) <= 5e-4);
        REQUIRE(rep.total == Catch::Approx(rep.sphere_to_orbit));
    }
    // Icosahedron at its best scale.
    {
        const FiniteGroup g = build_group({3, 5});
        const SphericalTriangle tri = fundamental_triangle({3, 5});
        const HausdorffReport rep =
            hausdorff_to_sphere_exact(g, tri, 0.7947 * tri.y.vec());
        REQUIRE(rep.orbit_size == 12);
        REQUIRE(std::abs(rep.total - 0.6071) <= 5e-4);
        REQUIRE(std::abs(rep.total - 0.6070620) <= 1e-5);
    }
}

TEST_CASE("total distance is the larger of the two one-sided parts") {
    const FiniteGroup g = build_group({3, 5});
    const SphericalTriangle tri = fundamental_triangle({3, 5});
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const Vec3 p = random_cone_point(rng, g, 1.4);
        const HausdorffReport rep = hausdorff_to_sphere_exact(g, tri, p);
        REQUIRE(rep.total == std::max(rep.sphere_to_orbit, rep.orbit_to_sphere));
        REQUIRE(rep.orbit_to_sphere == Catch::Approx(std::abs(1.0 - norm(p))).margin(1e-12));
    }
}

TEST_CASE("exact evaluation rejects seeds outside the fundamental cone") {
    const FiniteGroup g = build_group({3, 4});
    const SphericalTriangle tri = fundamental_triangle({3, 4});
    const Vec3 centroid = (tri.x.vec() + tri.y.vec() + tri.z.vec()) / 3.0;
    REQUIRE_THROWS_WITH(hausdorff_to_sphere_exact(g, tri, -centroid),
                        Catch::Matchers::ContainsSubstring("fold_to_domain"));
}

TEST_CASE("patch supremum: stationary-point enumeration dominates dense grids") {
    for (int n = 3; n <= 5; ++n) {
        const FiniteGroup g = build_group({3, n});
        const SphericalTriangle tri = fundamental_triangle({3, n});
        const detail::PatchEvaluator patch(tri, FundamentalCone(g.generators));
        std::mt19937_64 rng(300 + n);
        for (int trial = 0; trial < 10; ++trial) {
            const Vec3 p = random_cone_point(rng, g, 1.3);
            const double analytic = patch.sup_distance(p);
            const double grid = detail::patch_grid_sup(p, tri, 300);
            REQUIRE(analytic >= grid - 1e-12);  // a grid never beats the true sup
            REQUIRE(analytic - grid <= 1e-5);   // and comes close at this density
        }
    }
}

TEST_CASE("chebyshev radius equals the patch supremum at the center") {
    for (int n = 3; n <= 5; ++n) {
        const FiniteGroup g = build_group({3, n});
        const SphericalTriangle tri = fundamental_triangle({3, n});
        const ChebyshevSolution sol = chebyshev_center(tri, {3, n});
        const detail::PatchEvaluator patch(tri, FundamentalCone(g.generators));
        REQUIRE(patch.sup_distance(sol.center) == Catch::Approx(sol.radius).margin(1e-12));
        REQUIRE(detail::patch_grid_sup(sol.center, tri, 100) <= sol.radius + 1e-9);
    }
}

TEST_CASE("sampled estimate matches the exact value") {
    for (int n = 3; n <= 5; ++n) {
        const FiniteGroup g = build_group({3, n});
        const SphericalTriangle tri = fundamental_triangle({3, n});
        std::mt19937_64 rng(1000 + n);
        for (int trial = 0; trial < 5; ++trial) {
            const Vec3 p = random_cone_point(rng, g, 1.4);
            const HausdorffReport exact = hausdorff_to_sphere_exact(g, tri, p);
            const HausdorffReport sampled =
                hausdorff_to_sphere_sampled(orbit(g, p).points, 200000);
            REQUIRE(std::abs(exact.total - sampled.total) <= 2e-3);
        }
    }
}

TEST_CASE("sampled method closed forms") {
    // Two antipodal points: the farthest sphere point sits on the equator,
    // a sqrt(2) chord away.
    const FiniteGroup sign_flips = build_group({2, 2});
    const Orbit poles = orbit(sign_flips, Vec3{0, 0, -1});
    REQUIRE(poles.points.size() == 2);
    const HausdorffReport two = hausdorff_to_sphere_sampled(poles.points, 200000);
    REQUIRE(two.orbit_to_sphere <= 1e-12);
    REQUIRE(std::abs(two.total - std::sqrt(2.0)) <= 1e-9);

    // The cube with vertices (+-s, +-s, +-s), s = 1/3: the face direction
    // (1,0,0) is farthest, at distance sqrt(2/3).
    const Orbit cube = orbit(sign_flips, Vec3{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
    REQUIRE(cube.points.size() == 8);
    const HausdorffReport eight = hausdorff_to_sphere_sampled(cube.points, 200000);
    REQUIRE(std::abs(eight.sphere_to_orbit - std::sqrt(2.0 / 3.0)) <= 1e-9);
    REQUIRE(eight.orbit_to_sphere == Catch::Approx(1.0 - 1.0 / std::sqrt(3.0)).margin(1e-12));

    REQUIRE_THROWS_AS(hausdorff_to_sphere_sampled(std::vector<Vec3>{}), std::invalid_argument);
    REQUIRE_THROWS_AS(hausdorff_to_sphere_sampled(poles.points, 10), std::invalid_argument);
}

TEST_CASE("sampled hausdorff of the [3,5] chebyshev orbit") {
    const FiniteGroup g = build_group({3, 5});
    const ChebyshevSolution sol = chebyshev_center(CoxeterSymbol{3, 5});
    const Orbit orb = orbit(g, sol.center);
    REQUIRE(orb.points.size() == 120);
    const HausdorffReport rep = hausdorff_to_sphere_sampled(orb.points, 200000);
    REQUIRE(std::abs(rep.total - 0.3208) <= 1e-3);
}

TEST_CASE("optimal scales recover the published values") {
    {
        const FiniteGroup g = build_group({3, 4});
        const SphericalTriangle tri = fundamental_triangle({3, 4});
        const auto [t_star, rep] = optimal_scale(g, tri, tri.x.vec());
        REQUIRE(std::abs(t_star - 0.5774) <= 5e-4);   // cube at 1/sqrt(3)
        REQUIRE(std::abs(rep.total - 0.8165) <= 5e-4);
        REQUIRE(rep.orbit_size == 8);
    }
    {
        const FiniteGroup g = build_group({3, 5});
        const SphericalTriangle tri = fundamental_triangle({3, 5});
        const auto [t_star, rep] = optimal_scale(g, tri, tri.y.vec());
        REQUIRE(std::abs(t_star - 0.7947) <= 5e-4);   // icosahedron
        REQUIRE(std::abs(rep.total - 0.6071) <= 5e-4);
        REQUIRE(rep.orbit_size == 12);
    }
    {
        const FiniteGroup g = build_group({3, 5});
        const SphericalTriangle tri = fundamental_triangle({3, 5});
        const auto [t_star, rep] = optimal_scale(g, tri, tri.m2);
        REQUIRE(std::abs(t_star - 0.9945) <= 5e-4);   // rhombicosidodecahedron
        REQUIRE(std::abs(rep.total - 0.3354) <= 5e-4);
        REQUIRE(rep.orbit_size == 60);
    }

    const FiniteGroup g = build_group({3, 3});
    const SphericalTriangle tri = fundamental_triangle({3, 3});
    REQUIRE_THROWS_AS(optimal_scale(g, tri, Vec3{0, 0, 0}), std::invalid_argument);
    REQUIRE_THROWS_AS(optimal_scale(g, tri, Vec3{-1, 1, 1}), std::invalid_argument);
}

TEST_CASE("group to sphere distances") {
    REQUIRE(std::abs(group_sphere_distance(CoxeterSymbol{3, 3}).total - 0.5907) <= 5e-5);
    REQUIRE(std::abs(group_sphere_distance(CoxeterSymbol{3, 4}).total - 0.4628) <= 5e-5);
    const HausdorffReport h3 = group_sphere_distance(CoxeterSymbol{3, 5});
    REQUIRE(std::abs(h3.total - 0.3208) <= 5e-5);
    REQUIRE(h3.orbit_size == 120);
    REQUIRE_THROWS_WITH(group_sphere_distance(CoxeterSymbol{2, 8}),
                        Catch::Matchers::ContainsSubstring("dihedral_bound"));
}

TEST_CASE("no cone seed beats the chebyshev orbit") {
    for (int n = 3; n <= 5; ++n) {
        const FiniteGroup g = build_group({3, n});
        const SphericalTriangle tri = fundamental_triangle({3, n});
        const ChebyshevSolution sol = chebyshev_center(tri, {3, n});
        std::mt19937_64 rng(77 + n);
        for (int trial = 0; trial < 10; ++trial) {
            const Vec3 p = random_cone_point(rng, g, 1.6);
            const HausdorffReport rep = hausdorff_to_sphere_exact(g, tri, p);
            REQUIRE(rep.total >= sol.radius - 1e-9);
        }
    }
}

TEST_CASE("dihedral orbits stay at least sqrt(2)/2 away") {
    REQUIRE_THROWS_AS(dihedral_bound(1), std::invalid_argument);
    const double floor = std::sqrt(2.0) / 2.0;
    for (int n = 2; n <= 8; ++n) {
        const double bound = dihedral_bound(n, 0.01);
        CAPTURE(n, bound);
        REQUIRE(bound >= floor - 1e-3);
        REQUIRE(bound < 1.0);
    }
    // A finer grid tightens toward the same floor.
    REQUIRE(dihedral_bound(2, 0.002) >= floor - 1e-3);
}

TEST_CASE("orbit scale invariance") {
    const FiniteGroup g = build_group({3, 5});
    const SphericalTriangle tri = fundamental_triangle({3, 5});
    const Vec3 direction = tri.m3;
    const std::size_t base = orbit(g, direction).points.size();
    for (double t : {0.4, 0.9945, 1.7}) {
        REQUIRE(orbit(g, t * direction).points.size() == base);
    }
}
