#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <kaleido/catalog.hpp>

using namespace kaleido;

namespace {

const CatalogRow& row_named(const CatalogReport& report, const std::string& name) {
    for (const CatalogRow& row : report.rows)
        if (row.spec.name == name) return row;
    FAIL("no catalog row named " + name);
    throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("triangle point lookup") {
    const SphericalTriangle tri = fundamental_triangle({3, 4});
    REQUIRE(distance(triangle_point(tri, TrianglePoint::vx), tri.x.vec()) <= 1e-15);
    REQUIRE(distance(triangle_point(tri, TrianglePoint::m2), tri.m2) <= 1e-15);
    REQUIRE(distance(triangle_point(tri, TrianglePoint::centroid),
                     (tri.x.vec() + tri.y.vec() + tri.z.vec()) / 3.0) <= 1e-15);
    REQUIRE(to_string(TrianglePoint::vy) == "y");
    REQUIRE(to_string(TrianglePoint::m3) == "m3");
    REQUIRE(to_string(TrianglePoint::centroid) == "centroid");
}

TEST_CASE("catalog structure covers the eighteen uniform rows") {
    const std::vector<SolidSpec> specs = build_catalog();
    REQUIRE(specs.size() == 18);

    std::map<std::string, int> names;
    for (const SolidSpec& spec : specs) names[spec.name] += 1;
    REQUIRE(names.size() == 18);

    // Spot checks of the table layout.
    REQUIRE(specs.front().name == "Tetrahedron");
    REQUIRE(specs.front().generators.size() == 2);  // self-dual: x and y both work
    const SolidSpec* cubocta = nullptr;
    for (const SolidSpec& s : specs)
        if (s.name == "Cuboctahedron") cubocta = &s;
    REQUIRE(cubocta != nullptr);
    REQUIRE(cubocta->symbol == CoxeterSymbol{3, 3});  // cuboctahedron lives in [3,3] as m2
    REQUIRE(cubocta->generators.front().point == TrianglePoint::m2);
    REQUIRE(cubocta->closed_form_distance.has_value());
    REQUIRE(*cubocta->closed_form_distance == Catch::Approx(std::sqrt(0.5)).margin(1e-15));
}

TEST_CASE("catalog reproduces every published distance") {
    const CatalogReport report = reproduce_catalog();
    REQUIRE(report.rows.size() == 18);
    REQUIRE(report.pass);
    for (const CatalogRow& row : report.rows) {
        CAPTURE(row.spec.name, row.computed, row.delta, row.tolerance);
        REQUIRE(row.pass);
        REQUIRE(row.delta <= row.tolerance);
        // Published values are four-digit; grid-searched rows get more slack.
        REQUIRE(row.tolerance == (row.spec.grid_searched ? 5e-3 : 5e-4));
    }

    // Vertex counts identify each solid.
    const std::map<std::string, std::size_t> expected_counts{
        {"Tetrahedron", 4},
        {"Cube", 8},
        {"Octahedron", 6},
        {"Dodecahedron", 20},
        {"Icosahedron", 12},
        {"Truncated Tetrahedron", 12},
        {"Cuboctahedron", 12},
        {"Truncated Cube", 24},
        {"Truncated Octahedron", 24},
        {"Rhombicuboctahedron", 24},
        {"Truncated Cuboctahedron", 48},
        {"Snub Cube", 48},
        {"Icosidodecahedron", 30},
        {"Truncated Dodecahedron", 60},
        {"Truncated Icosahedron", 60},
        {"Rhombicosidodecahedron", 60},
        {"Truncated Icosidodecahedron", 120},
        {"Snub Dodecahedron", 120},
    };
    for (const auto& [name, count] : expected_counts) {
        REQUIRE(row_named(report, name).vertex_count == count);
    }
}

TEST_CASE("dual solids share their distance") {
    const CatalogReport report = reproduce_catalog();
    REQUIRE(std::abs(row_named(report, "Cube").computed -
                     row_named(report, "Octahedron").computed) <= 1e-9);
    REQUIRE(std::abs(row_named(report, "Dodecahedron").computed -
                     row_named(report, "Icosahedron").computed) <= 1e-9);
    // The tetrahedron is self-dual: both its generators give the same value.
    const CatalogRow& tetra = row_named(report, "Tetrahedron");
    REQUIRE(std::abs(tetra.computed - tetra.alt_computed) <= 1e-9);
}

TEST_CASE("closed forms hold to machine precision at the exact scales") {
    const CatalogReport report = reproduce_catalog();
    int closed = 0;
    for (const CatalogRow& row : report.rows)
        if (row.closed_form_delta) {
            CAPTURE(row.spec.name);
            REQUIRE(*row.closed_form_delta <= 1e-9);
            ++closed;
        }
    REQUIRE(closed == 3);  // cube, octahedron, cuboctahedron
}

TEST_CASE("published scales are optimal where the table says so") {
    const CatalogReport report = reproduce_catalog();
    for (const CatalogRow& row : report.rows) {
        if (row.spec.as_printed) continue;  // snub rows repeat their neighbours
        // The two m3-at-unit-scale rows are published as conventions, not optima.
        if (row.spec.name == "Truncated Octahedron") continue;
        if (row.spec.name == "Truncated Icosahedron") continue;
        CAPTURE(row.spec.name, row.rederived_scale);
        REQUIRE(row.scale_delta <= 5e-3);
    }
    // Rederivation moves the unit-scale rows noticeably (to about 0.816 and
    // 0.934); their distances improve accordingly, so the published scale is
    // a choice of presentation.
    REQUIRE(row_named(report, "Truncated Octahedron").scale_delta > 0.05);
    REQUIRE(row_named(report, "Truncated Icosahedron").scale_delta > 0.05);
}

TEST_CASE("the chebyshev orbit beats every catalog row") {
    const CatalogReport report = reproduce_catalog();
    REQUIRE(std::abs(report.theorem_value - 0.3208) <= 1e-4);
    double best_row = 1e9;
    std::string best_name;
    for (const CatalogRow& row : report.rows)
        if (row.computed < best_row) {
            best_row = row.computed;
            best_name = row.spec.name;
        }
    REQUIRE(best_name == "Rhombicosidodecahedron");
    REQUIRE(report.theorem_value < best_row);
}

TEST_CASE("theorem check passes on a coarse dihedral grid") {
    const CatalogReport report = theorem_check(0.01, 6);
    REQUIRE(report.theorem.has_value());
    const TheoremSummary& sum = *report.theorem;
    REQUIRE(sum.pass);
    REQUIRE(std::abs(sum.h3 - 0.3208) <= 1e-4);
    REQUIRE(sum.h3_orbit_size == 120);
    REQUIRE(sum.a3 > sum.b3);
    REQUIRE(sum.b3 > sum.h3);
    REQUIRE(sum.minimum == sum.h3);
    REQUIRE(sum.dihedral.size() == 5);  // n = 2..6
    for (const DihedralBoundRow& row : sum.dihedral) {
        CAPTURE(row.n, row.bound);
        REQUIRE(row.bound >= std::sqrt(2.0) / 2.0 - 1e-3);
        REQUIRE(row.bound > sum.h3);
    }
}

TEST_CASE("report serializations are stable and well formed") {
    const CatalogReport a = reproduce_catalog();
    const CatalogReport b = reproduce_catalog();
    REQUIRE(catalog_kv(a) == catalog_kv(b));

    const std::string table = catalog_table(a);
    REQUIRE(table.find("Tetrahedron") != std::string::npos);
    REQUIRE(table.find(" ok") != std::string::npos);
    REQUIRE(table.find("FAIL") == std::string::npos);

    // Key/value lines split on whitespace into key=value tokens.
    const std::string kv = catalog_kv(a);
    std::istringstream lines(kv);
    std::string line;
    int rows = 0;
    while (std::getline(lines, line)) {
        std::istringstream fields(line);
        std::string field;
        while (fields >> field) {
            REQUIRE(field.find('=') != std::string::npos);
        }
        ++rows;
    }
    REQUIRE(rows == 19);  // 18 solids plus the theorem line
}
