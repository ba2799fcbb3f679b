#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "catalog.hpp"
#include "pointset_io.hpp"
#include "pointspec.hpp"

namespace kaleido {
namespace detail {

inline int cli_groups(const std::string& symbol_text, int digits, std::ostream& out) {
    if (!symbol_text.empty()) {
        const CoxeterSymbol s = parse_symbol(symbol_text);
        const FiniteGroup g = build_group(s);
        const FiniteGroup rot = rotation_subgroup(g);
        const bool ok = verify_presentation(g);
        out << "group " << to_string(s) << ": order " << g.size() << ", " << rot.size()
            << " rotations\n";
        out << "  mirror normals:\n";
        out << "    n1 = " << format_vec(g.generators.n1.vec(), digits) << '\n';
        out << "    n2 = " << format_vec(g.generators.n2.vec(), digits) << '\n';
        out << "    n3 = " << format_vec(g.generators.n3.vec(), digits) << '\n';
        out << "  presentation orders (" << s.m << ", " << s.n << ", 2): "
            << (ok ? "verified" : "FAILED") << '\n';
        return ok ? 0 : 2;
    }
    out << "symbol  order  rotations  family\n";
    const char* const family[] = {"tetrahedral", "octahedral", "icosahedral"};
    for (int n = 3; n <= 5; ++n) {
        const FiniteGroup g = build_group({3, n});
        const FiniteGroup rot = rotation_subgroup(g);
        char line[96];
        std::snprintf(line, sizeof line, "%-6s %6zu %10zu  %s\n",
                      to_string(CoxeterSymbol{3, n}).c_str(), g.size(), rot.size(), family[n - 3]);
        out << line;
    }
    {
        char line[96];
        std::snprintf(line, sizeof line, "%-6s %6s %10s  %s\n", "[2,n]", "4*n", "2*n",
                      "prismatic (any n >= 2)");
        out << line;
    }
    return 0;
}

inline int cli_triangle(const std::string& symbol_text, int digits, std::ostream& out) {
    const CoxeterSymbol s = parse_symbol(symbol_text);
    const SphericalTriangle tri = fundamental_triangle(s);
    out << "fundamental triangle for " << to_string(s) << '\n';
    out << "  x = " << format_vec(tri.x.vec(), digits) << '\n';
    out << "  y = " << format_vec(tri.y.vec(), digits) << '\n';
    out << "  z = " << format_vec(tri.z.vec(), digits) << '\n';
    out << "  m1 = " << format_vec(tri.m1, digits)
        << "  |m1| = " << format_double(norm(tri.m1), digits) << '\n';
    out << "  m2 = " << format_vec(tri.m2, digits)
        << "  |m2| = " << format_double(norm(tri.m2), digits) << '\n';
    out << "  m3 = " << format_vec(tri.m3, digits)
        << "  |m3| = " << format_double(norm(tri.m3), digits) << '\n';
    const Vec3 cen = triangle_point(tri, TrianglePoint::centroid);
    out << "  centroid = " << format_vec(cen, digits)
        << "  |centroid| = " << format_double(norm(cen), digits) << '\n';
    return 0;
}

inline int cli_center(const std::string& symbol_text, int digits, std::ostream& out) {
    const CoxeterSymbol s = parse_symbol(symbol_text);
    const FiniteGroup g = build_group(s);
    const SphericalTriangle tri = fundamental_triangle(s);
    const ChebyshevSolution sol = chebyshev_center(tri, s);
    const Orbit orb = orbit(g, sol.center);
    out << "chebyshev center for " << to_string(s) << '\n';
    out << "  t = " << format_double(sol.t, digits) << '\n';
    out << "  s = " << format_double(sol.s, digits) << '\n';
    out << "  center = " << format_vec(sol.center, digits) << '\n';
    out << "  |center| = " << format_double(norm(sol.center), digits) << '\n';
    out << "  radius = " << format_double(sol.radius, digits) << '\n';
    out << "  orbit size = " << orb.points.size() << '\n';
    return 0;
}

inline int cli_orbit(const std::string& symbol_text, const std::string& point_text,
                     const std::string& format_name, bool header, int digits, std::ostream& out,
                     std::ostream& err) {
    const CoxeterSymbol s = parse_symbol(symbol_text);
    const FiniteGroup g = build_group(s);
    const PointSpec spec = parse_point_spec(point_text);
    const Vec3 seed = resolve_point_spec(spec, g);
    const Orbit orb = orbit(g, seed);
    err << "orbit of " << point_text << " under " << to_string(s) << ": " << orb.points.size()
        << " points\n";
    write_points(out, orb.points, parse_point_format(format_name), header, digits);
    return 0;
}

inline int cli_distance(const std::string& symbol_text, const std::string& point_text,
                        const std::string& method_name, std::size_t samples, int digits,
                        std::ostream& out) {
    const CoxeterSymbol s = parse_symbol(symbol_text);
    const FiniteGroup g = build_group(s);
    const PointSpec spec = parse_point_spec(point_text);
    const Vec3 seed = resolve_point_spec(spec, g);
    HausdorffReport rep;
    if (method_name == "exact") {
        if (s.m != 3)
            throw std::invalid_argument(
                "the exact method needs a [3,n] symbol; use --method sampled for [2,n]");
        rep = hausdorff_to_sphere_exact(g, fundamental_triangle(s), seed);
    } else if (method_name == "sampled") {
        const Orbit orb = orbit(g, seed);
        rep = hausdorff_to_sphere_sampled(orb.points, samples);
        rep.seed = seed;
    } else {
        throw std::invalid_argument("unknown method '" + method_name +
                                    "': expected exact or sampled");
    }
    out << "hausdorff distance for " << to_string(s) << ", seed " << point_text << '\n';
    out << "  seed = " << format_vec(rep.seed, digits) << '\n';
    out << "  orbit size = " << rep.orbit_size << '\n';
    out << "  sphere->orbit = " << format_double(rep.sphere_to_orbit, digits) << '\n';
    out << "  orbit->sphere = " << format_double(rep.orbit_to_sphere, digits) << '\n';
    out << "  hausdorff = " << format_double(rep.total, digits) << '\n';
    out << "  method = " << to_string(rep.method);
    if (rep.method == HausdorffMethod::sampled) out << " (" << samples << " sphere nodes)";
    out << '\n';
    return 0;
}

inline int cli_scale(const std::string& symbol_text, const std::string& point_text, int digits,
                     std::ostream& out) {
    const CoxeterSymbol s = parse_symbol(symbol_text);
    if (s.m != 3)
        throw std::invalid_argument(
            "scale needs a [3,n] symbol; [2,n] orbits are covered by the dihedral bound "
            "in 'theorem'");
    const FiniteGroup g = build_group(s);
    const SphericalTriangle tri = fundamental_triangle(s);
    const PointSpec spec = parse_point_spec(point_text);
    const Vec3 direction = normalize(resolve_point_spec(spec, g, tri));
    const auto [t_star, rep] = optimal_scale(g, tri, direction);
    out << "optimal scale for " << to_string(s) << ", direction " << point_text << '\n';
    out << "  t* = " << format_double(t_star, digits) << '\n';
    out << "  seed at t* = " << format_vec(t_star * direction, digits) << '\n';
    out << "  orbit size = " << rep.orbit_size << '\n';
    out << "  sphere->orbit = " << format_double(rep.sphere_to_orbit, digits) << '\n';
    out << "  orbit->sphere = " << format_double(rep.orbit_to_sphere, digits) << '\n';
    out << "  hausdorff = " << format_double(rep.total, digits) << '\n';
    return 0;
}

inline int cli_catalog(const std::string& format_name, int digits, std::ostream& out) {
    const CatalogReport report = reproduce_catalog();
    if (format_name == "kv")
        out << catalog_kv(report);
    else if (format_name == "table")
        out << catalog_table(report, digits);
    else
        throw std::invalid_argument("unknown format '" + format_name + "': expected table or kv");
    return report.pass ? 0 : 2;
}

inline int cli_theorem(double grid, int max_n, int digits, std::ostream& out) {
    const CatalogReport report = theorem_check(grid, max_n);
    const TheoremSummary& sum = *report.theorem;
    double best_dihedral = std::numeric_limits<double>::infinity();
    for (const DihedralBoundRow& row : sum.dihedral) best_dihedral = std::min(best_dihedral, row.bound);
    out << "best kaleidoscopic approximations of the unit sphere\n";
    out << "  [3,3] chebyshev orbit: hausdorff " << format_double(sum.a3, digits) << '\n';
    out << "  [3,4] chebyshev orbit: hausdorff " << format_double(sum.b3, digits) << '\n';
    out << "  [3,5] chebyshev orbit: hausdorff " << format_double(sum.h3, digits) << " ("
        << sum.h3_orbit_size << " points)\n";
    out << "  [2,n] for n = 2.." << max_n << ": best hausdorff "
        << format_double(best_dihedral, digits) << ", floor sqrt(2)/2 = "
        << format_double(std::sqrt(2.0) / 2.0, digits) << '\n';
    out << "  minimum: " << format_double(sum.minimum, digits)
        << ", attained by the [3,5] chebyshev orbit\n";
    out << (sum.pass ? "PASS\n" : "FAIL\n");
    return sum.pass ? 0 : 2;
}

inline int cli_verify(const std::string& symbol_text, int trials, std::uint64_t seed,
                      std::ostream& out) {
    const CoxeterSymbol s = parse_symbol(symbol_text);
    const FiniteGroup g = build_group(s);
    bool all = true;
    const bool pres = verify_presentation(g);
    all = all && pres;
    out << "verify " << to_string(s) << " (order " << g.size() << ", " << trials
        << " trials, seed " << seed << ")\n";
    out << "  presentation orders: " << (pres ? "ok" : "FAIL") << '\n';
    const PropertyCheckReport dir = check_dirichlet(g, trials, seed);
    all = all && dir.pass();
    out << "  dirichlet inequality: " << (dir.pass() ? "ok" : "FAIL") << " (" << dir.comparisons
        << " comparisons, worst margin " << format_double(dir.worst_margin, 3) << ")\n";
    const PropertyCheckReport same = check_same_side(g, trials, seed);
    all = all && same.pass();
    out << "  same-side products: " << (same.pass() ? "ok" : "FAIL") << " (" << same.comparisons
        << " comparisons, worst margin " << format_double(same.worst_margin, 3) << ")\n";
    out << (all ? "PASS\n" : "FAIL\n");
    return all ? 0 : 2;
}

}  // namespace detail

// Runs the command-line interface against explicit streams, so tests can
// drive it in-process.  Returns the process exit code: 0 on success, 1 on
// usage or input errors, 2 when a verification subcommand fails.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite kaleidoscope groups in O(3) and their sphere-approximating orbits",
                 "kaleido"};
    app.require_subcommand(1);

    std::string symbol_text;
    std::string point_text;
    std::string orbit_format = "table";
    std::string export_format = "csv";
    std::string catalog_format = "table";
    std::string method_name = "exact";
    bool header = false;
    int digits = 4;
    std::size_t samples = 200000;
    int trials = 100;
    std::uint64_t seed = 0;
    double grid = 1e-3;
    int max_n = 12;

    const char* const point_help =
        "x|y|z|m1|m2|m3|centroid|chebyshev, optionally scaled like 0.79*y, or a literal (a, b, c)";

    auto* groups_cmd = app.add_subcommand("groups", "group orders for the admissible symbols");
    groups_cmd->add_option("symbol", symbol_text, "optional [m,n] symbol for a detailed view");
    groups_cmd->add_option("--digits", digits, "significant digits")->capture_default_str();

    auto* triangle_cmd = app.add_subcommand("triangle", "fundamental spherical triangle data");
    triangle_cmd->add_option("symbol", symbol_text, "[m,n] symbol, e.g. [3,5]")->required();
    triangle_cmd->add_option("--digits", digits, "significant digits")->capture_default_str();

    auto* center_cmd =
        app.add_subcommand("center", "chebyshev center of the fundamental triangle");
    center_cmd->add_option("symbol", symbol_text, "[m,n] symbol, e.g. [3,5]")->required();
    center_cmd->add_option("--digits", digits, "significant digits")->capture_default_str();

    auto* orbit_cmd = app.add_subcommand("orbit", "orbit of a seed point");
    orbit_cmd->add_option("symbol", symbol_text, "[m,n] symbol")->required();
    orbit_cmd->add_option("point", point_text, point_help)->required();
    orbit_cmd->add_option("--format", orbit_format, "table|csv|obj|json")->capture_default_str();
    orbit_cmd->add_flag("--header", header, "prepend a csv header line");
    orbit_cmd->add_option("--digits", digits, "significant digits (table format)")
        ->capture_default_str();

    auto* export_cmd = app.add_subcommand("export", "orbit points for file output");
    export_cmd->add_option("symbol", symbol_text, "[m,n] symbol")->required();
    export_cmd->add_option("point", point_text, point_help)->required();
    export_cmd->add_option("--format", export_format, "csv|obj|json|table")->capture_default_str();
    export_cmd->add_flag("--header", header, "prepend a csv header line");
    export_cmd->add_option("--digits", digits, "significant digits (table format)")
        ->capture_default_str();

    auto* distance_cmd =
        app.add_subcommand("distance", "hausdorff distance from an orbit to the unit sphere");
    distance_cmd->add_option("symbol", symbol_text, "[m,n] symbol")->required();
    distance_cmd->add_option("point", point_text, point_help)->required();
    distance_cmd->add_option("--method", method_name, "exact|sampled")->capture_default_str();
    distance_cmd->add_option("--samples", samples, "sphere nodes for the sampled method")
        ->capture_default_str();
    distance_cmd->add_option("--digits", digits, "significant digits")->capture_default_str();

    auto* scale_cmd = app.add_subcommand("scale", "best radial scale for a seed direction");
    scale_cmd->add_option("symbol", symbol_text, "[3,n] symbol")->required();
    scale_cmd->add_option("point", point_text, point_help)->required();
    scale_cmd->add_option("--digits", digits, "significant digits")->capture_default_str();

    auto* catalog_cmd =
        app.add_subcommand("catalog", "recompute the uniform-solid distance table");
    catalog_cmd->add_option("--format", catalog_format, "table|kv")->capture_default_str();
    catalog_cmd->add_option("--digits", digits, "significant digits (table format)")
        ->capture_default_str();

    auto* theorem_cmd =
        app.add_subcommand("theorem", "check the minimal-approximation theorem");
    theorem_cmd->add_option("--grid", grid, "dihedral seed grid resolution")
        ->capture_default_str();
    theorem_cmd->add_option("--max-n", max_n, "largest dihedral index to scan")
        ->capture_default_str();
    theorem_cmd->add_option("--digits", digits, "significant digits")->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "structural self-checks for one group");
    verify_cmd->add_option("symbol", symbol_text, "[m,n] symbol")->required();
    verify_cmd->add_option("--trials", trials, "random trials per property")
        ->capture_default_str();
    verify_cmd->add_option("--seed", seed, "base seed for the trial generator")
        ->capture_default_str();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (groups_cmd->parsed()) return detail::cli_groups(symbol_text, digits, out);
        if (triangle_cmd->parsed()) return detail::cli_triangle(symbol_text, digits, out);
        if (center_cmd->parsed()) return detail::cli_center(symbol_text, digits, out);
        if (orbit_cmd->parsed())
            return detail::cli_orbit(symbol_text, point_text, orbit_format, header, digits, out,
                                     err);
        if (export_cmd->parsed())
            return detail::cli_orbit(symbol_text, point_text, export_format, header, digits, out,
                                     err);
        if (distance_cmd->parsed())
            return detail::cli_distance(symbol_text, point_text, method_name, samples, digits,
                                        out);
        if (scale_cmd->parsed()) return detail::cli_scale(symbol_text, point_text, digits, out);
        if (catalog_cmd->parsed()) return detail::cli_catalog(catalog_format, digits, out);
        if (theorem_cmd->parsed()) return detail::cli_theorem(grid, max_n, digits, out);
        if (verify_cmd->parsed()) return detail::cli_verify(symbol_text, trials, seed, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << "error: no subcommand\n";
    return 1;
}

inline int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
    return run_cli(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace kaleido
