#pragma once

#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "format.hpp"

namespace kaleido {

enum class PointFormat { csv, obj, json, table };

inline PointFormat parse_point_format(const std::string& name) {
    if (name == "csv") return PointFormat::csv;
    if (name == "obj") return PointFormat::obj;
    if (name == "json") return PointFormat::json;
    if (name == "table") return PointFormat::table;
    throw std::invalid_argument("unknown format '" + name + "': expected csv, obj, json or table");
}

// Writes a point list: csv rows at 17 significant digits (round-trip safe),
// obj vertex lines, a json array of [x,y,z] triples, or an aligned table.
inline void write_points(std::ostream& os, std::span<const Vec3> points, PointFormat format,
                         bool header = false, int digits = 4) {
    if (points.empty()) throw std::invalid_argument("write_points: empty point list");
    switch (format) {
        case PointFormat::csv:
            if (header) os << "x,y,z\n";
            for (const auto& p : points)
                os << format_double(p.x, 17) << ',' << format_double(p.y, 17) << ','
                   << format_double(p.z, 17) << '\n';
            break;
        case PointFormat::obj:
            for (const auto& p : points)
                os << "v " << format_double(p.x, 17) << ' ' << format_double(p.y, 17) << ' '
                   << format_double(p.z, 17) << '\n';
            break;
        case PointFormat::json: {
            os << "[";
            for (std::size_t i = 0; i < points.size(); ++i) {
                if (i) os << ",";
                os << "[" << format_double(points[i].x, 17) << "," << format_double(points[i].y, 17)
                   << "," << format_double(points[i].z, 17) << "]";
            }
            os << "]\n";
            break;
        }
        case PointFormat::table:
            for (const auto& p : points) os << format_vec(p, digits) << '\n';
            break;
    }
    if (!os) throw std::runtime_error("write_points: output stream failure");
}

// Reads back a csv point list written by write_points.
inline std::vector<Vec3> parse_csv_points(const std::string& text) {
    std::vector<Vec3> points;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line == "x,y,z") continue;
        Vec3 p;
        char c1 = 0, c2 = 0;
        std::istringstream ls(line);
        if (!(ls >> p.x >> c1 >> p.y >> c2 >> p.z) || c1 != ',' || c2 != ',')
            throw std::invalid_argument("parse_csv_points: malformed line '" + line + "'");
        points.push_back(p);
    }
    return points;
}

}  // namespace kaleido
