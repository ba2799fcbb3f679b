#pragma once

#include <cstdio>
#include <string>

#include "geom.hpp"

namespace kaleido {

// %g-style formatting with a significant-digit count; -0 is normalized so
// identical values always print identically.
inline std::string format_double(double v, int digits = 4) {
    if (v == 0.0) v = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

inline std::string format_vec(const Vec3& v, int digits = 4) {
    return "(" + format_double(v.x, digits) + ", " + format_double(v.y, digits) + ", " +
           format_double(v.z, digits) + ")";
}

}  // namespace kaleido
