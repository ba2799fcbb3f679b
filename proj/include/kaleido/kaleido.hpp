#pragma once

// Umbrella header: finite reflection groups [m,n] in O(3), their fundamental
// spherical triangles, Chebyshev centers, and the Hausdorff distance of
// finite orbits to the unit sphere.

#include "geom.hpp"
#include "coxeter.hpp"
#include "domain.hpp"
#include "approx.hpp"
#include "format.hpp"
#include "catalog.hpp"
#include "pointspec.hpp"
#include "pointset_io.hpp"
