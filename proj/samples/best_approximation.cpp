// Compares the three polyhedral kaleidoscope groups: for each, the orbit of
// the fundamental triangle's Chebyshev center is the group's best homogeneous
// approximation of the unit sphere.  The [3,5] orbit of 120 points wins.

#include <iostream>

#include <kaleido/kaleido.hpp>

int main() {
    using namespace kaleido;

    for (int n = 3; n <= 5; ++n) {
        const CoxeterSymbol symbol{3, n};
        const ChebyshevSolution sol = chebyshev_center(symbol);
        const HausdorffReport rep = group_sphere_distance(symbol);
        std::cout << to_string(symbol) << ": center " << format_vec(sol.center) << ", orbit of "
                  << rep.orbit_size << " points, hausdorff distance "
                  << format_double(rep.total) << '\n';
    }
    return 0;
}
