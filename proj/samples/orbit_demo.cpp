// Builds the icosahedral kaleidoscope group, reflects one seed point through
// every element, and prints the resulting orbit as OBJ vertices.

#include <iostream>

#include <kaleido/kaleido.hpp>

int main() {
    using namespace kaleido;

    const CoxeterSymbol symbol{3, 5};
    const FiniteGroup group = build_group(symbol);
    std::cerr << "group " << to_string(symbol) << " has " << group.size() << " elements\n";

    // The triangle vertex y generates the 12 icosahedron vertices.
    const SphericalTriangle tri = fundamental_triangle(symbol);
    const Orbit orb = orbit(group, tri.y.vec());
    std::cerr << "orbit of y has " << orb.points.size() << " points\n";

    write_points(std::cout, orb.points, PointFormat::obj);
    return 0;
}
