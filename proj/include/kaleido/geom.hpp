#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace kaleido {

// Tolerances shared across the library.  Generator entries are algebraic
// numbers evaluated in double precision, so unit/orthogonality drift sits
// near 1e-16 while distinct group elements differ by O(0.1); the dedup
// tolerance lives comfortably between the two.
inline constexpr double kUnitTol = 1e-12;  // unit-norm checks
inline constexpr double kOrthTol = 1e-9;   // orthogonality / identity checks
inline constexpr double kGeoTol = 1e-9;    // geometric comparisons
inline constexpr double kDedupTol = 1e-8;  // matrix and point dedup

struct Vec3 {
    double x{0.0}, y{0.0}, z{0.0};
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
inline Vec3 operator*(const Vec3& a, double s) { return s * a; }
inline Vec3 operator/(const Vec3& a, double s) { return {a.x / s, a.y / s, a.z / s}; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm2(const Vec3& a) { return dot(a, a); }
inline double norm(const Vec3& a) { return std::sqrt(norm2(a)); }
inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

inline Vec3 normalize(const Vec3& v) {
    const double n = norm(v);
    if (n <= 1e-300) throw std::invalid_argument("normalize: zero-length vector");
    return v / n;
}

// Unit vector: construction rejects anything whose norm strays from 1.
class UnitVec {
  public:
    explicit UnitVec(const Vec3& v) : v_(v) {
        if (std::abs(norm(v) - 1.0) > kUnitTol)
            throw std::invalid_argument("UnitVec: norm differs from 1 by more than 1e-12");
    }
    static UnitVec normalized(const Vec3& v) { return UnitVec(normalize(v)); }
    const Vec3& vec() const { return v_; }

  private:
    Vec3 v_;
};

struct Mat3 {
    // row-major
    std::array<std::array<double, 3>, 3> a{};

    static Mat3 identity() {
        Mat3 m;
        m.a = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
        return m;
    }

    Vec3 apply(const Vec3& p) const {
        return {a[0][0] * p.x + a[0][1] * p.y + a[0][2] * p.z,
                a[1][0] * p.x + a[1][1] * p.y + a[1][2] * p.z,
                a[2][0] * p.x + a[2][1] * p.y + a[2][2] * p.z};
    }

    Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                r.a[i][j] = a[i][0] * o.a[0][j] + a[i][1] * o.a[1][j] + a[i][2] * o.a[2][j];
        return r;
    }

    Mat3 transposed() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.a[i][j] = a[j][i];
        return r;
    }

    double det() const {
        return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
               a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
               a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    }
};

inline double max_abs_diff(const Mat3& a, const Mat3& b) {
    double m = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m = std::max(m, std::abs(a.a[i][j] - b.a[i][j]));
    return m;
}

inline bool is_orthogonal(const Mat3& m, double tol = kOrthTol) {
    return max_abs_diff(m.transposed() * m, Mat3::identity()) <= tol;
}

// One Gram-Schmidt pass over the columns; keeps repeated products from
// drifting away from O(3).
inline Mat3 orthonormalized(const Mat3& m) {
    Vec3 c0{m.a[0][0], m.a[1][0], m.a[2][0]};
    Vec3 c1{m.a[0][1], m.a[1][1], m.a[2][1]};
    Vec3 c2{m.a[0][2], m.a[1][2], m.a[2][2]};
    c0 = normalize(c0);
    c1 = normalize(c1 - dot(c1, c0) * c0);
    c2 = normalize(c2 - dot(c2, c0) * c0 - dot(c2, c1) * c1);
    Mat3 r;
    r.a = {{{c0.x, c1.x, c2.x}, {c0.y, c1.y, c2.y}, {c0.z, c1.z, c2.z}}};
    return r;
}

// Element of O(3).  Construction validates orthogonality and a clean
// determinant sign.
class OrthogonalMap {
  public:
    explicit OrthogonalMap(const Mat3& m) : m_(m) {
        if (!is_orthogonal(m_))
            throw std::invalid_argument("OrthogonalMap: matrix is not orthogonal within 1e-9");
        const double d = m_.det();
        if (std::abs(std::abs(d) - 1.0) > kOrthTol)
            throw std::invalid_argument("OrthogonalMap: determinant is not +-1");
    }

    static OrthogonalMap identity() { return OrthogonalMap(Mat3::identity()); }

    Vec3 operator()(const Vec3& p) const { return m_.apply(p); }
    const Mat3& matrix() const { return m_; }
    double det() const { return m_.det(); }
    double trace() const { return m_.a[0][0] + m_.a[1][1] + m_.a[2][2]; }
    OrthogonalMap inverse() const { return OrthogonalMap(m_.transposed()); }

  private:
    Mat3 m_;
};

inline bool approx_equal(const OrthogonalMap& a, const OrthogonalMap& b, double tol = kDedupTol) {
    return max_abs_diff(a.matrix(), b.matrix()) <= tol;
}

inline bool is_identity(const OrthogonalMap& a, double tol = kOrthTol) {
    return max_abs_diff(a.matrix(), Mat3::identity()) <= tol;
}

// Householder reflection through the plane with unit normal n: I - 2 n n^T.
inline OrthogonalMap reflect_normal(const UnitVec& n) {
    const Vec3& v = n.vec();
    Mat3 m = Mat3::identity();
    const double c[3] = {v.x, v.y, v.z};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.a[i][j] -= 2.0 * c[i] * c[j];
    return OrthogonalMap(m);
}

// Matrix product re-orthonormalized, so long composition chains stay in O(3).
inline OrthogonalMap compose(const OrthogonalMap& a, const OrthogonalMap& b) {
    return OrthogonalMap(orthonormalized(a.matrix() * b.matrix()));
}

struct Ball {
    Vec3 center;
    double radius{0.0};

    bool contains(const Vec3& p, double tol = kGeoTol) const {
        return distance(center, p) <= radius + tol;
    }
};

namespace detail {

inline Ball ball_of_two(const Vec3& a, const Vec3& b) {
    return {0.5 * (a + b), 0.5 * distance(a, b)};
}

// Center of the sphere through three points that lies in their plane.
// Returns false if the points are (nearly) collinear.
inline bool circumsphere3(const Vec3& a, const Vec3& b, const Vec3& c, Ball& out) {
    const Vec3 u = b - a, v = c - a;
    const Vec3 w = cross(u, v);
    const double w2 = norm2(w);
    const double scale2 = std::max({norm2(u), norm2(v), 1e-30});
    if (w2 <= 1e-20 * scale2 * scale2) return false;
    const Vec3 ctr = a + cross(norm2(u) * v - norm2(v) * u, w) / (2.0 * w2);
    out = {ctr, std::max({distance(ctr, a), distance(ctr, b), distance(ctr, c)})};
    return true;
}

inline bool circumsphere4(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d, Ball& out) {
    // 2 (p_i - a) . x = |p_i|^2 - |a|^2, solved by Cramer's rule.
    const Vec3 r0 = 2.0 * (b - a), r1 = 2.0 * (c - a), r2 = 2.0 * (d - a);
    const double y0 = norm2(b) - norm2(a);
    const double y1 = norm2(c) - norm2(a);
    const double y2 = norm2(d) - norm2(a);
    const double det = dot(r0, cross(r1, r2));
    const double scale = std::max({norm2(r0), norm2(r1), norm2(r2), 1e-30});
    if (std::abs(det) <= 1e-12 * scale * std::sqrt(scale)) return false;
    const Vec3 ctr = (y0 * cross(r1, r2) + y1 * cross(r2, r0) + y2 * cross(r0, r1)) / det;
    out = {ctr, std::max({distance(ctr, a), distance(ctr, b), distance(ctr, c), distance(ctr, d)})};
    return true;
}

// Smallest ball with the current support set on its boundary.
inline Ball ball_of_support(const std::array<Vec3, 4>& s, int n) {
    switch (n) {
        case 0:
            return {{0, 0, 0}, -1.0};  // contains nothing
        case 1:
            return {s[0], 0.0};
        case 2:
            return ball_of_two(s[0], s[1]);
        case 3: {
            // Minimal ball through three points: a two-point ball when one
            // point falls inside it, the planar circumcircle otherwise.
            for (int i = 0; i < 3; ++i) {
                Ball b = ball_of_two(s[(i + 1) % 3], s[(i + 2) % 3]);
                if (b.contains(s[i], kGeoTol)) return b;
            }
            Ball b;
            if (circumsphere3(s[0], s[1], s[2], b)) return b;
            // collinear support: the widest pair wins
            Ball best = ball_of_two(s[0], s[1]);
            for (int i = 0; i < 3; ++i) {
                Ball cand = ball_of_two(s[i], s[(i + 1) % 3]);
                if (cand.radius > best.radius) best = cand;
            }
            return best;
        }
        default: {
            Ball b;
            if (circumsphere4(s[0], s[1], s[2], s[3], b)) return b;
            // near-coplanar support: fall back to the best three-point ball
            Ball best{{0, 0, 0}, -1.0};
            for (int drop = 0; drop < 4; ++drop) {
                std::array<Vec3, 4> t{};
                int k = 0;
                for (int i = 0; i < 4; ++i)
                    if (i != drop) t[k++] = s[i];
                Ball cand = ball_of_support(t, 3);
                bool ok = true;
                for (int i = 0; i < 4; ++i) ok = ok && cand.contains(s[i], 1e-7);
                if (ok && (best.radius < 0 || cand.radius < best.radius)) best = cand;
            }
            if (best.radius >= 0) return best;
            return ball_of_support(s, 3);
        }
    }
}

// Welzl's algorithm with move-to-front reordering.
inline Ball welzl(std::vector<Vec3>& pts, std::size_t n, std::array<Vec3, 4>& sup, int nsup) {
    Ball b = ball_of_support(sup, nsup);
    if (nsup == 4) return b;
    for (std::size_t i = 0; i < n; ++i) {
        if (b.contains(pts[i], 1e-12)) continue;
        sup[static_cast<std::size_t>(nsup)] = pts[i];
        b = welzl(pts, i, sup, nsup + 1);
        const Vec3 moved = pts[i];
        for (std::size_t j = i; j > 0; --j) pts[j] = pts[j - 1];
        pts[0] = moved;
    }
    return b;
}

}  // namespace detail

// Smallest enclosing ball (Chebyshev center and radius) of a finite set.
inline Ball min_enclosing_ball(std::span<const Vec3> points) {
    if (points.empty()) throw std::invalid_argument("min_enclosing_ball: empty point set");
    std::vector<Vec3> pts(points.begin(), points.end());
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    std::shuffle(pts.begin(), pts.end(), rng);
    std::array<Vec3, 4> sup{};
    return detail::welzl(pts, pts.size(), sup, 0);
}

// Smallest ball whose center lies in the plane of a triangle: circumcenter
// for an acute triangle, midpoint of the longest side otherwise.
inline Ball circumcenter_in_plane(const Vec3& a, const Vec3& b, const Vec3& c) {
    const double area2 = norm(cross(b - a, c - a));  // twice the area
    if (area2 <= 2.0 * kGeoTol)
        throw std::invalid_argument("circumcenter_in_plane: degenerate (collinear) triangle");

    const std::array<std::array<Vec3, 2>, 3> sides = {{{b, c}, {a, c}, {a, b}}};
    const std::array<Vec3, 3> opposite = {a, b, c};
    int longest = 0;
    double len = -1.0;
    for (int i = 0; i < 3; ++i) {
        const double d = distance(sides[static_cast<std::size_t>(i)][0], sides[static_cast<std::size_t>(i)][1]);
        if (d > len) {
            len = d;
            longest = i;
        }
    }
    Ball mid = detail::ball_of_two(sides[static_cast<std::size_t>(longest)][0],
                                   sides[static_cast<std::size_t>(longest)][1]);
    if (mid.contains(opposite[static_cast<std::size_t>(longest)], kGeoTol)) return mid;

    Ball out;
    if (!detail::circumsphere3(a, b, c, out))
        throw std::invalid_argument("circumcenter_in_plane: degenerate triangle");
    return out;
}

}  // namespace kaleido
