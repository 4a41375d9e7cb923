#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Planar primitives and the predicates everything else is built on.
// Disks are open sets: membership means strict distance < radius.
// Sign predicates run a fast floating-point path guarded by a forward
// error bound and fall back to exact expansion arithmetic when the fast
// value is too close to zero to be trusted.

namespace diskcover {

class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(double s, const Point& p) { return {s * p.x, s * p.y}; }
    friend Point operator*(const Point& p, double s) { return {s * p.x, s * p.y}; }
    friend Point operator/(const Point& p, double s) { return {p.x / s, p.y / s}; }
};

inline bool lex_less(const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
}

inline double dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline double norm2(const Point& p) { return p.x * p.x + p.y * p.y; }
inline double norm(const Point& p) { return std::hypot(p.x, p.y); }
inline double dist(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

inline bool is_finite(const Point& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

struct Disk {
    Point center;
    double radius = 1.0;

    friend bool operator==(const Disk& a, const Disk& b) {
        return a.center == b.center && a.radius == b.radius;
    }
};

inline Disk unit_disk(const Point& c) { return Disk{c, 1.0}; }

struct PredicateConfig {
    double tolerance = 1e-9;     // near-degenerate metric comparisons (tangency, R_T = 1, ...)
    int refinement_digits = 18;  // decimal digits of the long-double refinement stage
};

// ---------------------------------------------------------------------------
// Exact expansion arithmetic (error-free transformations).
// An expansion is a sum of doubles stored by increasing magnitude; the sign
// of the represented value is the sign of its largest nonzero component.

namespace detail {

inline void two_sum(double a, double b, double& hi, double& lo) {
    hi = a + b;
    double bv = hi - a;
    double av = hi - bv;
    lo = (a - av) + (b - bv);
}

inline void two_diff(double a, double b, double& hi, double& lo) {
    hi = a - b;
    double bv = a - hi;
    double av = hi + bv;
    lo = (a - av) - (b - bv);
}

inline void two_prod(double a, double b, double& hi, double& lo) {
    hi = a * b;
    lo = std::fma(a, b, -hi);
}

using Expansion = std::vector<double>;

// e + b, preserving the nonoverlapping increasing-magnitude layout
inline void grow(Expansion& e, double b) {
    Expansion out;
    out.reserve(e.size() + 1);
    double q = b;
    for (double component : e) {
        double hi, lo;
        two_sum(q, component, hi, lo);
        if (lo != 0.0) out.push_back(lo);
        q = hi;
    }
    out.push_back(q);
    e.swap(out);
}

inline void add(Expansion& e, const Expansion& f) {
    for (double component : f) grow(e, component);
}

inline Expansion scale(const Expansion& e, double b) {
    Expansion out;
    for (double component : e) {
        double hi, lo;
        two_prod(component, b, hi, lo);
        if (lo != 0.0) grow(out, lo);
        grow(out, hi);
    }
    return out;
}

inline int sign_of(const Expansion& e) {
    for (auto it = e.rbegin(); it != e.rend(); ++it) {
        if (*it > 0.0) return 1;
        if (*it < 0.0) return -1;
    }
    return 0;
}

// exact sign of (px-cx)^2 + (py-cy)^2 - r^2
inline int side_of_disk_exact(double px, double py, double cx, double cy, double r) {
    double dx, dxe, dy, dye;
    two_diff(px, cx, dx, dxe);
    two_diff(py, cy, dy, dye);
    Expansion ex{dxe, dx};
    Expansion ey{dye, dy};
    Expansion acc = scale(ex, dxe);
    add(acc, scale(ex, dx));
    add(acc, scale(ey, dye));
    add(acc, scale(ey, dy));
    double rhi, rlo;
    two_prod(r, r, rhi, rlo);
    grow(acc, -rlo);
    grow(acc, -rhi);
    return sign_of(acc);
}

inline int orient2d_exact(const Point& a, const Point& b, const Point& c) {
    double acx, acxe, acy, acye, bcx, bcxe, bcy, bcye;
    two_diff(a.x, c.x, acx, acxe);
    two_diff(a.y, c.y, acy, acye);
    two_diff(b.x, c.x, bcx, bcxe);
    two_diff(b.y, c.y, bcy, bcye);
    Expansion eacx{acxe, acx}, eacy{acye, acy};
    Expansion acc = scale(eacx, bcye);
    add(acc, scale(eacx, bcy));
    Expansion neg = scale(eacy, bcxe);
    add(neg, scale(eacy, bcx));
    for (double& v : neg) v = -v;
    add(acc, neg);
    return sign_of(acc);
}

} // namespace detail

// ---------------------------------------------------------------------------
// Sign predicates

// +1 if p is strictly inside d, 0 on the boundary circle, -1 strictly outside.
inline int side_of_disk(const Point& p, const Disk& d) {
    double dx = p.x - d.center.x;
    double dy = p.y - d.center.y;
    double det = dx * dx + dy * dy - d.radius * d.radius;
    double mag = dx * dx + dy * dy + d.radius * d.radius;
    // forward error of det is below 8 ulp of mag
    double bound = mag * 1.8e-15;
    if (det > bound) return -1;
    if (det < -bound) return 1;
    return -detail::side_of_disk_exact(p.x, p.y, d.center.x, d.center.y, d.radius);
}

// open-disk membership (boundary does not count)
inline bool point_in_disk(const Point& p, const Disk& d) { return side_of_disk(p, d) > 0; }

// +1 counterclockwise, -1 clockwise, 0 collinear
inline int orient2d(const Point& a, const Point& b, const Point& c) {
    double det = (a.x - c.x) * (b.y - c.y) - (a.y - c.y) * (b.x - c.x);
    double mag = std::abs((a.x - c.x) * (b.y - c.y)) + std::abs((a.y - c.y) * (b.x - c.x));
    double bound = mag * 1.8e-15;
    if (det > bound) return 1;
    if (det < -bound) return -1;
    return detail::orient2d_exact(a, b, c);
}

// ---------------------------------------------------------------------------
// Constructions

// Boundary-circle intersections of two disks, sorted by (x, then y).
// Tangency (within cfg.tolerance of the metric degeneracy) yields one point.
inline std::vector<Point> circle_intersection(const Disk& a, const Disk& b,
                                              const PredicateConfig& cfg = {}) {
    if (a.center == b.center) throw error("degenerate: concentric");
    double d2 = norm2(b.center - a.center);
    double d = std::sqrt(d2);
    double sum = a.radius + b.radius;
    double dif = std::abs(a.radius - b.radius);
    double scale = std::max({d, a.radius, b.radius});
    double tol = cfg.tolerance * std::max(1.0, scale);
    if (d > sum + tol || d < dif - tol) return {};

    // foot of the radical line along the center line
    double t = (d2 + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);
    double h2 = a.radius * a.radius - t * t;
    Point u = (b.center - a.center) / d;
    Point foot = a.center + t * u;
    bool tangent = (std::abs(d - sum) <= tol) || (std::abs(d - dif) <= tol);
    if (tangent || h2 <= 0.0) {
        if (!tangent && h2 < -tol * scale) return {};
        return {foot};
    }
    double h = std::sqrt(h2);
    Point n{-u.y, u.x};
    Point p1 = foot + h * n;
    Point p2 = foot - h * n;
    std::vector<Point> out{p1, p2};
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

// Counterclockwise hull of extreme points only; collinear interior-of-edge
// points are dropped, a collinear input yields its two endpoints.
inline std::vector<Point> convex_hull(std::vector<Point> pts) {
    if (pts.empty()) throw error("convex_hull: empty input");
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;

    std::vector<Point> hull(2 * pts.size());
    std::size_t k = 0;
    for (const Point& p : pts) { // lower
        while (k >= 2 && orient2d(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    std::size_t lower = k + 1;
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) { // upper
        while (k >= lower && orient2d(hull[k - 2], hull[k - 1], *it) <= 0) --k;
        hull[k++] = *it;
    }
    hull.resize(k - 1);
    return hull;
}

// Orthogonal map plus translation: p -> M p + t with M a rotation or a
// rotation composed with a reflection. Unit disks map to unit disks.
struct Isometry {
    double m00 = 1, m01 = 0, m10 = 0, m11 = 1;
    Point t;

    Point apply(const Point& p) const {
        return {m00 * p.x + m01 * p.y + t.x, m10 * p.x + m11 * p.y + t.y};
    }
    Point invert(const Point& p) const {
        double dx = p.x - t.x, dy = p.y - t.y;
        return {m00 * dx + m10 * dy, m01 * dx + m11 * dy};
    }
    Disk apply(const Disk& d) const { return {apply(d.center), d.radius}; }
    Disk invert(const Disk& d) const { return {invert(d.center), d.radius}; }

    // maps a -> (-|b-a|/2, 0) and b -> (+|b-a|/2, 0)
    static Isometry align_segment_to_x(const Point& a, const Point& b) {
        Point mid = 0.5 * (a + b);
        double len = dist(a, b);
        Point u = (b - a) / len;
        Isometry iso;
        iso.m00 = u.x;
        iso.m01 = u.y;
        iso.m10 = -u.y;
        iso.m11 = u.x;
        iso.t = {-(iso.m00 * mid.x + iso.m01 * mid.y), -(iso.m10 * mid.x + iso.m11 * mid.y)};
        return iso;
    }

    // composes a y-flip after this map
    Isometry then_flip_y() const {
        Isometry iso = *this;
        iso.m10 = -iso.m10;
        iso.m11 = -iso.m11;
        iso.t.y = -iso.t.y;
        return iso;
    }
};

struct Circle {
    Point center;
    double radius = 0.0;
};

inline Circle circumcircle(const Point& p, const Point& q, const Point& r) {
    if (orient2d(p, q, r) == 0) throw error("degenerate: collinear");
    // perpendicular-bisector solve, translated to p for conditioning
    double bx = q.x - p.x, by = q.y - p.y;
    double cx = r.x - p.x, cy = r.y - p.y;
    double b2 = bx * bx + by * by;
    double c2 = cx * cx + cy * cy;
    double det = 2.0 * (bx * cy - by * cx);
    Point center{p.x + (cy * b2 - by * c2) / det, p.y + (bx * c2 - cx * b2) / det};
    double radius = (dist(center, p) + dist(center, q) + dist(center, r)) / 3.0;
    return {center, radius};
}

} // namespace diskcover
