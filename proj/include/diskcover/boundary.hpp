#pragma once

#include <array>
#include <optional>
#include <vector>

#include "diskcover/exact_cover.hpp"
#include "diskcover/geometry.hpp"

// Boundary-point machinery: triangular-hull classification, the bulldozer
// sweep that finds a fourth generalized boundary point, per-point singleton
// certificate disks, and the sequential extension of a cover of the interior
// points to an exact cover of all of X.
//
// A generalized boundary point b of X is one admitting a unit disk D with
// D cap X = {b}. Every certificate disk returned here is verified against all
// of X with the exact membership predicate before it is handed out.

namespace diskcover {

enum class HullCase {
    LongSide,         // some hull side >= 2
    Medium,           // all sides < 2, acute, circumradius > 1
    Unit,             // all sides < 2, acute, circumradius = 1 (within tolerance)
    Small,            // all sides < 2, acute, circumradius < 1
    RightObtuseShort, // all sides < 2, right or obtuse angle
    NotTriangle
};

struct HullClassification {
    HullCase kind = HullCase::NotTriangle;
    double circumradius = 0.0;
    std::array<Point, 3> vertices{};    // CCW hull vertices when a triangle
    std::array<double, 3> sides{};      // |v0v1|, |v1v2|, |v2v0|
};

inline HullClassification classify_triangle_hull(const std::vector<Point>& X,
                                                 const PredicateConfig& cfg = {}) {
    HullClassification cls;
    std::vector<Point> hull = convex_hull(X);
    if (hull.size() != 3) return cls;
    cls.vertices = {hull[0], hull[1], hull[2]};
    cls.sides = {dist(hull[0], hull[1]), dist(hull[1], hull[2]), dist(hull[2], hull[0])};
    cls.circumradius = circumcircle(hull[0], hull[1], hull[2]).radius;
    double longest = std::max({cls.sides[0], cls.sides[1], cls.sides[2]});
    if (longest >= 2.0 - cfg.tolerance) {
        cls.kind = HullCase::LongSide;
        return cls;
    }
    // right/obtuse iff the longest side's square beats the other two combined
    double a2 = longest * longest;
    double rest = cls.sides[0] * cls.sides[0] + cls.sides[1] * cls.sides[1] +
                  cls.sides[2] * cls.sides[2] - a2;
    if (a2 >= rest - cfg.tolerance) {
        cls.kind = HullCase::RightObtuseShort;
        return cls;
    }
    if (std::abs(cls.circumradius - 1.0) <= cfg.tolerance)
        cls.kind = HullCase::Unit;
    else if (cls.circumradius > 1.0)
        cls.kind = HullCase::Medium;
    else
        cls.kind = HullCase::Small;
    return cls;
}

// ---------------------------------------------------------------------------
// Bulldozer sweep (normalized frame: longest side on the x-axis, v1=(-v,0),
// v2=(v,0) with v >= 1, third vertex above)

struct BulldozerResult {
    double t_max = 0.0;
    Point witness;
};

namespace detail {

// entry time of a point into the rising stadium of half-width v-1
inline double stadium_entry_time(const Point& p, double v) {
    double excess = std::abs(p.x) - (v - 1.0);
    if (excess <= 0.0) return p.y - 1.0;
    if (excess >= 1.0) return std::numeric_limits<double>::infinity();
    return p.y - std::sqrt(1.0 - excess * excess);
}

// entry time into a single unit disk rising along the y-axis
inline double disk_sweep_entry_time(const Point& p) {
    if (std::abs(p.x) >= 1.0) return std::numeric_limits<double>::infinity();
    return p.y - std::sqrt(1.0 - p.x * p.x);
}

inline bool same_point(const Point& a, const Point& b) { return a == b; }

} // namespace detail

inline BulldozerResult bulldozer_tmax(const std::vector<Point>& X) {
    std::vector<Point> hull = convex_hull(X);
    if (hull.size() != 3) throw error("bulldozer: hull is not a triangle");
    double v = 0.0;
    for (const Point& h : hull) v = std::max(v, std::abs(h.x));
    if (v < 1.0) throw error("bulldozer: longest side shorter than 2");

    BulldozerResult best{std::numeric_limits<double>::infinity(), {}};
    for (const Point& p : X) {
        bool is_vertex = false;
        for (const Point& h : hull)
            if (detail::same_point(p, h)) is_vertex = true;
        if (is_vertex) continue;
        double t = detail::stadium_entry_time(p, v);
        if (t < best.t_max || (t == best.t_max && lex_less(p, best.witness))) {
            best.t_max = t;
            best.witness = p;
        }
    }
    if (!std::isfinite(best.t_max)) throw error("no interior points");
    return best;
}

// ---------------------------------------------------------------------------
// Singleton certificate disks

namespace detail {

inline bool is_singleton(const Disk& d, const std::vector<Point>& X, const Point& only) {
    bool saw = false;
    for (const Point& x : X) {
        bool inside = point_in_disk(x, d);
        if (same_point(x, only)) {
            if (!inside) return false;
            saw = true;
        } else if (inside) {
            return false;
        }
    }
    return saw;
}

// Searches for a unit disk containing X[target] and no other point of X.
// Candidate centers walk inward from tangency along a deterministic list of
// directions: supplied hints first, then escape directions away from nearby
// points, then a uniform fan. Every candidate is verified exactly.
inline std::optional<Disk> find_singleton_disk(const std::vector<Point>& X, const Point& b,
                                               const std::vector<Point>& direction_hints = {}) {
    std::vector<Point> dirs = direction_hints;
    std::vector<const Point*> near;
    for (const Point& x : X)
        if (!same_point(x, b) && dist(x, b) < 2.5) near.push_back(&x);
    for (const Point* x : near) {
        double d = dist(b, *x);
        Point away = (b - *x) / d;
        for (double phi : {0.0, 0.15, -0.15, 0.45, -0.45, 0.9, -0.9}) {
            double c = std::cos(phi), s = std::sin(phi);
            dirs.push_back({c * away.x - s * away.y, s * away.x + c * away.y});
        }
    }
    for (int k = 0; k < 48; ++k) {
        double a = 2.0 * M_PI * k / 48.0;
        dirs.push_back({std::cos(a), std::sin(a)});
    }
    std::vector<double> radii;
    for (int k = 1; k <= 24; ++k) radii.push_back(1.0 - std::pow(0.5, k));
    for (double r : {0.75, 0.5, 0.25, 0.1, 0.02, 0.002}) radii.push_back(r);
    for (const Point& dir : dirs) {
        double n = norm(dir);
        if (n < 1e-12) continue;
        Point u = dir / n;
        for (double r : radii) {
            Disk d{b + r * u, 1.0};
            if (is_singleton(d, X, b)) return d;
        }
    }
    return std::nullopt;
}

// outward direction in the normal cone of a hull vertex
inline Point hull_vertex_outward(const std::vector<Point>& hull, std::size_t i) {
    std::size_t n = hull.size();
    if (n == 1) return {1.0, 0.0};
    if (n == 2) {
        Point other = hull[1 - i];
        return (hull[i] - other) / dist(hull[i], other);
    }
    const Point& prev = hull[(i + n - 1) % n];
    const Point& cur = hull[i];
    const Point& next = hull[(i + 1) % n];
    Point e1 = (cur - prev) / dist(cur, prev);
    Point e2 = (next - cur) / dist(next, cur);
    Point n1{e1.y, -e1.x}; // right-hand normals of a CCW hull point outward
    Point n2{e2.y, -e2.x};
    Point s = n1 + n2;
    double ns = norm(s);
    if (ns < 1e-12) return n1;
    return s / ns;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Generalized boundary points

struct GbpResult {
    std::vector<Point> points;
    std::vector<Disk> certificates; // certificates[i] isolates points[i] within X
};

// Unit disks through the two vertices of each triangle side, pushed towards
// the interior from the same side as the circumcircle-through-orthocenter
// disk (equivalently, away from the opposite vertex for an acute triangle).
// Order: (v0,v1), (v0,v2), (v1,v2).
inline std::array<Disk, 3> bd_unit_disks(const std::array<Point, 3>& tri) {
    std::array<Disk, 3> out;
    const std::array<std::array<int, 3>, 3> sides{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
    for (std::size_t s = 0; s < 3; ++s) {
        const Point& a = tri[static_cast<std::size_t>(sides[s][0])];
        const Point& b = tri[static_cast<std::size_t>(sides[s][1])];
        const Point& other = tri[static_cast<std::size_t>(sides[s][2])];
        double len = dist(a, b);
        if (len >= 2.0) throw error("no unit disk through chord");
        Point mid = 0.5 * (a + b);
        Point u = (b - a) / len;
        Point n{-u.y, u.x};
        double h = std::sqrt(1.0 - 0.25 * len * len);
        // same side as the reflected circumcenter: opposite the third vertex
        double side = dot(other - mid, n) > 0.0 ? -1.0 : 1.0;
        out[s] = Disk{mid + (side * h) * n, 1.0};
    }
    return out;
}

// hull vertices with their singleton certificates (hull must be from X, CCW)
inline GbpResult hull_vertex_gbps(const std::vector<Point>& X, const std::vector<Point>& hull) {
    GbpResult res;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        Point dir = detail::hull_vertex_outward(hull, i);
        auto d = detail::find_singleton_disk(X, hull[i], {dir});
        if (!d) throw error("no certificate for hull vertex");
        res.points.push_back(hull[i]);
        res.certificates.push_back(*d);
    }
    return res;
}

inline GbpResult generalized_boundary_points(const std::vector<Point>& X,
                                             const PredicateConfig& cfg = {}) {
    if (X.size() < 2) throw error("generalized_boundary_points: too few points");
    std::vector<Point> hull = convex_hull(X);
    if (hull.size() < 3) throw error("generalized_boundary_points: collinear input");

    GbpResult res = hull_vertex_gbps(X, hull);
    if (hull.size() >= 4) return res;

    HullClassification cls = classify_triangle_hull(X, cfg);
    if (cls.kind != HullCase::LongSide && cls.kind != HullCase::Medium) return res;

    // pick the sweep chord: the longest side for a long triangle, else the
    // first BD disk whose interior meets a non-vertex point
    int ia = 0, ib = 1;
    bool stadium = cls.kind == HullCase::LongSide;
    if (stadium) {
        double best = -1.0;
        const std::array<std::array<int, 2>, 3> idx{{{0, 1}, {1, 2}, {2, 0}}};
        for (std::size_t s = 0; s < 3; ++s) {
            if (cls.sides[s] > best) {
                best = cls.sides[s];
                ia = idx[s][0];
                ib = idx[s][1];
            }
        }
    } else {
        auto bds = bd_unit_disks(cls.vertices);
        const std::array<std::array<int, 2>, 3> idx{{{0, 1}, {0, 2}, {1, 2}}};
        int chosen = -1;
        for (std::size_t s = 0; s < 3 && chosen < 0; ++s) {
            for (const Point& p : X) {
                bool vertex = false;
                for (const Point& h : hull)
                    if (p == h) vertex = true;
                if (!vertex && point_in_disk(p, bds[s])) {
                    chosen = static_cast<int>(s);
                    break;
                }
            }
        }
        if (chosen < 0) throw error("no bulldozer disk contains a non-vertex point");
        ia = idx[static_cast<std::size_t>(chosen)][0];
        ib = idx[static_cast<std::size_t>(chosen)][1];
    }

    Point va = cls.vertices[static_cast<std::size_t>(ia)];
    Point vb = cls.vertices[static_cast<std::size_t>(ib)];
    Isometry frame = Isometry::align_segment_to_x(va, vb);
    // third vertex above the axis
    Point apex;
    for (const Point& h : hull)
        if (h != va && h != vb) apex = h;
    if (frame.apply(apex).y < 0) frame = frame.then_flip_y();

    double v = 0.5 * dist(va, vb);
    struct Candidate {
        double t;
        Point local;
        Point original;
    };
    std::vector<Candidate> cands;
    for (const Point& p : X) {
        bool vertex = false;
        for (const Point& h : hull)
            if (p == h) vertex = true;
        if (vertex) continue;
        Point q = frame.apply(p);
        double t = stadium ? detail::stadium_entry_time(q, v) : detail::disk_sweep_entry_time(q);
        if (std::isfinite(t)) cands.push_back({t, q, p});
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        return a.t < b.t || (a.t == b.t && lex_less(a.local, b.local));
    });
    if (cands.empty()) throw error("no interior points");

    for (const Candidate& c : cands) {
        // the sweeping disk that first touches this point, nudged upward
        double cx = stadium ? std::clamp(c.local.x, -(v - 1.0), v - 1.0) : 0.0;
        std::vector<Point> hints;
        for (double epsilon = 0.25; epsilon > 1e-10; epsilon *= 0.25) {
            Point center = frame.invert(Point{cx, c.t + epsilon});
            Disk d{center, 1.0};
            if (detail::is_singleton(d, X, c.original)) {
                res.points.push_back(c.original);
                res.certificates.push_back(d);
                return res;
            }
        }
        Point rise = frame.invert(Point{cx, c.t + 1.0}) - c.original;
        auto d = detail::find_singleton_disk(X, c.original, {rise});
        if (d) {
            res.points.push_back(c.original);
            res.certificates.push_back(*d);
            return res;
        }
    }
    throw error("no certifiable fourth boundary point");
}

// ---------------------------------------------------------------------------
// Covers for small triangular hulls

inline CoverCertificate cover_small_triangle(const std::vector<Point>& X,
                                             const HullClassification& cls) {
    CoverCertificate cert;
    switch (cls.kind) {
    case HullCase::Small: {
        Circle c = circumcircle(cls.vertices[0], cls.vertices[1], cls.vertices[2]);
        cert.disks = {unit_disk(c.center)};
        cert.assignment.assign(X.size(), 0);
        break;
    }
    case HullCase::RightObtuseShort: {
        // circumcenter sits at the midpoint of the longest side
        const std::array<std::array<int, 2>, 3> idx{{{0, 1}, {1, 2}, {2, 0}}};
        std::size_t s = 0;
        for (std::size_t i = 1; i < 3; ++i)
            if (cls.sides[i] > cls.sides[s]) s = i;
        Point mid = 0.5 * (cls.vertices[static_cast<std::size_t>(idx[s][0])] +
                           cls.vertices[static_cast<std::size_t>(idx[s][1])]);
        cert.disks = {unit_disk(mid)};
        cert.assignment.assign(X.size(), 0);
        break;
    }
    case HullCase::Unit: {
        Circle c = circumcircle(cls.vertices[0], cls.vertices[1], cls.vertices[2]);
        Disk main = unit_disk(c.center);
        cert.disks = {main};
        cert.assignment.assign(X.size(), -1);
        for (std::size_t i = 0; i < X.size(); ++i) {
            if (point_in_disk(X[i], main)) {
                cert.assignment[i] = 0;
                continue;
            }
            // points on (or marginally outside) the circumcircle: a singleton
            // disk each, as in the extension argument
            auto d = detail::find_singleton_disk(X, X[i]);
            if (!d) throw error("unit-case vertex disk not found");
            cert.assignment[i] = static_cast<int>(cert.disks.size());
            cert.disks.push_back(*d);
        }
        break;
    }
    default:
        throw error("case mismatch");
    }
    if (!verify_certificate(X, cert).ok) throw error("small-triangle cover failed verification");
    return cert;
}

// ---------------------------------------------------------------------------
// Sequential extension of a cover of the non-boundary points

// `partial` must cover X minus the gbp set exactly once per point and may
// cover each gbp at most once. Gbps already covered once are skipped; the
// rest get their certificate disk (re-searched if it no longer isolates).
inline CoverCertificate extend_disjoint_cover(const std::vector<Point>& X, const GbpResult& gbps,
                                              std::vector<Disk> partial) {
    auto is_gbp = [&](const Point& p) {
        for (const Point& g : gbps.points)
            if (p == g) return true;
        return false;
    };
    for (const Point& x : X) {
        int covered = 0;
        for (const Disk& d : partial)
            if (point_in_disk(x, d)) ++covered;
        if (is_gbp(x)) {
            if (covered >= 2) throw error("extension blocked");
        } else if (covered != 1) {
            throw error("partial cover is not exact on the non-boundary points");
        }
    }

    std::vector<Disk> disks = partial;
    for (std::size_t g = 0; g < gbps.points.size(); ++g) {
        const Point& b = gbps.points[g];
        int covered = 0;
        for (const Disk& d : disks)
            if (point_in_disk(b, d)) ++covered;
        if (covered == 1) continue;
        if (covered >= 2) throw error("extension blocked");
        Disk cand = gbps.certificates[g];
        if (!detail::is_singleton(cand, X, b)) {
            auto re = detail::find_singleton_disk(X, b);
            if (!re) throw error("extension certificate lost");
            cand = *re;
        }
        disks.push_back(cand);
    }

    CoverCertificate cert;
    cert.disks = disks;
    cert.assignment.assign(X.size(), -1);
    for (std::size_t i = 0; i < X.size(); ++i)
        for (std::size_t d = 0; d < disks.size(); ++d)
            if (point_in_disk(X[i], disks[d])) cert.assignment[i] = static_cast<int>(d);
    if (!verify_certificate(X, cert).ok) throw error("extended cover failed verification");
    return cert;
}

} // namespace diskcover
