#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <set>

#include "diskcover/geometry.hpp"

using namespace diskcover;

namespace {

const double kSqrt3 = std::sqrt(3.0);

bool approx(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// O(n^3) half-plane oracle: p is a hull vertex iff some directed edge from p
// keeps every other point strictly on one side
std::set<std::pair<double, double>> hull_vertices_brute(const std::vector<Point>& pts) {
    std::set<std::pair<double, double>> verts;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (i == j) continue;
            bool all_left = true;
            for (std::size_t k = 0; k < pts.size(); ++k) {
                if (k == i || k == j) continue;
                if (orient2d(pts[i], pts[j], pts[k]) <= 0) {
                    all_left = false;
                    break;
                }
            }
            if (all_left) {
                verts.insert({pts[i].x, pts[i].y});
                verts.insert({pts[j].x, pts[j].y});
            }
        }
    return verts;
}

} // namespace

TEST_CASE("circle_intersection basic cases") {
    SECTION("tangent unit disks meet in one point") {
        auto pts = circle_intersection(unit_disk({0, 0}), unit_disk({kSqrt3, 1}));
        REQUIRE(pts.size() == 1);
        CHECK(approx(pts[0].x, kSqrt3 / 2, 1e-9));
        CHECK(approx(pts[0].y, 0.5, 1e-9));
    }
    SECTION("lens vertex of two radius-1.08 disks") {
        double rho = 1.08;
        auto pts = circle_intersection(Disk{{0, 0}, rho}, Disk{{-kSqrt3, 1}, rho});
        REQUIRE(pts.size() == 2);
        Point upper = pts[0].y > pts[1].y ? pts[0] : pts[1];
        double s = std::sqrt(rho * rho - 1.0);
        CHECK(approx(upper.x, 0.5 * (-kSqrt3 + s), 1e-9));
        CHECK(approx(upper.y, 0.5 * (kSqrt3 * s + 1.0), 1e-9));
        CHECK(approx(upper.x, -0.66206, 1e-5));
        CHECK(approx(upper.y, 0.85327, 1e-5));
    }
    SECTION("disjoint disks") {
        CHECK(circle_intersection(unit_disk({0, 0}), unit_disk({5, 0})).empty());
    }
    SECTION("concentric disks are an error") {
        CHECK_THROWS_AS(circle_intersection(Disk{{1, 1}, 1.0}, Disk{{1, 1}, 2.0}), error);
    }
    SECTION("results are sorted lexicographically") {
        auto pts = circle_intersection(unit_disk({0, 0}), unit_disk({1, 0}));
        REQUIRE(pts.size() == 2);
        CHECK(lex_less(pts[0], pts[1]));
    }
}

TEST_CASE("circle_intersection points lie on both circles") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coord(-3.0, 3.0), rad(0.3, 2.0);
    int checked = 0;
    for (int it = 0; it < 500; ++it) {
        Disk a{{coord(rng), coord(rng)}, rad(rng)};
        Disk b{{coord(rng), coord(rng)}, rad(rng)};
        if (a.center == b.center) continue;
        auto pts = circle_intersection(a, b);
        for (const Point& p : pts) {
            double ra = dist(p, a.center), rb = dist(p, b.center);
            CHECK(approx(ra, a.radius, 1e-10 * std::max(1.0, a.radius)));
            CHECK(approx(rb, b.radius, 1e-10 * std::max(1.0, b.radius)));
            ++checked;
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("point_in_disk is a strict open-disk predicate") {
    Disk d = unit_disk({0, 0});
    CHECK(point_in_disk({0, 0}, d));
    CHECK_FALSE(point_in_disk({1, 0}, d));
    CHECK_FALSE(point_in_disk({0.6, 0.8}, d)); // exactly on the circle
    CHECK(point_in_disk({0.999999999, 0}, d));
    CHECK_FALSE(point_in_disk({1.000000001, 0}, d));
    CHECK(point_in_disk({std::nextafter(1.0, 0.0), 0}, d));
}

TEST_CASE("point_in_disk shrink consistency outside the tolerance annulus") {
    PredicateConfig cfg;
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    Disk d = unit_disk({0.25, -0.5});
    Disk shrunk{d.center, d.radius - 2 * cfg.tolerance};
    for (int it = 0; it < 20000; ++it) {
        Point p{coord(rng), coord(rng)};
        double r = dist(p, d.center);
        if (std::abs(r - d.radius) <= 2 * cfg.tolerance) continue; // annulus
        CHECK(point_in_disk(p, d) == point_in_disk(p, shrunk));
    }
}

TEST_CASE("convex_hull") {
    SECTION("square plus center") {
        auto hull = convex_hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}});
        REQUIRE(hull.size() == 4);
    }
    SECTION("collinear points give the two endpoints") {
        auto hull = convex_hull({{0, 0}, {1, 1}, {2, 2}});
        REQUIRE(hull.size() == 2);
        CHECK(hull[0] == Point{0, 0});
        CHECK(hull[1] == Point{2, 2});
    }
    SECTION("single point") {
        auto hull = convex_hull({{3, 4}});
        REQUIRE(hull.size() == 1);
    }
    SECTION("midpoint of an edge is not a hull vertex") {
        auto hull = convex_hull({{0, 0}, {2, 0}, {1, 0}, {1, 2}});
        REQUIRE(hull.size() == 3);
    }
    SECTION("counterclockwise orientation") {
        auto hull = convex_hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
        REQUIRE(hull.size() == 4);
        for (std::size_t i = 0; i < hull.size(); ++i)
            CHECK(orient2d(hull[i], hull[(i + 1) % 4], hull[(i + 2) % 4]) > 0);
    }
    SECTION("random points match the half-plane oracle") {
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int it = 0; it < 50; ++it) {
            std::vector<Point> pts;
            while (pts.size() < 10) {
                Point p{u(rng), u(rng)};
                if (norm2(p) <= 1.0) pts.push_back(p);
            }
            auto hull = convex_hull(pts);
            std::set<std::pair<double, double>> got;
            for (const Point& p : hull) got.insert({p.x, p.y});
            CHECK(got == hull_vertices_brute(pts));
        }
    }
    SECTION("idempotent") {
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        std::vector<Point> pts;
        for (int i = 0; i < 30; ++i) pts.push_back({u(rng), u(rng)});
        auto h1 = convex_hull(pts);
        auto h2 = convex_hull(h1);
        CHECK(h1.size() == h2.size());
    }
}

TEST_CASE("circumcircle") {
    SECTION("equilateral of side 2") {
        Circle c = circumcircle({0, 0}, {2, 0}, {1, kSqrt3});
        CHECK(approx(c.radius, 2.0 / kSqrt3, 1e-12));
    }
    SECTION("right triangle legs 3 and 4") {
        Circle c = circumcircle({0, 0}, {3, 0}, {0, 4});
        CHECK(approx(c.radius, 2.5, 1e-12));
        CHECK(approx(c.center.x, 1.5, 1e-12));
        CHECK(approx(c.center.y, 2.0, 1e-12));
    }
    SECTION("independent linear-system solve agrees") {
        Point p{-2, 0}, q{2, 0}, r{0, 3};
        Circle c = circumcircle(p, q, r);
        // |c-p|^2 = |c-q|^2 and |c-p|^2 = |c-r|^2 as an explicit 2x2 system
        double a11 = 2 * (q.x - p.x), a12 = 2 * (q.y - p.y);
        double a21 = 2 * (r.x - p.x), a22 = 2 * (r.y - p.y);
        double b1 = norm2(q) - norm2(p), b2 = norm2(r) - norm2(p);
        double det = a11 * a22 - a12 * a21;
        Point expect{(b1 * a22 - b2 * a12) / det, (a11 * b2 - a21 * b1) / det};
        CHECK(approx(c.center.x, expect.x, 1e-12));
        CHECK(approx(c.center.y, expect.y, 1e-12));
        CHECK(approx(dist(c.center, p), dist(c.center, q), 1e-12));
        CHECK(approx(dist(c.center, p), dist(c.center, r), 1e-12));
    }
    SECTION("collinear input is an error") {
        CHECK_THROWS_AS(circumcircle({0, 0}, {1, 1}, {2, 2}), error);
    }
    SECTION("equidistance on random triangles") {
        std::mt19937_64 rng(13);
        std::uniform_real_distribution<double> u(-5.0, 5.0);
        for (int it = 0; it < 200; ++it) {
            Point p{u(rng), u(rng)}, q{u(rng), u(rng)}, r{u(rng), u(rng)};
            if (orient2d(p, q, r) == 0) continue;
            Circle c = circumcircle(p, q, r);
            double scale = std::max(1.0, c.radius);
            CHECK(approx(dist(c.center, p), c.radius, 1e-10 * scale));
            CHECK(approx(dist(c.center, q), c.radius, 1e-10 * scale));
            CHECK(approx(dist(c.center, r), c.radius, 1e-10 * scale));
        }
    }
}

TEST_CASE("orient2d exact fallback is consistent") {
    // collinear triples with coordinates that stress double rounding
    Point a{1e-17, 1e-17}, b{2e-17, 2e-17}, c{3e-17, 3e-17};
    CHECK(orient2d(a, b, c) == 0);
    Point d{1.0, 1.0}, e{2.0, 2.0}, f{3.0, 3.0 + 1e-13};
    CHECK(orient2d(d, e, f) > 0);
    CHECK(orient2d(d, e, Point{3.0, 3.0 - 1e-13}) < 0);
    CHECK(orient2d(d, e, Point{3.0, 3.0}) == 0);
}
