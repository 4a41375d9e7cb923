#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "diskcover/boundary.hpp"
#include "diskcover/exact_cover.hpp"
#include "diskcover/geometry.hpp"

// The parametric hexagonal family: disks of radius rho in [1, 2/sqrt(3)]
// centered on A2 = Z(0,2) + Z(sqrt(3),1). Closed-form overlap/gap areas give
// the translation-counting bounds f(rho,k) and f_r(rho); a verified
// low-discrepancy translation search places every input point into an allowed
// coverage region, and the redundant-disk filter drops one lattice disk when
// the small-angle hull vertex sits in a diagonal lens. cover_up_to_17 glues
// these into the full pipeline producing unit-disk certificates.

namespace diskcover {

class budget_error : public error {
public:
    explicit budget_error(const std::string& what) : error(what) {}
};

// lattice basis: (0, 2) and (sqrt3, 1)
inline const double kSqrt3 = 1.7320508075688772;
inline const double kRhoMaxDomain = 2.0 / kSqrt3;                  // covering radius of A2
inline const double kRhoSteepLimit = 2.449489742783178 - 1.4142135623730951; // sqrt6 - sqrt2

struct LatticeConfig {
    double rho = 1.0;
    Point translation;
};

struct RegionAreas {
    double hexagon = 0.0; // area(H) = 2 sqrt 3
    double r0 = 0.0;      // area(R0 cap H)
    double r2 = 0.0;      // area(R2 cap H)
    double r22 = 0.0;     // area(R2,2 cap H) = r2 / 3
};

inline RegionAreas region_areas(double rho) {
    if (!(rho >= 1.0 - 1e-12 && rho <= kRhoMaxDomain + 1e-12))
        throw error("region_areas: rho outside [1, 2/sqrt(3)]");
    RegionAreas a;
    a.hexagon = 2.0 * kSqrt3;
    double s = std::sqrt(std::max(0.0, rho * rho - 1.0));
    double arcsec = std::acos(std::min(1.0, 1.0 / rho));
    a.r2 = 6.0 * (rho * rho * arcsec - s);
    a.r22 = a.r2 / 3.0;
    a.r0 = 2.0 * kSqrt3 - M_PI * rho * rho + a.r2;
    return a;
}

// translation-counting bound with k generalized boundary points kept out of R2
inline double f_parametric(double rho, int k) {
    RegionAreas a = region_areas(rho);
    double denom = a.r0 + a.r2;
    if (!(denom > 0.0)) throw error("f: vanishing denominator");
    return (a.hexagon - k * a.r2) / denom + k;
}

// redundant-disk variant: the small-angle vertex only has to avoid the
// vertical lenses, three further boundary points avoid all of R2
inline double f_redundant(double rho) {
    RegionAreas a = region_areas(rho);
    return (a.hexagon - 3.0 * a.r2 - a.r22) / (a.r0 + a.r2) + 4.0;
}

// closed-form seed near the maximizer of f(., k)
inline double rho_tilde_max(int k) {
    return 1.0 / std::cos(M_PI / (6.0 * k + 12.0 - kSqrt3 * M_PI * k));
}

struct MaxResult {
    double value = 0.0;
    double rho = 1.0;
};

namespace detail {

template <typename F>
MaxResult maximize_on_domain(F&& fn, double seed_hint) {
    const double lo = 1.0, hi = kRhoMaxDomain;
    int best_i = 0;
    double best_v = -1e300;
    const int n = 2048;
    for (int i = 0; i <= n; ++i) {
        double x = lo + (hi - lo) * i / n;
        double v = fn(x);
        if (v > best_v) {
            best_v = v;
            best_i = i;
        }
    }
    double a = lo + (hi - lo) * std::max(0, best_i - 1) / n;
    double b = lo + (hi - lo) * std::min(n, best_i + 1) / n;
    if (seed_hint > a && seed_hint < b) { /* seed already inside the bracket */ }
    const double gr = 0.6180339887498949;
    while (b - a > 1e-10) {
        double c = b - gr * (b - a);
        double d = a + gr * (b - a);
        if (fn(c) >= fn(d))
            b = d;
        else
            a = c;
    }
    double x = 0.5 * (a + b);
    return {fn(x), x};
}

} // namespace detail

inline MaxResult maximize_f(int k) {
    if (k < 0) throw error("maximize_f: negative k");
    return detail::maximize_on_domain([k](double r) { return f_parametric(r, k); },
                                      rho_tilde_max(k));
}

inline MaxResult maximize_f_redundant() {
    return detail::maximize_on_domain([](double r) { return f_redundant(r); }, rho_tilde_max(4));
}

// ceil(1/(1-delta)) - 1, with exact-integer quotients snapped before ceiling
inline long lattice_lower_bound(double delta) {
    if (!(delta > 0.0 && delta < 1.0)) throw error("lattice_lower_bound: delta outside (0,1)");
    double q = 1.0 / (1.0 - delta);
    double r = std::round(q);
    if (std::abs(q - r) < 1e-9 * q) return static_cast<long>(r) - 1;
    return static_cast<long>(std::ceil(q)) - 1;
}

// ---------------------------------------------------------------------------
// Point classification against a translated copy of the family

enum class RegionKind { R0, R1, R21, R22 };

struct RegionClass {
    RegionKind kind = RegionKind::R0;
    std::vector<Point> witnesses; // covering lattice centers, sorted by x then y
};

using RegionMask = unsigned;
inline constexpr RegionMask kMaskR0 = 1u, kMaskR1 = 2u, kMaskR21 = 4u, kMaskR22 = 8u;

inline RegionMask region_mask(RegionKind k) {
    switch (k) {
    case RegionKind::R0: return kMaskR0;
    case RegionKind::R1: return kMaskR1;
    case RegionKind::R21: return kMaskR21;
    case RegionKind::R22: return kMaskR22;
    }
    return 0;
}

inline Point lattice_center(int a, int b, const Point& translation) {
    return {translation.x + kSqrt3 * b, translation.y + 2.0 * a + b};
}

inline RegionClass classify_point_region(const Point& p, const LatticeConfig& cfg) {
    if (!(cfg.rho >= 1.0 - 1e-12 && cfg.rho <= kRhoMaxDomain + 1e-9))
        throw error("classify_point_region: rho outside family domain");
    double bx = (p.x - cfg.translation.x) / kSqrt3;
    double ay = ((p.y - cfg.translation.y) - bx) / 2.0;
    int b0 = static_cast<int>(std::lround(bx));
    int a0 = static_cast<int>(std::lround(ay));
    struct Hit {
        Point c;
        int b;
    };
    std::vector<Hit> hits;
    for (int a = a0 - 2; a <= a0 + 2; ++a)
        for (int b = b0 - 2; b <= b0 + 2; ++b) {
            Point c = lattice_center(a, b, cfg.translation);
            if (point_in_disk(p, Disk{c, cfg.rho})) hits.push_back({c, b});
        }
    RegionClass out;
    std::sort(hits.begin(), hits.end(), [](const Hit& u, const Hit& v) {
        return lex_less(u.c, v.c);
    });
    for (const Hit& h : hits) out.witnesses.push_back(h.c);
    if (hits.empty()) {
        out.kind = RegionKind::R0;
    } else if (hits.size() == 1) {
        out.kind = RegionKind::R1;
    } else if (hits.size() == 2) {
        // same column index <=> same center x-coordinate <=> vertical lens
        out.kind = hits[0].b == hits[1].b ? RegionKind::R22 : RegionKind::R21;
    } else {
        throw error("classify_point_region: more than two covering disks");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Translation search over the fundamental domain

namespace detail {

inline double radical_inverse(std::uint64_t i, unsigned base) {
    double f = 1.0, r = 0.0;
    while (i > 0) {
        f /= base;
        r += f * static_cast<double>(i % base);
        i /= base;
    }
    return r;
}

inline Point halton_translation(std::uint64_t index, std::uint64_t seed) {
    // Cranley-Patterson rotation keyed by the seed
    double sx = std::fmod(0.7548776662466927 * static_cast<double>(seed + 1), 1.0);
    double sy = std::fmod(0.5698402909980532 * static_cast<double>(seed + 1), 1.0);
    double u = std::fmod(radical_inverse(index, 2) + sx, 1.0);
    double v = std::fmod(radical_inverse(index, 3) + sy, 1.0);
    return {kSqrt3 * v, 2.0 * u + v};
}

} // namespace detail

struct TranslationQuery {
    double rho = 1.0;
    std::vector<RegionMask> allowed;       // one mask per point
    std::uint64_t budget = 1'000'000;
    std::uint64_t seed = 0;
    std::uint64_t start_index = 1;
};

struct TranslationHit {
    Point translation;
    std::uint64_t index = 0; // sequence index that produced it, for resuming
};

inline std::optional<TranslationHit> find_translation(const std::vector<Point>& X,
                                                      const TranslationQuery& q) {
    if (q.allowed.size() != X.size()) throw error("find_translation: mask count mismatch");
    for (std::uint64_t i = q.start_index; i < q.start_index + q.budget; ++i) {
        Point t = detail::halton_translation(i, q.seed);
        LatticeConfig cfg{q.rho, t};
        bool ok = true;
        for (std::size_t j = 0; j < X.size() && ok; ++j) {
            RegionKind kind = classify_point_region(X[j], cfg).kind;
            ok = (region_mask(kind) & q.allowed[j]) != 0;
        }
        if (ok) return TranslationHit{t, i};
    }
    return std::nullopt;
}

// convenience overload matching the simple contract
inline std::optional<Point> find_translation(const std::vector<Point>& X, double rho,
                                             const std::vector<RegionMask>& allowed,
                                             std::uint64_t budget = 1'000'000,
                                             std::uint64_t seed = 0) {
    TranslationQuery q{rho, allowed, budget, seed, 1};
    auto hit = find_translation(X, q);
    if (!hit) return std::nullopt;
    return hit->translation;
}

// ---------------------------------------------------------------------------
// Redundant-disk filter

// X must be normalized so the small-angle vertex is the unique leftmost point
// with its two hull edges at equal-magnitude opposite slopes. If that vertex
// sits in a diagonal lens, the left disk of the lens can be removed.
inline std::optional<Point> redundant_disk_filter(const std::vector<Point>& X,
                                                  const LatticeConfig& cfg) {
    if (cfg.rho > kRhoSteepLimit + 1e-12) throw error("slope guarantee void");
    std::size_t leftmost = 0;
    for (std::size_t i = 1; i < X.size(); ++i)
        if (lex_less(X[i], X[leftmost])) leftmost = i;
    RegionClass rc = classify_point_region(X[leftmost], cfg);
    if (rc.kind != RegionKind::R21) return std::nullopt;
    return rc.witnesses[0]; // witnesses sorted by x: the left disk
}

// ---------------------------------------------------------------------------
// Full covering pipeline for up to 17 points

struct PipelineConfig {
    std::uint64_t seed = 0;
    std::uint64_t translation_budget = 1'000'000;
    PredicateConfig predicates{};
};

// Disjoint unit disks for points on a line: a chain of pitch-2 disks whose
// tangency grid is shifted until it clears every projected point.
inline CoverCertificate collinear_cover(const std::vector<Point>& X) {
    CoverCertificate cert;
    std::vector<Point> hull = convex_hull(X);
    if (hull.size() == 1) {
        cert.disks = {unit_disk(hull[0])};
        cert.assignment.assign(X.size(), 0);
    } else if (hull.size() == 2) {
        Point a = hull[0];
        Point dir = (hull[1] - a) / dist(hull[0], hull[1]);
        std::vector<double> s(X.size());
        for (std::size_t i = 0; i < X.size(); ++i) s[i] = dot(X[i] - a, dir);
        double smin = *std::min_element(s.begin(), s.end());
        double base = 0.0;
        bool placed = false;
        for (int m = 1; m <= 128 && !placed; ++m) {
            double delta = static_cast<double>(m) / 129.0;
            base = smin - 1.0 - delta; // tangency grid at base + 2k
            placed = true;
            for (double si : s) {
                double rel = (si - base) / 2.0;
                double frac = rel - std::floor(rel);
                if (std::min(frac, 1.0 - frac) < 1e-7) placed = false;
            }
        }
        if (!placed) throw error("collinear cover: no tangency shift found");
        std::vector<long> disk_of_k;
        cert.assignment.assign(X.size(), -1);
        for (std::size_t i = 0; i < X.size(); ++i) {
            long k = static_cast<long>(std::floor((s[i] - base) / 2.0));
            auto it = std::find(disk_of_k.begin(), disk_of_k.end(), k);
            std::size_t idx;
            if (it == disk_of_k.end()) {
                idx = disk_of_k.size();
                disk_of_k.push_back(k);
                double c = base + 2.0 * static_cast<double>(k) + 1.0;
                cert.disks.push_back(unit_disk(a + c * dir));
            } else {
                idx = static_cast<std::size_t>(it - disk_of_k.begin());
            }
            cert.assignment[i] = static_cast<int>(idx);
        }
    } else {
        throw error("collinear cover: input not collinear");
    }
    if (!verify_certificate(X, cert).ok) throw error("collinear cover failed verification");
    return cert;
}

namespace detail {

inline std::size_t index_of_point(const std::vector<Point>& X, const Point& p) {
    for (std::size_t i = 0; i < X.size(); ++i)
        if (X[i] == p) return i;
    throw error("internal: point lookup failed");
}

// interior hull angle at vertex i
inline double hull_angle(const std::vector<Point>& hull, std::size_t i) {
    std::size_t n = hull.size();
    Point a = hull[(i + n - 1) % n] - hull[i];
    Point b = hull[(i + 1) % n] - hull[i];
    double c = dot(a, b) / (norm(a) * norm(b));
    return std::acos(std::clamp(c, -1.0, 1.0));
}

// One verified lattice-route attempt for normalized points Y: search a
// translation for Z = rho*Y, keep the covering lattice disks (dropping a
// redundant one when the filter fires), extend with singleton disks.
inline CoverCertificate lattice_cover_attempt(const std::vector<Point>& Y, const GbpResult& gbps,
                                              double rho, const std::vector<RegionMask>& masks,
                                              bool redundant_route, const PipelineConfig& pc,
                                              std::uint64_t& sequence_index) {
    std::vector<Point> Z;
    Z.reserve(Y.size());
    for (const Point& y : Y) Z.push_back(rho * y);

    TranslationQuery q{rho, masks, pc.translation_budget, pc.seed, sequence_index};
    auto hit = find_translation(Z, q);
    if (!hit)
        throw budget_error("search failed: translation budget exhausted, retry with a new seed");
    sequence_index = hit->index + 1;

    LatticeConfig lat{rho, hit->translation};
    std::optional<Point> removed;
    if (redundant_route) removed = redundant_disk_filter(Z, lat);

    std::vector<Point> centers;
    for (const Point& z : Z) {
        RegionClass rc = classify_point_region(z, lat);
        for (const Point& w : rc.witnesses) {
            if (removed && w == *removed) continue;
            bool seen = false;
            for (const Point& c : centers)
                if (c == w) seen = true;
            if (!seen) centers.push_back(w);
        }
    }
    std::vector<Disk> partial;
    partial.reserve(centers.size());
    for (const Point& c : centers) partial.push_back(unit_disk(c / rho));
    return extend_disjoint_cover(Y, gbps, partial);
}

} // namespace detail

// Dispatch over the shape of conv X: collinear sets get a disjoint chain,
// small triangular hulls a direct cover, all-extreme-point sets a singleton
// chain; everything else goes through the translated-lattice route (the
// redundant-disk variant for triangular and quadrilateral hulls, the
// five-boundary-point bound otherwise). Certificates use unit disks on the
// original points and are verified before they are returned.
inline CoverCertificate cover_up_to_17(const std::vector<Point>& X, const PipelineConfig& pc = {}) {
    if (X.empty()) throw error("cover_up_to_17: empty input");
    if (X.size() > 17) throw error("cover_up_to_17: more than 17 points");
    for (std::size_t i = 0; i < X.size(); ++i) {
        if (!is_finite(X[i])) throw error("cover_up_to_17: non-finite point");
        for (std::size_t j = i + 1; j < X.size(); ++j)
            if (X[i] == X[j]) throw error("duplicate point");
    }

    std::vector<Point> hull = convex_hull(X);
    if (hull.size() <= 2) return collinear_cover(X);

    auto run = [&]() -> CoverCertificate {
        if (hull.size() == 3) {
            HullClassification cls = classify_triangle_hull(X, pc.predicates);
            if (cls.kind == HullCase::Unit || cls.kind == HullCase::Small ||
                cls.kind == HullCase::RightObtuseShort)
                return cover_small_triangle(X, cls);
        }

        if (X.size() == hull.size()) {
            // every point is a hull vertex: extend the empty cover directly
            GbpResult g = hull_vertex_gbps(X, hull);
            return extend_disjoint_cover(X, g, {});
        }

        bool redundant_route = hull.size() <= 4;
        Isometry frame; // identity for the five-vertex route
        if (redundant_route) {
            // normalize the sharpest (<= pi/2) vertex: bisector along +x
            std::size_t v1 = 0;
            double best = 1e300;
            for (std::size_t i = 0; i < hull.size(); ++i) {
                double ang = detail::hull_angle(hull, i);
                if (ang < best) {
                    best = ang;
                    v1 = i;
                }
            }
            if (!(best <= M_PI / 2 + 1e-9))
                throw error("internal: no vertex with angle <= pi/2");
            std::size_t n = hull.size();
            Point e1 = hull[(v1 + n - 1) % n] - hull[v1];
            Point e2 = hull[(v1 + 1) % n] - hull[v1];
            Point bis = e1 / norm(e1) + e2 / norm(e2);
            bis = bis / norm(bis);
            frame.m00 = bis.x;
            frame.m01 = bis.y;
            frame.m10 = -bis.y;
            frame.m11 = bis.x;
            frame.t = {-(frame.m00 * hull[v1].x + frame.m01 * hull[v1].y),
                       -(frame.m10 * hull[v1].x + frame.m11 * hull[v1].y)};
        }

        std::vector<Point> Y;
        Y.reserve(X.size());
        for (const Point& x : X) Y.push_back(frame.apply(x));

        GbpResult gbps = generalized_boundary_points(Y, pc.predicates);
        std::vector<RegionMask> masks(Y.size(), kMaskR1);
        for (const Point& g : gbps.points)
            masks[detail::index_of_point(Y, g)] = kMaskR0 | kMaskR1;
        double rho;
        if (redundant_route) {
            static const MaxResult fr = maximize_f_redundant();
            rho = fr.rho;
            masks[detail::index_of_point(Y, Point{0.0, 0.0})] |= kMaskR21;
        } else {
            static const MaxResult f5 = maximize_f(5);
            rho = f5.rho;
        }

        std::uint64_t sequence_index = 1;
        error last("lattice route failed");
        for (int attempt = 0; attempt < 8; ++attempt) {
            try {
                CoverCertificate certY = detail::lattice_cover_attempt(
                    Y, gbps, rho, masks, redundant_route, pc, sequence_index);
                CoverCertificate cert;
                cert.assignment = certY.assignment;
                for (const Disk& d : certY.disks) cert.disks.push_back(frame.invert(d));
                if (!verify_certificate(X, cert).ok)
                    throw error("pipeline certificate failed verification");
                return cert;
            } catch (const budget_error&) {
                throw;
            } catch (const error& e) {
                last = e; // resume the translation sequence past the bad hit
            }
        }
        throw last;
    };

    try {
        return run();
    } catch (const budget_error&) {
        throw;
    } catch (const error&) {
        // degenerate configuration slipped past the constructive route: the
        // generic dual solver is complete at this size
        auto out = solve_point_instance(X, {}, 0, pc.predicates);
        if (out.status != SolveStatus::Solved) throw;
        return out.certificate;
    }
}

} // namespace diskcover
