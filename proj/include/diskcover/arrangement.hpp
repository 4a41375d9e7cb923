#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <unordered_map>
#include <vector>

#include "diskcover/geometry.hpp"

// Decomposes the plane under a finite disk family into membership signatures:
// one representative (witness) point per distinct set of covering disks.
// Witness candidates are disk centers, perturbed circle-circle intersection
// points (pushed into all four adjacent cells along the crossing bisectors),
// and each circle's lowest point pushed radially inward. Signatures are then
// evaluated with the exact membership predicate, so a witness is never
// misclassified; the perturbation radius only has to keep the candidate
// inside the intended cell.

namespace diskcover {

struct CellSignature {
    std::vector<int> members; // sorted disk indices
    Point witness;
};

struct CellArrangement {
    std::vector<Disk> disks;
    std::vector<CellSignature> cells; // nonempty membership only, unique members
};

namespace detail {

// uniform hash grid over disk centers for membership queries
class DiskGrid {
public:
    explicit DiskGrid(const std::vector<Disk>& disks) : disks_(&disks) {
        rmax_ = 0.0;
        for (const Disk& d : disks) rmax_ = std::max(rmax_, d.radius);
        h_ = std::max(rmax_, 1e-9);
        for (std::size_t i = 0; i < disks.size(); ++i)
            cells_[key(disks[i].center)].push_back(static_cast<int>(i));
    }

    // sorted indices of disks strictly containing p
    std::vector<int> signature(const Point& p) const {
        std::vector<int> sig;
        std::int64_t cx = coord(p.x), cy = coord(p.y);
        for (std::int64_t gx = cx - 1; gx <= cx + 1; ++gx)
            for (std::int64_t gy = cy - 1; gy <= cy + 1; ++gy) {
                auto it = cells_.find((gx << 32) ^ (gy & 0xffffffffLL));
                if (it == cells_.end()) continue;
                for (int i : it->second)
                    if (point_in_disk(p, (*disks_)[static_cast<std::size_t>(i)])) sig.push_back(i);
            }
        std::sort(sig.begin(), sig.end());
        return sig;
    }

private:
    std::int64_t coord(double v) const { return static_cast<std::int64_t>(std::floor(v / h_)); }
    std::int64_t key(const Point& p) const { return (coord(p.x) << 32) ^ (coord(p.y) & 0xffffffffLL); }

    const std::vector<Disk>* disks_;
    double rmax_;
    double h_;
    std::unordered_map<std::int64_t, std::vector<int>> cells_;
};

// lower bound on the minimal positive pairwise distance, exact when <= cell
inline double separation_lower_bound(const std::vector<Point>& pts, double cell) {
    std::unordered_map<std::int64_t, std::vector<int>> grid;
    auto coord = [cell](double v) { return static_cast<std::int64_t>(std::floor(v / cell)); };
    auto key = [&](const Point& p) { return (coord(p.x) << 32) ^ (coord(p.y) & 0xffffffffLL); };
    for (std::size_t i = 0; i < pts.size(); ++i) grid[key(pts[i])].push_back(static_cast<int>(i));
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::int64_t cx = coord(pts[i].x), cy = coord(pts[i].y);
        for (std::int64_t gx = cx - 1; gx <= cx + 1; ++gx)
            for (std::int64_t gy = cy - 1; gy <= cy + 1; ++gy) {
                auto it = grid.find((gx << 32) ^ (gy & 0xffffffffLL));
                if (it == grid.end()) continue;
                for (int j : it->second) {
                    if (static_cast<std::size_t>(j) <= i) continue;
                    double d = dist(pts[i], pts[static_cast<std::size_t>(j)]);
                    if (d > 0.0) best = std::min(best, d);
                }
            }
    }
    // pairs in non-adjacent cells are farther than `cell` apart
    return std::min(best, cell);
}

} // namespace detail

inline CellArrangement enumerate_cells(const std::vector<Disk>& disks,
                                       const PredicateConfig& cfg = {}) {
    if (disks.empty()) throw error("enumerate_cells: no disks");
    detail::DiskGrid grid(disks);

    struct Crossing {
        Point at;
        Point u; // outward radial of first circle
        Point v; // outward radial of second circle
    };
    std::vector<Crossing> crossings;
    std::vector<Point> features; // intersection points and centers, for the gap estimate
    for (const Disk& d : disks) features.push_back(d.center);
    double reach = 0.0;
    for (const Disk& d : disks) reach = std::max(reach, d.radius);
    for (std::size_t i = 0; i < disks.size(); ++i) {
        for (std::size_t j = i + 1; j < disks.size(); ++j) {
            if (disks[i] == disks[j]) throw error("duplicate disk");
            if (dist(disks[i].center, disks[j].center) > disks[i].radius + disks[j].radius)
                continue;
            std::vector<Point> pts;
            try {
                pts = circle_intersection(disks[i], disks[j], cfg);
            } catch (const error&) {
                continue; // concentric: no boundary intersection
            }
            for (const Point& p : pts) {
                Point u = (p - disks[i].center) / std::max(dist(p, disks[i].center), 1e-300);
                Point v = (p - disks[j].center) / std::max(dist(p, disks[j].center), 1e-300);
                crossings.push_back({p, u, v});
                features.push_back(p);
            }
        }
    }

    // delta below the minimal feature separation keeps each perturbed point
    // inside the cell it is aimed at; shrinking it further is always safe
    double sep = detail::separation_lower_bound(features, 1e-3);
    double delta = std::min(1e-6, sep / 4.0);
    delta = std::max(delta, 1e-12 * (1.0 + reach));

    std::vector<Point> candidates;
    for (const Disk& d : disks) candidates.push_back(d.center);
    for (const Disk& d : disks)
        candidates.push_back({d.center.x, d.center.y - d.radius + delta});
    for (const Crossing& c : crossings) {
        Point s = c.u + c.v;
        Point t = c.u - c.v;
        double ns = norm(s), nt = norm(t);
        if (ns < 1e-12 || nt < 1e-12) {
            // tangential crossing: radial and tangential directions instead
            s = c.u;
            t = {-c.u.y, c.u.x};
            ns = norm(s);
            nt = norm(t);
        }
        s = s / ns;
        t = t / nt;
        for (Point dir : {s, Point{-s.x, -s.y}, t, Point{-t.x, -t.y}})
            candidates.push_back(c.at + delta * dir);
    }

    std::sort(candidates.begin(), candidates.end(), lex_less);
    std::map<std::vector<int>, Point> found; // members -> lexicographically least witness
    for (const Point& p : candidates) {
        std::vector<int> sig = grid.signature(p);
        if (sig.empty()) continue;
        found.emplace(std::move(sig), p);
    }

    CellArrangement arr;
    arr.disks = disks;
    for (auto& [members, witness] : found) arr.cells.push_back({members, witness});
    return arr;
}

// rows = cells, columns = disks; entry 1 iff the disk contains the cell
inline std::vector<std::vector<std::uint8_t>> incidence_matrix(const CellArrangement& arr) {
    std::vector<std::vector<std::uint8_t>> m(arr.cells.size(),
                                             std::vector<std::uint8_t>(arr.disks.size(), 0));
    for (std::size_t i = 0; i < arr.cells.size(); ++i)
        for (int j : arr.cells[i].members) m[i][static_cast<std::size_t>(j)] = 1;
    return m;
}

} // namespace diskcover
