#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "diskcover/arrangement.hpp"
#include "diskcover/geometry.hpp"

// Exact-cover solving: select rows of a binary matrix so that every column is
// covered exactly once. The solver is Algorithm-X-style backtracking over a
// dancing-links representation with minimum-remaining-candidates column
// choice; branching is deterministic (ties by lowest column index, rows in
// increasing index order), so the first solution found is reproducible.
// Infeasible is a result, not an error; an optional operation budget turns
// exhaustion into an explicit BudgetExceeded outcome distinct from both.

namespace diskcover {

struct ExactCoverInstance {
    std::size_t num_cols = 0;
    std::vector<std::vector<int>> rows; // sorted column indices per row
};

enum class SolveStatus { Solved, Infeasible, BudgetExceeded };

struct SolveResult {
    SolveStatus status = SolveStatus::Infeasible;
    std::vector<int> selected; // sorted row indices when Solved
    std::uint64_t ops = 0;     // elementary link operations spent
};

namespace detail {

class DancingLinks {
public:
    explicit DancingLinks(const ExactCoverInstance& inst) {
        std::size_t n_nodes = inst.num_cols + 1;
        for (const auto& r : inst.rows) n_nodes += r.size();
        left_.reserve(n_nodes);
        int c = static_cast<int>(inst.num_cols);
        // root is node c; column headers are 0..c-1
        for (int i = 0; i <= c; ++i) {
            left_.push_back(i == 0 ? c : i - 1);
            right_.push_back(i == c ? 0 : i + 1);
            up_.push_back(i);
            down_.push_back(i);
            col_.push_back(i);
            row_.push_back(-1);
        }
        root_ = c;
        size_.assign(static_cast<std::size_t>(c), 0);
        for (std::size_t r = 0; r < inst.rows.size(); ++r) {
            int first = -1;
            for (int column : inst.rows[r]) {
                int id = static_cast<int>(left_.size());
                left_.push_back(id);
                right_.push_back(id);
                up_.push_back(up_[static_cast<std::size_t>(column)]);
                down_.push_back(column);
                col_.push_back(column);
                row_.push_back(static_cast<int>(r));
                down_[static_cast<std::size_t>(up_[static_cast<std::size_t>(column)])] = id;
                up_[static_cast<std::size_t>(column)] = id;
                ++size_[static_cast<std::size_t>(column)];
                if (first < 0) {
                    first = id;
                } else {
                    left_[static_cast<std::size_t>(id)] = left_[static_cast<std::size_t>(first)];
                    right_[static_cast<std::size_t>(id)] = first;
                    right_[static_cast<std::size_t>(left_[static_cast<std::size_t>(first)])] = id;
                    left_[static_cast<std::size_t>(first)] = id;
                }
            }
        }
    }

    SolveResult solve(std::uint64_t budget) {
        budget_ = budget;
        ops_ = 0;
        exceeded_ = false;
        stack_.clear();
        SolveResult res;
        bool found = search();
        res.ops = ops_;
        if (exceeded_) {
            res.status = SolveStatus::BudgetExceeded;
        } else if (found) {
            res.status = SolveStatus::Solved;
            res.selected = stack_;
            std::sort(res.selected.begin(), res.selected.end());
        } else {
            res.status = SolveStatus::Infeasible;
        }
        return res;
    }

private:
    bool spend(std::uint64_t amount) {
        ops_ += amount;
        if (budget_ != 0 && ops_ > budget_) exceeded_ = true;
        return !exceeded_;
    }

    void cover(int c) {
        std::size_t cu = static_cast<std::size_t>(c);
        right_[static_cast<std::size_t>(left_[cu])] = right_[cu];
        left_[static_cast<std::size_t>(right_[cu])] = left_[cu];
        for (int i = down_[cu]; i != c; i = down_[static_cast<std::size_t>(i)]) {
            for (int j = right_[static_cast<std::size_t>(i)]; j != i;
                 j = right_[static_cast<std::size_t>(j)]) {
                std::size_t ju = static_cast<std::size_t>(j);
                down_[static_cast<std::size_t>(up_[ju])] = down_[ju];
                up_[static_cast<std::size_t>(down_[ju])] = up_[ju];
                --size_[static_cast<std::size_t>(col_[ju])];
                ++ops_;
            }
        }
    }

    void uncover(int c) {
        std::size_t cu = static_cast<std::size_t>(c);
        for (int i = up_[cu]; i != c; i = up_[static_cast<std::size_t>(i)]) {
            for (int j = left_[static_cast<std::size_t>(i)]; j != i;
                 j = left_[static_cast<std::size_t>(j)]) {
                std::size_t ju = static_cast<std::size_t>(j);
                ++size_[static_cast<std::size_t>(col_[ju])];
                down_[static_cast<std::size_t>(up_[ju])] = j;
                up_[static_cast<std::size_t>(down_[ju])] = j;
                ++ops_;
            }
        }
        right_[static_cast<std::size_t>(left_[cu])] = c;
        left_[static_cast<std::size_t>(right_[cu])] = c;
    }

    bool search() {
        if (right_[static_cast<std::size_t>(root_)] == root_) return true;
        if (!spend(1)) return false;
        // MRV column, ties by lowest index (list order preserves index order)
        int best = -1;
        int best_size = std::numeric_limits<int>::max();
        for (int c = right_[static_cast<std::size_t>(root_)]; c != root_;
             c = right_[static_cast<std::size_t>(c)]) {
            if (size_[static_cast<std::size_t>(c)] < best_size) {
                best_size = size_[static_cast<std::size_t>(c)];
                best = c;
                if (best_size == 0) break;
            }
        }
        if (best_size == 0) return false;
        cover(best);
        // candidate rows in increasing row index == column list order
        for (int i = down_[static_cast<std::size_t>(best)]; i != best;
             i = down_[static_cast<std::size_t>(i)]) {
            if (!spend(1)) break;
            stack_.push_back(row_[static_cast<std::size_t>(i)]);
            for (int j = right_[static_cast<std::size_t>(i)]; j != i;
                 j = right_[static_cast<std::size_t>(j)])
                cover(col_[static_cast<std::size_t>(j)]);
            if (search()) return true;
            for (int j = left_[static_cast<std::size_t>(i)]; j != i;
                 j = left_[static_cast<std::size_t>(j)])
                uncover(col_[static_cast<std::size_t>(j)]);
            stack_.pop_back();
            if (exceeded_) break;
        }
        uncover(best);
        return false;
    }

    std::vector<int> left_, right_, up_, down_, col_, row_;
    std::vector<int> size_;
    std::vector<int> stack_;
    int root_ = 0;
    std::uint64_t budget_ = 0;
    std::uint64_t ops_ = 0;
    bool exceeded_ = false;
};

} // namespace detail

// budget = 0 means unbounded search
inline SolveResult solve_exact_cover(const ExactCoverInstance& inst, std::uint64_t budget = 0) {
    if (inst.num_cols == 0 || inst.rows.empty()) {
        SolveResult r;
        r.status = inst.num_cols == 0 ? SolveStatus::Solved : SolveStatus::Infeasible;
        return r;
    }
    // branching order: MRV column, rows preferring larger cover first
    std::vector<int> order(inst.rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return inst.rows[static_cast<std::size_t>(a)].size() >
               inst.rows[static_cast<std::size_t>(b)].size();
    });
    ExactCoverInstance permuted;
    permuted.num_cols = inst.num_cols;
    for (int r : order) permuted.rows.push_back(inst.rows[static_cast<std::size_t>(r)]);
    detail::DancingLinks dlx(permuted);
    SolveResult res = dlx.solve(budget);
    for (int& r : res.selected) r = order[static_cast<std::size_t>(r)];
    std::sort(res.selected.begin(), res.selected.end());
    if (res.status == SolveStatus::Solved) {
        // each column must be covered exactly once by the selection
        std::vector<int> count(inst.num_cols, 0);
        for (int r : res.selected)
            for (int c : inst.rows[static_cast<std::size_t>(r)]) ++count[static_cast<std::size_t>(c)];
        for (int c : count)
            if (c != 1) throw error("internal: selection does not cover columns exactly once");
    }
    return res;
}

// Test oracle: plain include/exclude enumeration over rows in index order,
// pruning only on column conflicts. Independent of the dancing-links path.
inline SolveResult brute_force_cover(const ExactCoverInstance& inst) {
    if (inst.rows.size() > 25) throw error("oracle limit");
    std::size_t words = (inst.num_cols + 63) / 64;
    std::vector<std::uint64_t> full(words, 0), state(words, 0);
    for (std::size_t c = 0; c < inst.num_cols; ++c) full[c / 64] |= 1ull << (c % 64);
    std::vector<std::vector<std::uint64_t>> row_masks;
    for (const auto& r : inst.rows) {
        std::vector<std::uint64_t> m(words, 0);
        for (int c : r) m[static_cast<std::size_t>(c) / 64] |= 1ull << (c % 64);
        row_masks.push_back(std::move(m));
    }
    SolveResult res;
    std::vector<int> chosen;
    auto complete = [&]() { return state == full; };
    auto disjoint = [&](const std::vector<std::uint64_t>& m) {
        for (std::size_t w = 0; w < words; ++w)
            if (state[w] & m[w]) return false;
        return true;
    };
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        ++res.ops;
        if (complete()) return true;
        if (i == inst.rows.size()) return false;
        if (disjoint(row_masks[i])) {
            for (std::size_t w = 0; w < words; ++w) state[w] |= row_masks[i][w];
            chosen.push_back(static_cast<int>(i));
            if (rec(i + 1)) return true;
            chosen.pop_back();
            for (std::size_t w = 0; w < words; ++w) state[w] &= ~row_masks[i][w];
        }
        return rec(i + 1);
    };
    if (rec(0)) {
        res.status = SolveStatus::Solved;
        res.selected = chosen;
    } else {
        res.status = SolveStatus::Infeasible;
    }
    return res;
}

// ---------------------------------------------------------------------------
// Certificates

struct CoverCertificate {
    std::vector<Disk> disks;
    std::vector<int> assignment; // point index -> disk index
};

struct CoverViolation {
    int point = -1;
    int disk = -1;
    bool missing = false; // true: point not inside its assigned disk
                          // false: point inside a disk other than its assigned one
};

struct VerifyReport {
    bool ok = false;
    std::vector<CoverViolation> violations;
};

// strict containment in the assigned disk, strict exclusion from all others
inline VerifyReport verify_certificate(const std::vector<Point>& X, const CoverCertificate& cert) {
    VerifyReport rep;
    if (cert.assignment.size() != X.size()) {
        rep.violations.push_back({-1, -1, true});
        return rep;
    }
    for (std::size_t i = 0; i < X.size(); ++i) {
        int a = cert.assignment[i];
        if (a < 0 || static_cast<std::size_t>(a) >= cert.disks.size()) {
            rep.violations.push_back({static_cast<int>(i), a, true});
            continue;
        }
        for (std::size_t d = 0; d < cert.disks.size(); ++d) {
            bool inside = point_in_disk(X[i], cert.disks[d]);
            if (static_cast<int>(d) == a && !inside)
                rep.violations.push_back({static_cast<int>(i), static_cast<int>(d), true});
            if (static_cast<int>(d) != a && inside)
                rep.violations.push_back({static_cast<int>(i), static_cast<int>(d), false});
        }
    }
    rep.ok = rep.violations.empty();
    return rep;
}

struct PointSolveOutcome {
    SolveStatus status = SolveStatus::Infeasible;
    CoverCertificate certificate; // valid when status == Solved
    std::uint64_t ops = 0;
};

// Dual route: disks of radius 1 at each point of X, cells enumerated, the
// cover solved combinatorially, selected cells mapped back to unit disks at
// their witnesses. dual_disks may override the dual family (one disk per
// point, all radii equal).
inline PointSolveOutcome solve_point_instance(const std::vector<Point>& X,
                                              std::vector<Disk> dual_disks = {},
                                              std::uint64_t budget = 0,
                                              const PredicateConfig& cfg = {}) {
    if (X.empty()) throw error("solve_point_instance: empty input");
    if (dual_disks.empty())
        for (const Point& p : X) dual_disks.push_back(unit_disk(p));
    if (dual_disks.size() != X.size()) throw error("solve_point_instance: dual family size");
    double radius = dual_disks.front().radius;
    for (const Disk& d : dual_disks)
        if (d.radius != radius) throw error("solve_point_instance: mixed dual radii");

    CellArrangement arr = enumerate_cells(dual_disks, cfg);
    ExactCoverInstance inst;
    inst.num_cols = X.size();
    for (const CellSignature& cell : arr.cells) inst.rows.push_back(cell.members);

    SolveResult sol = solve_exact_cover(inst, budget);
    PointSolveOutcome out;
    out.status = sol.status;
    out.ops = sol.ops;
    if (sol.status != SolveStatus::Solved) return out;

    out.certificate.assignment.assign(X.size(), -1);
    for (std::size_t k = 0; k < sol.selected.size(); ++k) {
        const CellSignature& cell = arr.cells[static_cast<std::size_t>(sol.selected[k])];
        out.certificate.disks.push_back(Disk{cell.witness, radius});
        for (int pt : cell.members) out.certificate.assignment[static_cast<std::size_t>(pt)] =
            static_cast<int>(k);
    }
    if (!verify_certificate(X, out.certificate).ok)
        throw error("internal: dual certificate failed verification");
    return out;
}

} // namespace diskcover
