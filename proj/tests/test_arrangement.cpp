#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "diskcover/arrangement.hpp"
#include "diskcover/exact_cover.hpp"

using namespace diskcover;

namespace {

std::set<std::vector<int>> members_set(const CellArrangement& arr) {
    std::set<std::vector<int>> s;
    for (const auto& c : arr.cells) s.insert(c.members);
    return s;
}

// sampling oracle: signatures hit by uniform random points in the bounding box
std::set<std::vector<int>> sampled_signatures(const std::vector<Disk>& disks, int n_samples,
                                              std::mt19937_64& rng) {
    double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
    for (const Disk& d : disks) {
        x0 = std::min(x0, d.center.x - d.radius);
        x1 = std::max(x1, d.center.x + d.radius);
        y0 = std::min(y0, d.center.y - d.radius);
        y1 = std::max(y1, d.center.y + d.radius);
    }
    std::uniform_real_distribution<double> ux(x0, x1), uy(y0, y1);
    std::set<std::vector<int>> sigs;
    for (int i = 0; i < n_samples; ++i) {
        Point p{ux(rng), uy(rng)};
        std::vector<int> sig;
        for (std::size_t d = 0; d < disks.size(); ++d)
            if (point_in_disk(p, disks[d])) sig.push_back(static_cast<int>(d));
        if (!sig.empty()) sigs.insert(sig);
    }
    return sigs;
}

} // namespace

TEST_CASE("enumerate_cells small configurations") {
    SECTION("single disk") {
        auto arr = enumerate_cells({unit_disk({0, 0})});
        REQUIRE(arr.cells.size() == 1);
        CHECK(arr.cells[0].members == std::vector<int>{0});
    }
    SECTION("two disjoint disks") {
        auto arr = enumerate_cells({unit_disk({0, 0}), unit_disk({5, 0})});
        REQUIRE(arr.cells.size() == 2);
        CHECK(members_set(arr) == std::set<std::vector<int>>{{0}, {1}});
    }
    SECTION("two overlapping disks") {
        auto arr = enumerate_cells({unit_disk({0, 0}), unit_disk({1, 0})});
        CHECK(members_set(arr) == std::set<std::vector<int>>{{0}, {1}, {0, 1}});
    }
    SECTION("three disks with a common triple intersection") {
        auto arr = enumerate_cells(
            {unit_disk({0, 0}), unit_disk({1, 0}), unit_disk({0.5, 0.8})});
        std::set<std::vector<int>> expect{{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
        CHECK(members_set(arr) == expect);
    }
    SECTION("duplicate disks are an error") {
        CHECK_THROWS_AS(enumerate_cells({unit_disk({0, 0}), unit_disk({0, 0})}), error);
    }
}

TEST_CASE("cell witnesses reproduce their signatures") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int it = 0; it < 30; ++it) {
        std::vector<Disk> disks;
        for (int i = 0; i < 6; ++i) disks.push_back(unit_disk({u(rng), u(rng)}));
        auto arr = enumerate_cells(disks);
        for (const auto& cell : arr.cells) {
            std::vector<int> sig;
            for (std::size_t d = 0; d < disks.size(); ++d)
                if (point_in_disk(cell.witness, disks[d])) sig.push_back(static_cast<int>(d));
            CHECK(sig == cell.members);
        }
        // every disk contains at least its own center's cell
        std::set<int> seen;
        for (const auto& cell : arr.cells)
            for (int m : cell.members) seen.insert(m);
        CHECK(seen.size() == disks.size());
    }
}

TEST_CASE("enumeration finds every sampled signature") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u(-1.6, 1.6);
    for (int it = 0; it < 25; ++it) {
        std::vector<Disk> disks;
        while (disks.size() < 5) {
            Disk d = unit_disk({u(rng), u(rng)});
            bool ok = true;
            for (const Disk& e : disks) {
                double g = dist(d.center, e.center);
                if (g < 0.05 || std::abs(g - 2.0) < 0.05) ok = false;
            }
            if (ok) disks.push_back(d);
        }
        auto arr = enumerate_cells(disks);
        auto enumerated = members_set(arr);
        auto sampled = sampled_signatures(disks, 200000, rng);
        for (const auto& sig : sampled) {
            INFO("instance " << it);
            CHECK(enumerated.count(sig) == 1);
        }
    }
}

TEST_CASE("enumeration is deterministic") {
    std::vector<Disk> disks{unit_disk({0, 0}), unit_disk({0.9, 0.3}), unit_disk({-0.4, 1.1}),
                            unit_disk({0.2, -0.8})};
    auto a = enumerate_cells(disks);
    auto b = enumerate_cells(disks);
    REQUIRE(a.cells.size() == b.cells.size());
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
        CHECK(a.cells[i].members == b.cells[i].members);
        CHECK(a.cells[i].witness == b.cells[i].witness);
    }
}

TEST_CASE("incidence_matrix") {
    SECTION("two overlapping disks") {
        auto arr = enumerate_cells({unit_disk({0, 0}), unit_disk({1, 0})});
        auto m = incidence_matrix(arr);
        std::set<std::vector<std::uint8_t>> rows(m.begin(), m.end());
        std::set<std::vector<std::uint8_t>> expect{{1, 0}, {0, 1}, {1, 1}};
        CHECK(rows == expect);
    }
    SECTION("single disk") {
        auto arr = enumerate_cells({unit_disk({2, 2})});
        auto m = incidence_matrix(arr);
        REQUIRE(m.size() == 1);
        REQUIRE(m[0].size() == 1);
        CHECK(m[0][0] == 1);
    }
    SECTION("two close pairs admit a two-row exact cover") {
        // dual of four points forming two nearby pairs
        std::vector<Disk> disks{unit_disk({0, 0}), unit_disk({1, 0}), unit_disk({10, 0}),
                                unit_disk({11, 0})};
        auto arr = enumerate_cells(disks);
        ExactCoverInstance inst;
        inst.num_cols = disks.size();
        for (const auto& c : arr.cells) inst.rows.push_back(c.members);
        auto sol = solve_exact_cover(inst);
        REQUIRE(sol.status == SolveStatus::Solved);
        CHECK(sol.selected.size() == 2);
    }
}
