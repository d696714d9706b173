#include <doctest.h>

#include <cmath>
#include <random>

#include "dtsp/errors.hpp"
#include "dtsp/etsp.hpp"
#include "oracles.hpp"

using namespace dtsp;

namespace {

std::vector<Vec2> random_points(int n, std::mt19937_64& rng, double box = 100.0) {
    std::uniform_real_distribution<double> coord(0.0, box);
    std::vector<Vec2> pts;
    pts.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pts.push_back({coord(rng), coord(rng)});
    return pts;
}

}  // namespace

TEST_CASE("unit square: perimeter tour and the crossing tour window") {
    const std::vector<Vec2> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    const EtspSolution best = solve_etsp(square);
    CHECK(best.length == doctest::Approx(4.0));
    CHECK(best.sequence == std::vector<int>{0, 1, 2, 3});

    const auto second = solve_etsp_window({square, 4.0 + 1e-9, 10.0});
    REQUIRE(second.has_value());
    CHECK(second->length == doctest::Approx(2.0 + 2.0 * std::sqrt(2.0)));

    // beyond every achievable length: absent
    CHECK(!solve_etsp_window({square, 10.0, 20.0}).has_value());
}

TEST_CASE("triangle has exactly one tour") {
    const std::vector<Vec2> tri{{0, 0}, {4, 0}, {0, 3}};
    const EtspSolution best = solve_etsp(tri);
    CHECK(best.length == doctest::Approx(12.0));
    CHECK(best.sequence == std::vector<int>{0, 1, 2});
    CHECK(!solve_etsp_window({tri, 12.0 + 1e-9, 100.0}).has_value());
}

TEST_CASE("canonical form fixes rotation and reflection") {
    CHECK(canonical_tour({2, 0, 1, 3}) == std::vector<int>{0, 1, 3, 2});
    CHECK(canonical_tour({2, 3, 0, 1}) == std::vector<int>{0, 1, 2, 3});
    CHECK(canonical_tour({0, 3, 2, 1}) == std::vector<int>{0, 1, 2, 3});
    CHECK(canonical_tour({4, 3, 0, 1, 2}) == std::vector<int>{0, 1, 2, 4, 3});
    CHECK(canonical_tour({1, 0, 4, 3, 2}) == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("nine points match exhaustive enumeration exactly") {
    std::mt19937_64 rng(71);
    for (int rep = 0; rep < 50; ++rep) {
        const auto pts = random_points(9, rng);
        const auto tours = oracles::enumerate_all_tours(pts);
        const EtspSolution got = solve_etsp(pts);
        CHECK(got.length == tours.front().length);  // exact double equality
        CHECK(got.sequence == tours.front().sequence);
    }
}

TEST_CASE("window query returns the best tour inside the window") {
    std::mt19937_64 rng(73);
    for (int rep = 0; rep < 25; ++rep) {
        const auto pts = random_points(8, rng);
        const auto tours = oracles::enumerate_all_tours(pts);
        const double best = tours.front().length;

        // second-best distinct tour
        const auto second = solve_etsp_window({pts, best + 1e-9, 1e18});
        REQUIRE(second.has_value());
        CHECK(second->length == tours[1].length);
        CHECK(second->sequence == tours[1].sequence);

        // a window strictly between two consecutive lengths is empty
        for (size_t i = 0; i + 1 < tours.size() && i < 5; ++i) {
            if (tours[i + 1].length - tours[i].length < 1e-6) continue;
            const double lo = tours[i].length + 1e-9;
            const double hi = tours[i + 1].length - 1e-9;
            if (lo >= hi) continue;
            CHECK(!solve_etsp_window({pts, lo, hi}).has_value());
        }

        // inclusive upper bound admits the boundary tour
        const auto at_upper = solve_etsp_window({pts, best - 1.0, best});
        REQUIRE(at_upper.has_value());
        CHECK(at_upper->length == best);
    }
}

TEST_CASE("successive windows enumerate distinct tours in order") {
    std::mt19937_64 rng(79);
    const auto pts = random_points(7, rng);
    const auto tours = oracles::enumerate_all_tours(pts);

    double lower = 0.0;
    std::vector<std::vector<int>> seen;
    for (size_t i = 0; i < 10 && i < tours.size(); ++i) {
        const auto next = solve_etsp_window({pts, lower, 1e18});
        REQUIRE(next.has_value());
        CHECK(next->length == tours[i].length);
        CHECK(next->sequence == tours[i].sequence);
        for (const auto& s : seen) CHECK(s != next->sequence);
        seen.push_back(next->sequence);
        lower = next->length + 1e-12 * next->length;
    }
}

TEST_CASE("branch and bound agrees with enumeration at ten points") {
    std::mt19937_64 rng(83);
    for (int rep = 0; rep < 5; ++rep) {
        const auto pts = random_points(10, rng);
        const auto tours = oracles::enumerate_all_tours(pts);
        const EtspSolution got = solve_etsp(pts);
        CHECK(got.length == tours.front().length);
        CHECK(got.sequence == tours.front().sequence);

        const auto second = solve_etsp_window({pts, got.length + 1e-9, 1e18});
        REQUIRE(second.has_value());
        CHECK(second->length == tours[1].length);
        CHECK(second->sequence == tours[1].sequence);
    }
}

TEST_CASE("size limits and window validation") {
    std::mt19937_64 rng(89);
    const auto too_many = random_points(kEtspExactLimit + 1, rng);
    CHECK_THROWS_AS(solve_etsp(too_many), TooLarge);
    const auto pts = random_points(5, rng);
    CHECK_THROWS_AS(solve_etsp_window({pts, 5.0, 5.0}), std::invalid_argument);
}
