#include <doctest.h>

#include <cmath>
#include <random>

#include "dtsp/dubins.hpp"
#include "dtsp/errors.hpp"
#include "oracles.hpp"

using namespace dtsp;

namespace {

DirectedPoint dp(double x, double y, double theta) { return {{x, y}, theta}; }

// Random directed pair with long-path separation, rho = 1.
std::pair<DirectedPoint, DirectedPoint> random_pair(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coord(-20.0, 20.0);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (;;) {
        const DirectedPoint a{{coord(rng), coord(rng)}, angle(rng)};
        const DirectedPoint b{{coord(rng), coord(rng)}, angle(rng)};
        if (distance(a.position, b.position) >= 4.0) return {a, b};
    }
}

}  // namespace

TEST_CASE("collinear aligned headings reduce to a straight segment") {
    const DubinsPath p = csc_path(dp(0, 0, 0), dp(10, 0, 0), 1.0);
    CHECK(p.arc1_angle == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(p.arc2_angle == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(p.straight_length == doctest::Approx(10.0));
    CHECK(p.total_length == doctest::Approx(10.0));
    CHECK((p.subtype == CscType::LSL || p.subtype == CscType::RSR));
}

TEST_CASE("opposed headings match the independent candidate oracle") {
    const DirectedPoint from = dp(0, 0, 0);
    const DirectedPoint to = dp(10, 0, kPi);
    const DubinsPath p = csc_path(from, to, 1.0);
    const double expect = oracles::csc_min_length(from, to, 1.0);
    CHECK(p.total_length == doctest::Approx(expect).epsilon(1e-12));
    // Mirror symmetry across the x axis pairs LSR with RSL at equal length
    // and identical arc angles.
    const auto cands = csc_candidates(from, to, 1.0);
    const auto& lsr = cands[static_cast<size_t>(CscType::LSR)];
    const auto& rsl = cands[static_cast<size_t>(CscType::RSL)];
    REQUIRE(lsr.has_value());
    REQUIRE(rsl.has_value());
    CHECK(lsr->total_length == doctest::Approx(rsl->total_length).epsilon(1e-12));
    CHECK(lsr->arc1_angle == doctest::Approx(rsl->arc1_angle).epsilon(1e-9));
    CHECK(lsr->arc2_angle == doctest::Approx(rsl->arc2_angle).epsilon(1e-9));

    const DirectedPoint end =
        oracles::roll_csc(from, p.subtype, p.arc1_angle, p.straight_length, p.arc2_angle, 1.0);
    CHECK(end.position.x == doctest::Approx(to.position.x).epsilon(1e-9));
    CHECK(end.position.y == doctest::Approx(to.position.y).epsilon(1e-9));
    CHECK(normalize_angle(end.heading - to.heading) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("mirror symmetry swaps L and R at equal length") {
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 200; ++rep) {
        const auto [a, b] = random_pair(rng);
        const DubinsPath p = csc_path(a, b, 1.0);
        const DirectedPoint am{{a.position.x, -a.position.y}, -a.heading};
        const DirectedPoint bm{{b.position.x, -b.position.y}, -b.heading};
        const DubinsPath q = csc_path(am, bm, 1.0);
        CHECK(q.total_length == doctest::Approx(p.total_length).epsilon(1e-9));
        const auto mirrored = [](CscType t) {
            switch (t) {
                case CscType::LSL: return CscType::RSR;
                case CscType::LSR: return CscType::RSL;
                case CscType::RSL: return CscType::LSR;
                case CscType::RSR: return CscType::LSL;
            }
            return CscType::LSL;
        };
        // Equal-length mirror pairs may resolve to either tag; lengths decide.
        if (p.subtype != mirrored(q.subtype)) {
            const auto cands = csc_candidates(am, bm, 1.0);
            const auto& same = cands[static_cast<size_t>(mirrored(p.subtype))];
            REQUIRE(same.has_value());
            CHECK(same->total_length == doctest::Approx(q.total_length).epsilon(1e-9));
        }
    }
}

TEST_CASE("four-subtype optimality and proposition-1 shape on random pairs") {
    std::mt19937_64 rng(7);
    int arcs_below_pi_are_strict_min = 0;
    for (int rep = 0; rep < 10000; ++rep) {
        const auto [a, b] = random_pair(rng);
        const DubinsPath p = csc_path(a, b, 1.0);

        const auto lengths = oracles::csc_candidate_lengths(a, b, 1.0);
        int feasible = 0;
        for (double len : lengths) {
            if (std::isnan(len)) continue;
            ++feasible;
            CHECK(p.total_length <= len * (1.0 + 1e-12) + 1e-12);
        }
        CHECK(feasible == 4);  // all four exist in the long-path case

        CHECK(p.total_length >= distance(a.position, b.position) - 1e-9);

        if (!p.arc_limit_exceeded) {
            ++arcs_below_pi_are_strict_min;
            for (size_t i = 0; i < lengths.size(); ++i) {
                if (static_cast<CscType>(i) == p.subtype || std::isnan(lengths[i])) continue;
                CHECK(p.total_length < lengths[i] + 1e-9);
            }
        }
    }
    // the long-path separation makes sub-pi arcs the overwhelming outcome
    CHECK(arcs_below_pi_are_strict_min > 9000);
}

TEST_CASE("returned segment data reconstructs the endpoint pose") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 2000; ++rep) {
        const auto [a, b] = random_pair(rng);
        const DubinsPath p = csc_path(a, b, 1.0);
        const DirectedPoint end =
            oracles::roll_csc(a, p.subtype, p.arc1_angle, p.straight_length, p.arc2_angle, 1.0);
        CHECK(distance(end.position, b.position) < 1e-8);
        CHECK(std::abs(normalize_angle(end.heading - b.heading)) < 1e-9);

        // invariants of the decomposition
        CHECK(p.total_length ==
              doctest::Approx(p.arc1_angle + p.straight_length + p.arc2_angle).epsilon(1e-12));
        CHECK(distance(p.t1, p.c1) == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(distance(p.t2, p.c2) == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(std::abs(dot(p.t1 - p.c1, p.straight_dir())) < 1e-9);
        CHECK(std::abs(dot(p.t2 - p.c2, p.straight_dir())) < 1e-9);
        CHECK(distance(p.t1, p.t2) == doctest::Approx(p.straight_length).epsilon(1e-9));
    }
}

TEST_CASE("length is continuous under small heading perturbations") {
    std::mt19937_64 rng(13);
    const double delta = 1e-6;
    for (int rep = 0; rep < 500; ++rep) {
        auto [a, b] = random_pair(rng);
        const double base = csc_path(a, b, 1.0).total_length;
        const DirectedPoint a2{a.position, a.heading + delta};
        const DirectedPoint b2{b.position, b.heading + delta};
        CHECK(std::abs(csc_path(a2, b, 1.0).total_length - base) < 50.0 * delta);
        CHECK(std::abs(csc_path(a, b2, 1.0).total_length - base) < 50.0 * delta);
    }
}

TEST_CASE("separation below 4 rho is rejected") {
    CHECK_THROWS_AS(csc_path(dp(0, 0, 0), dp(3.9, 0, 0), 1.0), SeparationTooSmall);
    CHECK_THROWS_AS(cs_path(dp(0, 0, 0), {3.9, 0}, 1.0), SeparationTooSmall);
    CHECK_NOTHROW(csc_path(dp(0, 0, 0), dp(4.0, 0, 0), 1.0));
}

TEST_CASE("subtype ties break toward the smaller tag") {
    // aligned collinear: LSL and RSR tie at the straight segment
    const DubinsPath p = csc_path(dp(0, 0, 0), dp(10, 0, 0), 1.0);
    CHECK(p.subtype == CscType::LSL);
}

TEST_CASE("cs path: straight-ahead target needs no arc") {
    const CSPath p = cs_path(dp(0, 0, 0), {10, 0}, 1.0);
    CHECK(p.arc_angle == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(p.straight_length == doctest::Approx(10.0));
    CHECK(p.total_length == doctest::Approx(10.0));
}

TEST_CASE("cs path: perpendicular start matches the enumeration oracle") {
    const DirectedPoint from = dp(0, 0, kPi / 2.0);
    const CSPath p = cs_path(from, {10, 0}, 1.0);
    const auto cands = oracles::cs_candidate_lengths(from, {10, 0}, 1.0);
    const double expect = std::min(cands[0], cands[1]);
    CHECK(p.total_length == doctest::Approx(expect).epsilon(1e-12));
    CHECK(p.subtype == CSPath::Type::RS);
    CHECK(p.arc_angle < kPi);

    // the tangent point lies on the turning circle and the straight segment
    // reaches the target
    const Vec2 centre{from.position.x + std::sin(from.heading),
                      from.position.y - std::cos(from.heading)};
    CHECK(distance(p.t, centre) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(distance(p.t, {10, 0}) == doctest::Approx(p.straight_length).epsilon(1e-9));
}

TEST_CASE("cs path: mirror across the heading line swaps LS and RS") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> coord(-15.0, 15.0);
    for (int rep = 0; rep < 200; ++rep) {
        const Vec2 target{coord(rng), coord(rng)};
        if (norm(target) < 4.0) continue;
        // heading along +x from the origin: mirroring the target across the
        // x axis swaps the turn side at equal length
        const CSPath p = cs_path(dp(0, 0, 0), target, 1.0);
        const CSPath q = cs_path(dp(0, 0, 0), {target.x, -target.y}, 1.0);
        CHECK(p.total_length == doctest::Approx(q.total_length).epsilon(1e-9));
        if (std::abs(target.y) > 1e-9) CHECK(p.subtype != q.subtype);
        // the sub-pi arc guarantee covers targets ahead of the heading; a
        // target behind forces a reversal and raises the diagnostic flag
        if (target.x >= 0.0) {
            CHECK(p.arc_angle < kPi);
            CHECK(!p.arc_limit_exceeded);
        } else {
            CHECK(p.arc_limit_exceeded == (p.arc_angle >= kPi));
        }
    }
}

TEST_CASE("sampling endpoints and spacing") {
    const DubinsPath straight = csc_path(dp(0, 0, 0), dp(10, 0, 0), 1.0);
    const auto three = sample_path(straight, 3);
    REQUIRE(three.size() == 3);
    CHECK(distance(three[0], {0, 0}) < 1e-12);
    CHECK(distance(three[1], {5, 0}) < 1e-9);
    CHECK(distance(three[2], {10, 0}) < 1e-12);

    std::mt19937_64 rng(19);
    for (int rep = 0; rep < 50; ++rep) {
        const auto [a, b] = random_pair(rng);
        const DubinsPath p = csc_path(a, b, 1.0);
        const auto two = sample_path(p, 2);
        REQUIRE(two.size() == 2);
        CHECK(distance(two[0], a.position) < 1e-9);
        CHECK(distance(two[1], b.position) < 1e-9);
    }
}

TEST_CASE("chord sum of a dense quarter-circle sample approaches the arc length") {
    DubinsPath arc;
    arc.subtype = CscType::LSL;
    arc.arc1_angle = kPi / 2.0;
    arc.straight_length = 0.0;
    arc.arc2_angle = 0.0;
    arc.start = dp(0, 0, 0);
    arc.rho = 1.0;
    arc.c1 = {0, 1};
    arc.c2 = {0, 1};
    arc.t1 = {1, 1};
    arc.t2 = {1, 1};
    arc.straight_heading = kPi / 2.0;
    arc.total_length = kPi / 2.0;

    const auto pts = sample_path(arc, 101);
    double chord_total = 0.0;
    for (size_t i = 1; i < pts.size(); ++i) chord_total += distance(pts[i - 1], pts[i]);
    CHECK(std::abs(chord_total - kPi / 2.0) < 1e-4);
    CHECK(distance(pts.back(), {1, 1}) < 1e-12);

    // arc embedded in a full construction: chords still converge
    const CSPath p = cs_path(dp(0, 0, 0), {1.0, 4.9}, 1.0);
    REQUIRE(p.arc_angle > 0.1);
    const auto pts2 = sample_path(p, 101);
    double chord2 = 0.0;
    for (size_t i = 1; i < pts2.size(); ++i) chord2 += distance(pts2[i - 1], pts2[i]);
    CHECK(std::abs(chord2 - p.total_length) < 1e-4 * p.total_length);
}
