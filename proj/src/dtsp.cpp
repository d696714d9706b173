#include "dtsp/dtsp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dtsp/errors.hpp"

namespace dtsp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

std::vector<SharpTurn> find_sharp_turns(const Instance& instance,
                                        const std::vector<int>& sequence) {
    const int n = static_cast<int>(sequence.size());
    std::vector<SharpTurn> turns;
    for (int k = 0; k < n; ++k) {
        const int i = sequence[static_cast<size_t>(k)];
        const int j = sequence[static_cast<size_t>((k + 1) % n)];
        const int l = sequence[static_cast<size_t>((k + 2) % n)];
        const Vec2 xi = instance.points[static_cast<size_t>(i)];
        const Vec2 xj = instance.points[static_cast<size_t>(j)];
        const Vec2 xl = instance.points[static_cast<size_t>(l)];

        const Vec2 a = xi - xj;
        const Vec2 b = xl - xj;
        const double phi = std::acos(std::clamp(dot(a, b) / (norm(a) * norm(b)), -1.0, 1.0));
        if (phi > kPi / 2.0) continue;

        // Any of the three points close to the segment of the other two
        // witnesses the turn; record the nearest.
        const double di = point_segment_distance(xi, xj, xl);
        const double dj = point_segment_distance(xj, xi, xl);
        const double dl = point_segment_distance(xl, xi, xj);
        double best = di;
        int witness = i;
        if (dj < best) {
            best = dj;
            witness = j;
        }
        if (dl < best) {
            best = dl;
            witness = l;
        }
        if (best <= 4.0 * instance.rho) {
            turns.push_back({i, j, l, phi, best, witness});
        }
    }
    return turns;
}

FlipDescentResult descend_with_flips(const Instance& instance, const std::vector<int>& sequence,
                                     const DtspSettings& settings) {
    const auto turns = settings.flips_enabled ? find_sharp_turns(instance, sequence)
                                              : std::vector<SharpTurn>{};
    const int k = static_cast<int>(turns.size());
    if (k > settings.flip_cap)
        throw TooManyFlips("sequence has " + std::to_string(k) +
                           " sharp turns, above the flip cap " +
                           std::to_string(settings.flip_cap));

    const std::vector<double> base_seed = seed_angles(instance, sequence);

    FlipDescentResult result;
    result.sharp_turns = k;
    result.variants = 1 << k;

    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        DescentSettings ds = settings.descent;
        std::vector<double> start = base_seed;
        for (int bit = 0; bit < k; ++bit)
            if (mask & (1u << bit))
                start[static_cast<size_t>(turns[static_cast<size_t>(bit)].j)] += kPi;
        ds.initial_angles = start;
        DescentResult run = gradient_descent(instance, sequence, ds);
        if (mask == 0) {
            result.base_seed_length = run.trace.front().length;
            result.base_first_iter_length =
                run.trace.size() > 1 ? run.trace[1].length : run.trace.front().length;
        }
        if (mask == 0 || run.eval.length < result.best.eval.length) {
            result.winning_mask = mask;
            result.best = std::move(run);
        }
    }
    return result;
}

std::pair<TourConfig, double> alternating_tour(const Instance& instance,
                                               const EtspSolution& etsp) {
    instance.validate_for_tour();
    const int n = instance.size();
    const auto& seq = etsp.sequence;
    auto pt = [&](int k) { return instance.points[static_cast<size_t>(seq[static_cast<size_t>(k)])]; };

    TourConfig config;
    config.sequence = seq;
    config.angles.assign(static_cast<size_t>(n), 0.0);
    auto set_angle = [&](int k, double a) {
        config.angles[static_cast<size_t>(seq[static_cast<size_t>(k)])] = normalize_angle(a);
    };

    double length = 0.0;
    if (n % 2 == 0) {
        // Even: edges (0,1), (2,3), ... stay straight and fix every heading.
        for (int k = 0; k < n; k += 2) {
            const double heading = angle_of(pt(k + 1) - pt(k));
            set_angle(k, heading);
            set_angle(k + 1, heading);
            length += distance(pt(k), pt(k + 1));
        }
        for (int k = 1; k < n; k += 2) {
            const DirectedPoint from{pt(k), config.angles[static_cast<size_t>(
                                                seq[static_cast<size_t>(k)])]};
            const int nk = (k + 1) % n;
            const DirectedPoint to{pt(nk), config.angles[static_cast<size_t>(
                                               seq[static_cast<size_t>(nk)])]};
            length += csc_path(from, to, instance.rho).total_length;
        }
    } else {
        // Odd: edges (1,2), (3,4), ..., (n-2, n-1) stay straight, which fixes
        // every heading except the first point's; a CS closure from the last
        // point determines that one.
        for (int k = 1; k + 1 < n; k += 2) {
            const double heading = angle_of(pt(k + 1) - pt(k));
            set_angle(k, heading);
            set_angle(k + 1, heading);
            length += distance(pt(k), pt(k + 1));
        }
        const DirectedPoint last{pt(n - 1),
                                 config.angles[static_cast<size_t>(seq[static_cast<size_t>(n - 1)])]};
        const CSPath closure = cs_path(last, pt(0), instance.rho);
        set_angle(0, closure.straight_heading);
        length += closure.total_length;
        // The remaining edges (0,1), (2,3), ... are shortest curves between
        // now-directed endpoints.
        for (int k = 0; k + 1 < n; k += 2) {
            const DirectedPoint from{pt(k), config.angles[static_cast<size_t>(
                                                seq[static_cast<size_t>(k)])]};
            const DirectedPoint to{pt(k + 1), config.angles[static_cast<size_t>(
                                                  seq[static_cast<size_t>(k + 1)])]};
            length += csc_path(from, to, instance.rho).total_length;
        }
    }
    return {config, length};
}

DtspResult solve_dtsp(const Instance& instance, const DtspSettings& settings) {
    instance.validate_for_tour();

    DtspResult result;
    double window_low = 0.0;   // L_E: length of the last euclidean tour taken
    double window_high = kInf; // L_D: best curvature-constrained length so far
    double eps_abs = 0.0;      // fixed after the first solve

    while (true) {
        std::optional<EtspSolution> next;
        if (result.sequences_explored == 0) {
            next = solve_etsp(instance.points);
        } else {
            next = solve_etsp_window({instance.points, window_low + eps_abs, window_high});
        }
        if (!next) break;

        if (result.sequences_explored == 0) {
            result.etsp_length = next->length;
            result.crude_window_bound = (1.0 + kPi / instance.scale()) * next->length;
            eps_abs = settings.distinct_rel_eps * next->length;
        }

        FlipDescentResult run = descend_with_flips(instance, next->sequence, settings);

        SequenceRecord rec;
        rec.etsp = *next;
        rec.converged_length = run.best.eval.length;
        rec.gap_bound = run.best.eval.gap_bound;
        rec.sharp_turns = run.sharp_turns;
        rec.flip_variants = run.variants;
        rec.winning_flip_mask = run.winning_mask;
        rec.converged = run.best.converged;
        rec.iterations = run.best.iterations;
        rec.seed_length = run.base_seed_length;
        rec.first_iter_length = run.base_first_iter_length;
        result.per_sequence.push_back(rec);
        ++result.sequences_explored;

        if (run.best.eval.length < window_high) {
            window_high = run.best.eval.length;
            result.best_config = run.best.config;
            result.best_eval = run.best.eval;
        }
        window_low = next->length;
        if (!(window_low + eps_abs < window_high)) break;  // empty window
    }

    result.certificate = result.best_eval.gap_bound;
    return result;
}

}  // namespace dtsp
