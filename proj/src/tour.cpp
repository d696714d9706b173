#include "dtsp/tour.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dtsp/errors.hpp"

namespace dtsp {

namespace {

// Below this size a parallel region costs more than the edges themselves.
constexpr int kParallelThreshold = 32;

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

template <bool Parallel>
TourEvaluation evaluate_impl(const Instance& instance, const TourConfig& config) {
    validate_config(instance, config);
    const int n = instance.size();
    const auto& seq = config.sequence;

    TourEvaluation ev;
    ev.edges.resize(static_cast<size_t>(n));

    // Exceptions may not cross a parallel region; collect and rethrow.
    bool edge_failed = false;
#pragma omp parallel for schedule(static) if (Parallel)
    for (int k = 0; k < n; ++k) {
        const int a = seq[static_cast<size_t>(k)];
        const int b = seq[static_cast<size_t>((k + 1) % n)];
        const DirectedPoint from{instance.points[static_cast<size_t>(a)],
                                 config.angles[static_cast<size_t>(a)]};
        const DirectedPoint to{instance.points[static_cast<size_t>(b)],
                               config.angles[static_cast<size_t>(b)]};
        try {
            ev.edges[static_cast<size_t>(k)] = csc_path(from, to, instance.rho);
        } catch (const SolverError&) {
            edge_failed = true;
        }
    }
    if (edge_failed)
        throw SeparationTooSmall("a tour edge violates the 4*rho separation requirement");

    ev.torques.assign(static_cast<size_t>(n), 0.0);
#pragma omp parallel for schedule(static) if (Parallel)
    for (int k = 0; k < n; ++k) {
        const int p = seq[static_cast<size_t>(k)];
        const DubinsPath& in = ev.edges[static_cast<size_t>((k + n - 1) % n)];
        const DubinsPath& out = ev.edges[static_cast<size_t>(k)];
        const Vec2 x = instance.points[static_cast<size_t>(p)];
        const Vec2 r_in = in.t2 - x;    // incoming tangent point
        const Vec2 r_out = out.t1 - x;  // outgoing tangent point
        ev.torques[static_cast<size_t>(p)] =
            cross(r_out, out.straight_dir()) - cross(r_in, in.straight_dir());
    }

    // Fixed-order reductions keep parallel and serial results bit-identical.
    ev.length = 0.0;
    ev.max_arc = 0.0;
    for (const auto& e : ev.edges) {
        ev.length += e.total_length;
        ev.max_arc = std::max({ev.max_arc, e.arc1_angle, e.arc2_angle});
    }
    if (ev.max_arc < kPi) ev.gap_bound = gap_bound_value(n, norm2(ev.torques));
    return ev;
}

}  // namespace

void validate_config(const Instance& instance, const TourConfig& config) {
    // Shape checks only (O(n)); the quadratic pairwise-separation check runs
    // once at instance load or descent entry, and each edge construction
    // still enforces its own separation precondition.
    const int n = instance.size();
    if (n < 3)
        throw SeparationTooSmall("a tour instance needs at least 3 points, got " +
                                 std::to_string(n));
    if (static_cast<int>(config.sequence.size()) != n)
        throw SeparationTooSmall("sequence length " + std::to_string(config.sequence.size()) +
                                 " does not match instance size " + std::to_string(n));
    if (static_cast<int>(config.angles.size()) != n)
        throw SeparationTooSmall("angles length " + std::to_string(config.angles.size()) +
                                 " does not match instance size " + std::to_string(n));
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int idx : config.sequence) {
        if (idx < 0 || idx >= n || seen[static_cast<size_t>(idx)])
            throw SeparationTooSmall("sequence is not a permutation of 0.." +
                                     std::to_string(n - 1));
        seen[static_cast<size_t>(idx)] = true;
    }
    for (double a : config.angles)
        if (!std::isfinite(a)) throw SeparationTooSmall("heading angles must be finite");
}

TourEvaluation evaluate(const Instance& instance, const TourConfig& config) {
    // Entering a parallel region costs more than a handful of edges; small
    // tours take the serial instantiation outright.
    if (instance.size() < kParallelThreshold) return evaluate_impl<false>(instance, config);
    return evaluate_impl<true>(instance, config);
}

TourEvaluation evaluate_reference(const Instance& instance, const TourConfig& config) {
    return evaluate_impl<false>(instance, config);
}

std::vector<double> gradient(const Instance& instance, const TourConfig& config) {
    const TourEvaluation ev = evaluate(instance, config);
    std::vector<double> g(ev.torques.size());
    for (size_t i = 0; i < g.size(); ++i) g[i] = -ev.torques[i];
    return g;
}

std::vector<double> seed_angles(const Instance& instance, const std::vector<int>& sequence) {
    const int n = instance.size();
    std::vector<double> angles(static_cast<size_t>(n), 0.0);
    for (int k = 0; k < n; ++k) {
        const int p = sequence[static_cast<size_t>(k)];
        const int prev = sequence[static_cast<size_t>((k + n - 1) % n)];
        const int next = sequence[static_cast<size_t>((k + 1) % n)];
        const Vec2 e_in = unit(instance.points[static_cast<size_t>(p)] -
                               instance.points[static_cast<size_t>(prev)]);
        const Vec2 e_out = unit(instance.points[static_cast<size_t>(next)] -
                                instance.points[static_cast<size_t>(p)]);
        const Vec2 v = e_in + e_out;
        if (norm(v) < 1e-12) {
            // Exact reversal: the limit direction is undefined; any transverse
            // heading lets descent proceed.
            angles[static_cast<size_t>(p)] = normalize_angle(angle_of(e_out) + kPi / 2.0);
        } else {
            angles[static_cast<size_t>(p)] = angle_of(v);
        }
    }
    return angles;
}

double gap_bound_value(int n, double grad_norm) {
    return 2.0 * std::sqrt(static_cast<double>(n)) * kPi * grad_norm;
}

std::vector<Vec2> position_gradient(const Instance& instance, const TourConfig& config) {
    const TourEvaluation ev = evaluate(instance, config);
    const int n = instance.size();
    std::vector<Vec2> g(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        const int p = config.sequence[static_cast<size_t>(k)];
        const DubinsPath& in = ev.edges[static_cast<size_t>((k + n - 1) % n)];
        const DubinsPath& out = ev.edges[static_cast<size_t>(k)];
        g[static_cast<size_t>(p)] = in.straight_dir() - out.straight_dir();
    }
    return g;
}

double project_velocity(Vec2 grad_component, Vec2 constraint_direction) {
    if (std::abs(norm(constraint_direction) - 1.0) > 1e-9)
        throw NotUnit("constraint direction has norm " +
                      std::to_string(norm(constraint_direction)));
    return dot(grad_component, constraint_direction);
}

DescentResult gradient_descent(const Instance& instance, const std::vector<int>& sequence,
                               const DescentSettings& settings) {
    instance.validate_for_tour();
    const int n = instance.size();
    DescentResult res;
    res.config.sequence = sequence;
    res.config.angles = settings.initial_angles ? *settings.initial_angles
                                                : seed_angles(instance, sequence);
    validate_config(instance, res.config);

    const double inv_rho = 1.0 / instance.rho;
    auto grad_ok = [&](double grad_norm, double length) {
        if (settings.epsilon) return grad_norm <= *settings.epsilon;
        return gap_bound_value(n, grad_norm) <= 1e-3 * length;
    };

    TourEvaluation ev = evaluate(instance, res.config);
    double grad_norm = norm2(ev.torques);
    res.trace.push_back({ev.length, grad_norm, ev.gap_bound});

    std::vector<double> angles = res.config.angles;  // unwrapped working copy
    std::vector<double> trial(angles.size());

    while (res.iterations < settings.max_iters) {
        if (grad_ok(grad_norm, ev.length)) {
            res.converged = true;
            break;
        }

        if (settings.policy == DescentSettings::Policy::FixedAlpha) {
            for (size_t i = 0; i < angles.size(); ++i)
                angles[i] += settings.alpha0 * ev.torques[i] * inv_rho;
            res.config.angles = angles;
            ev = evaluate(instance, res.config);
        } else {
            double alpha = settings.alpha0;
            bool accepted = false;
            TourEvaluation trial_ev;
            for (int halvings = 0; halvings < 60; ++halvings) {
                for (size_t i = 0; i < angles.size(); ++i)
                    trial[i] = angles[i] + alpha * ev.torques[i] * inv_rho;
                res.config.angles = trial;
                trial_ev = evaluate(instance, res.config);
                if (trial_ev.length < ev.length) {
                    accepted = true;
                    break;
                }
                alpha *= 0.5;
            }
            if (!accepted) {
                res.stalled = true;
                res.config.angles = angles;
                break;
            }
            angles = trial;
            ev = std::move(trial_ev);
        }

        grad_norm = norm2(ev.torques);
        ++res.iterations;
        res.trace.push_back({ev.length, grad_norm, ev.gap_bound});
        if (grad_ok(grad_norm, ev.length)) {
            res.converged = true;
            break;
        }
    }

    for (double& a : res.config.angles) a = normalize_angle(a);
    res.eval = evaluate(instance, res.config);
    return res;
}

}  // namespace dtsp
