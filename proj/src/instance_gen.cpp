#include "dtsp/instance_gen.hpp"

#include <cmath>
#include <string>

#include "dtsp/errors.hpp"

namespace dtsp {

namespace {

constexpr long kDartBudget = 1000000;

}  // namespace

void validate_spec(const GenSpec& spec) {
    if (spec.n < 1) throw Infeasible("need at least one point");
    if (!(spec.box_side > 0.0)) throw Infeasible("box side must be positive");
    if (!(spec.rho > 0.0)) throw Infeasible("rho must be positive");
    if (spec.min_separation < 4.0 * spec.rho)
        throw Infeasible("min separation " + std::to_string(spec.min_separation) +
                         " is below the long-path requirement 4*rho = " +
                         std::to_string(4.0 * spec.rho));
    // A grid at exactly the separation distance is achievable, so this screen
    // never rejects a spec it could serve; denser packings are rejected to
    // keep the chain from stalling.
    const int per_axis = static_cast<int>(std::floor(spec.box_side / spec.min_separation)) + 1;
    if (static_cast<long>(spec.n) > static_cast<long>(per_axis) * per_axis)
        throw Infeasible("cannot pack " + std::to_string(spec.n) + " points at separation " +
                         std::to_string(spec.min_separation) + " in a box of side " +
                         std::to_string(spec.box_side));
    if (spec.burn_in < 0 || spec.thinning < 0) throw Infeasible("chain counts must be nonnegative");
}

HardCoreSampler::HardCoreSampler(const GenSpec& spec) : spec_(spec), rng_(spec.seed) {
    validate_spec(spec);
    std::uniform_real_distribution<double> coord(0.0, spec_.box_side);
    state_.reserve(static_cast<size_t>(spec_.n));
    // Dart throwing with whole-configuration restarts: a partial placement
    // can wedge at packing-limit densities.
    long darts = 0;
    const int per_point_tries = 200;
    for (;;) {
        state_.clear();
        bool wedged = false;
        while (static_cast<int>(state_.size()) < spec_.n) {
            bool placed = false;
            for (int attempt = 0; attempt < per_point_tries; ++attempt) {
                if (++darts > kDartBudget)
                    throw MixingFailure("no valid initial configuration within " +
                                        std::to_string(kDartBudget) + " placement attempts");
                const Vec2 p{coord(rng_), coord(rng_)};
                if (valid_position(p, -1)) {
                    state_.push_back(p);
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                wedged = true;
                break;
            }
        }
        if (!wedged) break;
    }
    for (int s = 0; s < spec_.burn_in; ++s) sweep();
}

bool HardCoreSampler::valid_position(Vec2 p, int except) const {
    if (p.x < 0.0 || p.x > spec_.box_side || p.y < 0.0 || p.y > spec_.box_side) return false;
    for (int i = 0; i < static_cast<int>(state_.size()); ++i) {
        if (i == except) continue;
        if (distance(state_[static_cast<size_t>(i)], p) < spec_.min_separation) return false;
    }
    return true;
}

void HardCoreSampler::sweep() {
    const double step = 0.5 * spec_.min_separation;
    std::uniform_real_distribution<double> delta(-step, step);
    for (int i = 0; i < spec_.n; ++i) {
        const Vec2 proposal = state_[static_cast<size_t>(i)] + Vec2{delta(rng_), delta(rng_)};
        // Uniform target over valid configurations: the acceptance ratio is 1
        // whenever the proposal keeps the constraints, 0 otherwise.
        if (valid_position(proposal, i)) state_[static_cast<size_t>(i)] = proposal;
    }
}

Instance HardCoreSampler::current() const {
    return Instance{state_, spec_.rho, spec_.box_side};
}

Instance HardCoreSampler::next() {
    for (int s = 0; s < spec_.thinning; ++s) sweep();
    return current();
}

Instance generate(const GenSpec& spec) {
    return HardCoreSampler(spec).current();
}

std::vector<GenSpec> scale_sweep(const GenSpec& base, const std::vector<double>& scales) {
    const double base_scale = base.min_separation / base.rho;
    std::vector<GenSpec> specs;
    specs.reserve(scales.size());
    for (double s : scales) {
        GenSpec spec = base;
        spec.min_separation = s * base.rho;
        spec.box_side = base.box_side * s / base_scale;
        specs.push_back(spec);
    }
    return specs;
}

}  // namespace dtsp
