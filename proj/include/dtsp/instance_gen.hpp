#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dtsp/instance.hpp"

namespace dtsp {

/// Parameters for sampling a point set with a hard minimum separation,
/// uniformly over the admissible configurations.
struct GenSpec {
    int n = 9;
    double box_side = 12.0;
    double min_separation = 4.0;
    double rho = 1.0;
    std::uint64_t seed = 0;
    int burn_in = 10000;  // sweeps before the first sample
    int thinning = 100;   // sweeps between consecutive samples
};

/// Markov chain over hard-core point configurations in a square box:
/// single-point uniform displacement proposals of half the separation,
/// accepted whenever the constraints still hold. Construction places an
/// initial configuration by dart throwing and runs the burn-in sweeps.
class HardCoreSampler {
  public:
    explicit HardCoreSampler(const GenSpec& spec);

    /// Current configuration as an Instance (copies the state).
    Instance current() const;

    /// Advances `thinning` sweeps and returns the new state.
    Instance next();

    const GenSpec& spec() const { return spec_; }

  private:
    void sweep();
    bool valid_position(Vec2 p, int except) const;

    GenSpec spec_;
    std::mt19937_64 rng_;
    std::vector<Vec2> state_;
};

/// Validates the spec (packing feasibility, separation >= 4*rho), runs the
/// chain for burn_in sweeps and returns the resulting instance.
/// Deterministic for a fixed spec including its seed.
///
/// Throws Infeasible when the box cannot hold n points at the separation,
/// MixingFailure when no valid initial configuration is found.
Instance generate(const GenSpec& spec);

/// Throws Infeasible/MixingFailure like generate; use to validate a spec.
void validate_spec(const GenSpec& spec);

/// Rescaled specs: for each scale s, separation becomes s*rho and the box
/// grows proportionally from the base spec's separation-to-box ratio.
std::vector<GenSpec> scale_sweep(const GenSpec& base, const std::vector<double>& scales);

}  // namespace dtsp
