#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dtsp/dtsp.hpp"
#include "dtsp/instance_gen.hpp"

namespace dtsp {

struct SweepSpec {
    std::vector<double> scales;
    int instances_per_scale = 50;
    GenSpec base;  // scaled per scale_sweep; base.seed mixes with indices
    DtspSettings solver;
};

struct SweepRow {
    double scale = 0.0;
    int instances = 0;
    int failures = 0;
    double mean_sequences_explored = 0.0;
    double stderr_sequences_explored = 0.0;
    double mean_seed_pct_error = 0.0;
    double stderr_seed_pct_error = 0.0;
    double mean_first_iter_pct_error = 0.0;
    double stderr_first_iter_pct_error = 0.0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    /// Per-instance records for statistics beyond the row aggregates:
    /// indexed [scale][instance].
    struct Sample {
        bool ok = false;
        int sequences_explored = 0;
        double seed_pct_error = 0.0;
        double first_iter_pct_error = 0.0;
    };
    std::vector<std::vector<Sample>> samples;
};

/// Generates instances_per_scale instances per scale (each from its own
/// deterministically derived chain seed), solves them, and aggregates the
/// sequences-explored and seed-quality statistics. Instances are solved
/// concurrently; results merge by (scale, instance) index, so the output is
/// independent of scheduling.
SweepResult run_sweep(const SweepSpec& spec);

/// CSV rendering of the aggregate rows (header + one line per scale).
std::string sweep_csv(const SweepResult& result);

/// Chain seed for one (sweep seed, scale index, instance index) cell.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t scale_index,
                          std::uint64_t instance_index);

}  // namespace dtsp
