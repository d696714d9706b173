#include "dtsp/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "dtsp/errors.hpp"

namespace dtsp {

namespace {

double pct_error(double value, double reference) {
    return 100.0 * (value - reference) / reference;
}

struct Stats {
    double mean = 0.0;
    double stderr_mean = 0.0;
};

Stats mean_stderr(const std::vector<double>& xs) {
    Stats s;
    if (xs.empty()) return s;
    double sum = 0.0;
    for (double x : xs) sum += x;
    s.mean = sum / static_cast<double>(xs.size());
    if (xs.size() < 2) return s;
    double ss = 0.0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    const double var = ss / static_cast<double>(xs.size() - 1);
    s.stderr_mean = std::sqrt(var / static_cast<double>(xs.size()));
    return s;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t scale_index,
                          std::uint64_t instance_index) {
    // splitmix64 over the packed cell coordinates
    std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (scale_index * 1000003ull + instance_index + 1ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

SweepResult run_sweep(const SweepSpec& spec) {
    const auto specs = scale_sweep(spec.base, spec.scales);
    const int n_scales = static_cast<int>(specs.size());
    const int per = spec.instances_per_scale;

    SweepResult result;
    result.samples.assign(static_cast<size_t>(n_scales),
                          std::vector<SweepResult::Sample>(static_cast<size_t>(per)));

    const int total = n_scales * per;
#pragma omp parallel for schedule(dynamic)
    for (int cell = 0; cell < total; ++cell) {
        const int si = cell / per;
        const int ii = cell % per;
        GenSpec gen = specs[static_cast<size_t>(si)];
        gen.seed = derive_seed(spec.base.seed, static_cast<std::uint64_t>(si),
                               static_cast<std::uint64_t>(ii));
        SweepResult::Sample sample;
        try {
            const Instance instance = generate(gen);
            const DtspResult sol = solve_dtsp(instance, spec.solver);
            const auto& winner = *std::min_element(
                sol.per_sequence.begin(), sol.per_sequence.end(),
                [](const SequenceRecord& a, const SequenceRecord& b) {
                    return a.converged_length < b.converged_length;
                });
            sample.ok = true;
            sample.sequences_explored = sol.sequences_explored;
            sample.seed_pct_error = pct_error(winner.seed_length, winner.converged_length);
            sample.first_iter_pct_error =
                pct_error(winner.first_iter_length, winner.converged_length);
        } catch (const SolverError&) {
            sample.ok = false;
        }
        result.samples[static_cast<size_t>(si)][static_cast<size_t>(ii)] = sample;
    }

    for (int si = 0; si < n_scales; ++si) {
        SweepRow row;
        row.scale = spec.scales[static_cast<size_t>(si)];
        std::vector<double> seqs, seed_err, first_err;
        for (const auto& s : result.samples[static_cast<size_t>(si)]) {
            if (!s.ok) {
                ++row.failures;
                continue;
            }
            seqs.push_back(static_cast<double>(s.sequences_explored));
            seed_err.push_back(s.seed_pct_error);
            first_err.push_back(s.first_iter_pct_error);
        }
        row.instances = static_cast<int>(seqs.size());
        const Stats s1 = mean_stderr(seqs);
        const Stats s2 = mean_stderr(seed_err);
        const Stats s3 = mean_stderr(first_err);
        row.mean_sequences_explored = s1.mean;
        row.stderr_sequences_explored = s1.stderr_mean;
        row.mean_seed_pct_error = s2.mean;
        row.stderr_seed_pct_error = s2.stderr_mean;
        row.mean_first_iter_pct_error = s3.mean;
        row.stderr_first_iter_pct_error = s3.stderr_mean;
        result.rows.push_back(row);
    }
    return result;
}

std::string sweep_csv(const SweepResult& result) {
    std::string out =
        "scale,instances,failures,mean_sequences_explored,stderr_sequences_explored,"
        "mean_seed_pct_error,stderr_seed_pct_error,"
        "mean_first_iter_pct_error,stderr_first_iter_pct_error\n";
    char buf[320];
    for (const auto& r : result.rows) {
        std::snprintf(buf, sizeof buf, "%g,%d,%d,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g\n", r.scale,
                      r.instances, r.failures, r.mean_sequences_explored,
                      r.stderr_sequences_explored, r.mean_seed_pct_error, r.stderr_seed_pct_error,
                      r.mean_first_iter_pct_error, r.stderr_first_iter_pct_error);
        out += buf;
    }
    return out;
}

}  // namespace dtsp
