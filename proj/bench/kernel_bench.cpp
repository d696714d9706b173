// Compares the OpenMP edge/torque kernels against the serial reference over
// growing instance sizes and reports per-call timings.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <vector>

#include "dtsp/instance_gen.hpp"
#include "dtsp/tour.hpp"

using namespace dtsp;

namespace {

Instance make_instance(int n, std::uint64_t seed) {
    GenSpec spec;
    spec.n = n;
    spec.min_separation = 4.0;
    spec.rho = 1.0;
    spec.box_side = 1.5 * spec.min_separation * std::sqrt(static_cast<double>(n));
    spec.seed = seed;
    spec.burn_in = 50;
    return generate(spec);
}

TourConfig make_config(const Instance& instance, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    TourConfig config;
    config.sequence.resize(static_cast<size_t>(instance.size()));
    std::iota(config.sequence.begin(), config.sequence.end(), 0);
    std::shuffle(config.sequence.begin(), config.sequence.end(), rng);
    config.angles = seed_angles(instance, config.sequence);
    return config;
}

template <typename F>
double time_per_call_us(F&& f, int min_reps) {
    using clock = std::chrono::steady_clock;
    // Warm up, then repeat until the measurement spans at least 20 ms.
    f();
    int reps = min_reps;
    for (;;) {
        const auto start = clock::now();
        for (int r = 0; r < reps; ++r) f();
        const double us =
            std::chrono::duration<double, std::micro>(clock::now() - start).count();
        if (us >= 20000.0 || reps >= (1 << 22)) return us / reps;
        reps *= 4;
    }
}

}  // namespace

int main() {
    std::printf("%8s %14s %14s %10s %8s\n", "n", "serial_us", "parallel_us", "speedup",
                "match");
    for (int n : {10, 20, 40, 80, 160, 320}) {
        const Instance instance = make_instance(n, 7u + static_cast<std::uint64_t>(n));
        const TourConfig config = make_config(instance, 11u);

        const TourEvaluation serial = evaluate_reference(instance, config);
        const TourEvaluation parallel = evaluate(instance, config);
        bool match = serial.length == parallel.length && serial.max_arc == parallel.max_arc;
        for (size_t i = 0; match && i < serial.torques.size(); ++i)
            match = serial.torques[i] == parallel.torques[i];

        const double t_serial =
            time_per_call_us([&] { (void)evaluate_reference(instance, config); }, 4);
        const double t_parallel = time_per_call_us([&] { (void)evaluate(instance, config); }, 4);

        std::printf("%8d %14.2f %14.2f %9.2fx %8s\n", n, t_serial, t_parallel,
                    t_serial / t_parallel, match ? "exact" : "DIFFER");
    }
    return 0;
}
