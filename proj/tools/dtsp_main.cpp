#include <cmath>
#include <cstdio>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dtsp/dtsp.hpp"
#include "dtsp/errors.hpp"
#include "dtsp/instance_gen.hpp"
#include "dtsp/io.hpp"
#include "dtsp/svg.hpp"
#include "dtsp/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

struct SolveOptions {
    std::string instance_path;
    std::string output_path;
    std::string sequence_only;  // comma-separated 1-based indices
    bool seed_only = false;
    double alpha = 0.1;
    bool fixed_alpha = false;
    std::optional<double> epsilon;
    int max_iters = 10000;
    int flip_cap = 12;
    bool no_flips = false;
};

std::vector<int> parse_sequence_flag(const std::string& text, int n) {
    std::vector<int> seq;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        const int one_based = std::stoi(text.substr(pos, next - pos));
        if (one_based < 1 || one_based > n)
            throw std::runtime_error("sequence index " + std::to_string(one_based) +
                                     " outside 1.." + std::to_string(n));
        seq.push_back(one_based - 1);
        pos = next + 1;
    }
    return seq;
}

std::string settings_json(const dtsp::DtspSettings& s) {
    std::string eps = s.descent.epsilon ? dtsp::format_double(*s.descent.epsilon)
                                        : std::string("\"auto\"");
    return std::string("{\"policy\": \"") +
           (s.descent.policy == dtsp::DescentSettings::Policy::LineSearch ? "line-search"
                                                                          : "fixed-alpha") +
           "\", \"alpha0\": " + dtsp::format_double(s.descent.alpha0) + ", \"epsilon\": " + eps +
           ", \"max_iters\": " + std::to_string(s.descent.max_iters) +
           ", \"flip_cap\": " + std::to_string(s.flip_cap) +
           ", \"flips\": " + (s.flips_enabled ? "true" : "false") + "}";
}

dtsp::SolutionFile make_solution_file(const std::string& instance_path,
                                      const std::string& instance_bytes,
                                      const dtsp::Instance& instance,
                                      const dtsp::TourConfig& config,
                                      const dtsp::TourEvaluation& eval, const std::string& mode,
                                      int sequences_explored, int iterations,
                                      double initial_length, bool converged,
                                      const dtsp::DtspSettings& settings) {
    dtsp::SolutionFile out;
    out.instance_path = instance_path;
    out.instance_hash = dtsp::fnv1a64_hex(instance_bytes);
    out.rho = instance.rho;
    out.sequence = config.sequence;
    out.angles = config.angles;
    out.length = eval.length;
    out.certificate = eval.gap_bound;
    const int n = instance.size();
    for (int k = 0; k < n; ++k) {
        const auto& e = eval.edges[static_cast<size_t>(k)];
        dtsp::SolutionFile::Edge edge;
        edge.from = config.sequence[static_cast<size_t>(k)];
        edge.to = config.sequence[static_cast<size_t>((k + 1) % n)];
        edge.subtype = dtsp::to_string(e.subtype);
        edge.arc1 = e.arc1_angle;
        edge.straight = e.straight_length;
        edge.arc2 = e.arc2_angle;
        edge.length = e.total_length;
        out.edges.push_back(edge);
    }
    double grad_norm = 0.0;
    for (double t : eval.torques) grad_norm += t * t;
    out.solver.mode = mode;
    out.solver.sequences_explored = sequences_explored;
    out.solver.iterations = iterations;
    out.solver.initial_length = initial_length;
    out.solver.final_grad_norm = std::sqrt(grad_norm);
    out.solver.converged = converged;
    out.solver.settings_json = settings_json(settings);
    return out;
}

int cmd_generate(const dtsp::GenSpec& spec, const std::string& output) {
    const dtsp::Instance instance = dtsp::generate(spec);
    dtsp::InstanceFile file{instance, spec};
    dtsp::write_file(output, dtsp::instance_to_json(file));
    std::printf("wrote %s: %d points, box %g, separation >= %g, rho %g\n", output.c_str(),
                instance.size(), spec.box_side, spec.min_separation, spec.rho);
    return kExitOk;
}

int cmd_solve(const SolveOptions& opt) {
    const std::string bytes = dtsp::read_file(opt.instance_path);
    const dtsp::InstanceFile in = dtsp::instance_from_json(bytes);
    in.instance.validate_for_tour();

    dtsp::DtspSettings settings;
    settings.descent.alpha0 = opt.alpha;
    settings.descent.policy = opt.fixed_alpha ? dtsp::DescentSettings::Policy::FixedAlpha
                                              : dtsp::DescentSettings::Policy::LineSearch;
    settings.descent.epsilon = opt.epsilon;
    settings.descent.max_iters = opt.max_iters;
    settings.flip_cap = opt.flip_cap;
    settings.flips_enabled = !opt.no_flips;

    dtsp::SolutionFile out;
    if (opt.seed_only) {
        std::vector<int> seq;
        if (!opt.sequence_only.empty()) {
            seq = parse_sequence_flag(opt.sequence_only, in.instance.size());
        } else {
            seq = dtsp::solve_etsp(in.instance.points).sequence;
        }
        dtsp::TourConfig config{seq, dtsp::seed_angles(in.instance, seq)};
        const dtsp::TourEvaluation eval = dtsp::evaluate(in.instance, config);
        out = make_solution_file(opt.instance_path, bytes, in.instance, config, eval, "seed-only",
                                 0, 0, eval.length, true, settings);
        std::printf("seed configuration: length %.12g, certificate %s\n", eval.length,
                    eval.gap_bound ? dtsp::format_double(*eval.gap_bound).c_str() : "n/a");
    } else if (!opt.sequence_only.empty()) {
        const std::vector<int> seq = parse_sequence_flag(opt.sequence_only, in.instance.size());
        const dtsp::FlipDescentResult run =
            dtsp::descend_with_flips(in.instance, seq, settings);
        out = make_solution_file(opt.instance_path, bytes, in.instance, run.best.config,
                                 run.best.eval, "sequence-only", 1, run.best.iterations,
                                 run.best.trace.front().length, run.best.converged, settings);
        std::printf("fixed sequence: length %.12g after %d iterations, certificate %s%s\n",
                    run.best.eval.length, run.best.iterations,
                    run.best.eval.gap_bound
                        ? dtsp::format_double(*run.best.eval.gap_bound).c_str()
                        : "n/a",
                    run.best.converged ? "" : " [did not converge]");
    } else {
        const dtsp::DtspResult res = dtsp::solve_dtsp(in.instance, settings);
        const auto& winner = res.per_sequence;
        int iterations = 0;
        bool converged = true;
        double initial_length = 0.0;
        for (const auto& rec : winner) {
            if (rec.converged_length == res.best_eval.length) {
                converged = rec.converged;
                initial_length = rec.seed_length;
                iterations = rec.iterations;
            }
        }
        out = make_solution_file(opt.instance_path, bytes, in.instance, res.best_config,
                                 res.best_eval, "bounding", res.sequences_explored, iterations,
                                 initial_length, converged, settings);
        std::printf("best tour: length %.12g over %d sequence(s), certificate %s\n",
                    res.best_eval.length, res.sequences_explored,
                    res.certificate ? dtsp::format_double(*res.certificate).c_str() : "n/a");
        if (!converged) std::printf("warning: descent on the winning sequence did not converge\n");
    }

    if (!opt.output_path.empty()) {
        dtsp::write_file(opt.output_path, dtsp::solution_to_json(out));
        std::printf("wrote %s\n", opt.output_path.c_str());
    }
    return kExitOk;
}

int cmd_plot(const std::string& solution_path, const std::string& instance_override,
             const std::string& output) {
    const dtsp::SolutionFile sol = dtsp::solution_from_json(dtsp::read_file(solution_path));
    const std::string instance_path =
        instance_override.empty() ? sol.instance_path : instance_override;
    const std::string bytes = dtsp::read_file(instance_path);
    if (instance_override.empty() && dtsp::fnv1a64_hex(bytes) != sol.instance_hash)
        throw dtsp::SeparationTooSmall("instance file " + instance_path +
                                       " does not match the hash recorded in the solution");
    const dtsp::InstanceFile in = dtsp::instance_from_json(bytes);
    dtsp::TourConfig config{sol.sequence, sol.angles};
    const dtsp::TourEvaluation eval = dtsp::evaluate(in.instance, config);
    dtsp::write_file(output, dtsp::render_svg(in.instance, config, eval));
    std::printf("wrote %s\n", output.c_str());
    return kExitOk;
}

int cmd_bench(const dtsp::SweepSpec& spec, const std::string& output) {
    const dtsp::SweepResult result = dtsp::run_sweep(spec);
    const std::string csv = dtsp::sweep_csv(result);
    if (output.empty()) {
        std::fputs(csv.c_str(), stdout);
    } else {
        dtsp::write_file(output, csv);
        int failures = 0;
        for (const auto& r : result.rows) failures += r.failures;
        std::printf("wrote %s (%zu scales, %d failures excluded)\n", output.c_str(),
                    result.rows.size(), failures);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dubins traveling salesman solver (long-path case)"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "Sample a separated point set into a JSON file");
    dtsp::GenSpec spec;
    std::string gen_out;
    gen->add_option("--n", spec.n, "number of points")->required();
    gen->add_option("--box", spec.box_side, "bounding box side length")->required();
    gen->add_option("--sep", spec.min_separation, "minimum pairwise separation")->required();
    gen->add_option("--rho", spec.rho, "minimum turning radius")->required();
    gen->add_option("--seed", spec.seed, "chain seed")->default_val(0);
    gen->add_option("--burn-in", spec.burn_in, "chain burn-in sweeps")->default_val(10000);
    gen->add_option("--thinning", spec.thinning, "sweeps between samples")->default_val(100);
    gen->add_option("-o,--output", gen_out, "output instance path")->required();

    // solve
    auto* solve = app.add_subcommand("solve", "Solve an instance file");
    SolveOptions sopt;
    solve->add_option("instance", sopt.instance_path, "instance JSON path")->required();
    solve->add_option("-o,--output", sopt.output_path, "solution JSON path");
    solve->add_option("--sequence-only", sopt.sequence_only,
                      "skip the bounding loop; descend this fixed visiting order "
                      "(comma-separated 1-based indices)");
    solve->add_flag("--seed-only", sopt.seed_only,
                    "evaluate the seed configuration without descending");
    solve->add_option("--alpha", sopt.alpha, "descent step per unit normalized torque")
        ->default_val(0.1);
    solve->add_flag("--fixed-alpha", sopt.fixed_alpha,
                    "plain fixed-step updates instead of backtracking line search");
    double eps_flag = -1.0;
    solve->add_option("--epsilon", eps_flag,
                      "gradient-norm tolerance (default: certify 0.1% relative error)");
    solve->add_option("--max-iters", sopt.max_iters, "iteration cap")->default_val(10000);
    solve->add_option("--flip-cap", sopt.flip_cap, "sharp-turn flip cap")->default_val(12);
    solve->add_flag("--no-flips", sopt.no_flips, "disable sharp-turn heading flips");

    // plot
    auto* plot = app.add_subcommand("plot", "Render a solution as SVG");
    std::string plot_solution, plot_instance, plot_out;
    plot->add_option("solution", plot_solution, "solution JSON path")->required();
    plot->add_option("--instance", plot_instance, "override the recorded instance path");
    plot->add_option("-o,--output", plot_out, "output SVG path")->required();

    // bench
    auto* bench = app.add_subcommand("bench", "Scale sweep with summary statistics");
    dtsp::SweepSpec sweep;
    std::string bench_out;
    double scale_from = 4.0, scale_to = 40.0, scale_step = 4.0;
    bench->add_option("--n", sweep.base.n, "points per instance")->default_val(9);
    bench->add_option("--instances", sweep.instances_per_scale, "instances per scale")
        ->default_val(50);
    bench->add_option("--seed", sweep.base.seed, "sweep seed")->default_val(0);
    bench->add_option("--scale-from", scale_from, "first scale")->default_val(4.0);
    bench->add_option("--scale-to", scale_to, "last scale")->default_val(40.0);
    bench->add_option("--scale-step", scale_step, "scale increment")->default_val(4.0);
    bench->add_option("--burn-in", sweep.base.burn_in, "chain burn-in sweeps")->default_val(10000);
    bench->add_option("-o,--output", bench_out, "output CSV path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_generate(spec, gen_out);
        if (solve->parsed()) {
            if (eps_flag >= 0.0) sopt.epsilon = eps_flag;
            return cmd_solve(sopt);
        }
        if (plot->parsed()) return cmd_plot(plot_solution, plot_instance, plot_out);
        if (bench->parsed()) {
            sweep.scales.clear();
            for (double s = scale_from; s <= scale_to + 1e-9; s += scale_step)
                sweep.scales.push_back(s);
            return cmd_bench(sweep, bench_out);
        }
    } catch (const dtsp::Infeasible& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitValidation;
    } catch (const dtsp::SeparationTooSmall& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitValidation;
    } catch (const dtsp::TooLarge& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitValidation;
    } catch (const dtsp::SolverError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitValidation;
    }
    return kExitUsage;
}
