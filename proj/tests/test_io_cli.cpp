#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "dtsp/dtsp.hpp"
#include "dtsp/instance_gen.hpp"
#include "dtsp/io.hpp"
#include "dtsp/svg.hpp"

using namespace dtsp;
namespace fs = std::filesystem;

namespace {

size_t count_occurrences(const std::string& text, const std::string& needle) {
    size_t count = 0, pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

fs::path temp_dir() {
    const fs::path dir = fs::temp_directory_path() / "dtsp_io_test";
    fs::create_directories(dir);
    return dir;
}

std::string cli_path() {
    const char* env = std::getenv("DTSP_CLI");
    return env == nullptr ? std::string{} : std::string{env};
}

int run_cli(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

Instance sample_instance() {
    GenSpec spec;
    spec.n = 7;
    spec.box_side = 12.0;
    spec.min_separation = 4.0;
    spec.rho = 1.0;
    spec.seed = 5;
    spec.burn_in = 500;
    return generate(spec);
}

}  // namespace

TEST_CASE("instance files round-trip losslessly") {
    const Instance inst = sample_instance();
    GenSpec spec;
    spec.n = 7;
    spec.seed = 5;
    const InstanceFile file{inst, spec};
    const std::string text = instance_to_json(file);
    const InstanceFile back = instance_from_json(text);
    REQUIRE(back.instance.size() == inst.size());
    for (int i = 0; i < inst.size(); ++i) {
        CHECK(back.instance.points[static_cast<size_t>(i)].x ==
              inst.points[static_cast<size_t>(i)].x);
        CHECK(back.instance.points[static_cast<size_t>(i)].y ==
              inst.points[static_cast<size_t>(i)].y);
    }
    CHECK(back.instance.rho == inst.rho);
    REQUIRE(back.generator.has_value());
    CHECK(back.generator->seed == 5);
    CHECK(instance_to_json(back) == text);  // serialization is stable
}

TEST_CASE("17-digit decimals survive parsing exactly") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    const double awkward = 1.0 / 3.0;
    const std::string text = format_double(awkward);
    CHECK(std::stod(text) == awkward);
}

TEST_CASE("solution files reproduce the solved length on re-evaluation") {
    const Instance inst = sample_instance();
    const DtspResult res = solve_dtsp(inst, {});

    SolutionFile file;
    file.instance_path = "unused.json";
    file.instance_hash = fnv1a64_hex("unused");
    file.rho = inst.rho;
    file.sequence = res.best_config.sequence;
    file.angles = res.best_config.angles;
    file.length = res.best_eval.length;
    file.certificate = res.certificate;
    const std::string text = solution_to_json(file);
    const SolutionFile back = solution_from_json(text);

    const TourEvaluation ev = evaluate(inst, TourConfig{back.sequence, back.angles});
    CHECK(std::abs(ev.length - back.length) <= 1e-9 * back.length);
}

TEST_CASE("svg output is structurally complete and deterministic") {
    const Instance inst = sample_instance();
    const DtspResult res = solve_dtsp(inst, {});
    const std::string svg = render_svg(inst, res.best_config, res.best_eval);
    CHECK(count_occurrences(svg, "<circle") == static_cast<size_t>(inst.size()));
    // one tour element per edge plus one heading tick per point
    const size_t paths = count_occurrences(svg, "<path");
    const size_t lines = count_occurrences(svg, "<line");
    CHECK(paths + lines == 2 * static_cast<size_t>(inst.size()));
    CHECK(render_svg(inst, res.best_config, res.best_eval) == svg);
}

TEST_CASE("straight-only edges render as line elements") {
    Instance inst;
    inst.rho = 1.0;
    inst.points = {{0, 0}, {10, 0}, {20, 0}, {10, 30}};
    TourConfig config{{0, 1, 2, 3}, {0.0, 0.0, 0.0, kPi}};
    const TourEvaluation ev = evaluate(inst, config);
    REQUIRE(ev.edges[0].straight_length == doctest::Approx(10.0));
    const std::string svg = render_svg(inst, config, ev);
    // two aligned edges render straight, plus one heading tick per point
    CHECK(count_occurrences(svg, "<line") >= 2 + 4);
}

TEST_CASE("cli: generate, solve and plot round-trip deterministically") {
    REQUIRE(!cli_path().empty());
    const fs::path dir = temp_dir();
    const std::string inst1 = (dir / "a.json").string();
    const std::string inst2 = (dir / "b.json").string();

    const std::string flags = "generate --n 7 --box 12 --sep 4 --rho 1 --seed 42 --burn-in 2000";
    REQUIRE(run_cli(flags + " -o " + inst1) == 0);
    REQUIRE(run_cli(flags + " -o " + inst2) == 0);
    CHECK(read_file(inst1) == read_file(inst2));

    const std::string sol = (dir / "a.sol.json").string();
    REQUIRE(run_cli("solve " + inst1 + " -o " + sol) == 0);
    const SolutionFile parsed = solution_from_json(read_file(sol));
    const InstanceFile instf = instance_from_json(read_file(inst1));
    const TourEvaluation ev =
        evaluate(instf.instance, TourConfig{parsed.sequence, parsed.angles});
    CHECK(std::abs(ev.length - parsed.length) <= 1e-9 * parsed.length);

    const std::string svg1 = (dir / "a1.svg").string();
    const std::string svg2 = (dir / "a2.svg").string();
    REQUIRE(run_cli("plot " + sol + " -o " + svg1) == 0);
    REQUIRE(run_cli("plot " + sol + " -o " + svg2) == 0);
    CHECK(read_file(svg1) == read_file(svg2));
    CHECK(count_occurrences(read_file(svg1), "<circle") == 7);
}

TEST_CASE("cli: solver modes and exit codes") {
    REQUIRE(!cli_path().empty());
    const fs::path dir = temp_dir();
    const std::string inst = (dir / "modes.json").string();
    REQUIRE(run_cli("generate --n 6 --box 12 --sep 4 --rho 1 --seed 9 --burn-in 2000 -o " +
                    inst) == 0);

    CHECK(run_cli("solve " + inst + " --seed-only -o " + (dir / "seed.json").string()) == 0);
    CHECK(run_cli("solve " + inst + " --sequence-only 1,3,5,2,4,6 -o " +
                  (dir / "fixed.json").string()) == 0);

    // usage error: missing required flag
    CHECK(run_cli("generate --n 6") == 1);
    // validation error: malformed sequence index
    CHECK(run_cli("solve " + inst + " --sequence-only 1,2,9") == 2);
    // validation error: instance violating the separation requirement
    const std::string bad = (dir / "bad.json").string();
    write_file(bad,
               "{\n  \"schema\": \"dtsp-instance/1\",\n  \"rho\": 1,\n  \"points\": [\n"
               "    [0, 0],\n    [1, 0],\n    [2, 0]\n  ]\n}\n");
    CHECK(run_cli("solve " + bad) == 2);
}

TEST_CASE("cli: bench emits one csv row per scale") {
    REQUIRE(!cli_path().empty());
    const fs::path dir = temp_dir();
    const std::string csv = (dir / "bench.csv").string();
    REQUIRE(run_cli("bench --n 6 --instances 2 --seed 4 --scale-from 6 --scale-to 12 "
                    "--scale-step 6 --burn-in 200 -o " + csv) == 0);
    const std::string text = read_file(csv);
    CHECK(count_occurrences(text, "\n") == 3);  // header + 2 scales
    CHECK(text.find("scale,instances,failures,mean_sequences_explored") == 0);
}
