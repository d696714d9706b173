#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dtsp/dtsp.hpp"
#include "dtsp/instance.hpp"
#include "dtsp/instance_gen.hpp"
#include "dtsp/tour.hpp"

namespace dtsp {

/// Formats a double as decimal with 17 significant digits (lossless for
/// binary64, stable across runs).
std::string format_double(double v);

/// FNV-1a 64-bit hash of a byte string, as 16 hex digits.
std::string fnv1a64_hex(const std::string& bytes);

struct InstanceFile {
    Instance instance;
    std::optional<GenSpec> generator;
};

struct SolutionFile {
    std::string instance_path;
    std::string instance_hash;
    double rho = 0.0;
    std::vector<int> sequence;
    std::vector<double> angles;
    double length = 0.0;
    std::optional<double> certificate;
    struct Edge {
        int from = 0, to = 0;
        std::string subtype;
        double arc1 = 0.0, straight = 0.0, arc2 = 0.0, length = 0.0;
    };
    std::vector<Edge> edges;
    struct SolverInfo {
        std::string mode;       // bounding | sequence-only | seed-only
        int sequences_explored = 0;
        int iterations = 0;
        double initial_length = 0.0;
        double final_grad_norm = 0.0;
        bool converged = true;
        std::string settings_json = "{}";  // verbatim settings block
    } solver;
};

std::string instance_to_json(const InstanceFile& file);
InstanceFile instance_from_json(const std::string& text);

std::string solution_to_json(const SolutionFile& file);
SolutionFile solution_from_json(const std::string& text);

/// Whole-file read/write helpers; throw std::runtime_error on I/O failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace dtsp
