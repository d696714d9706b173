#include "dtsp/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace dtsp {

using nlohmann::json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

// Files are written by hand so numeric fields come out as 17-significant-digit
// decimals regardless of the JSON library's float formatting; they are read
// back with nlohmann::json.

void append_points(std::string& out, const std::vector<Vec2>& points, const char* indent) {
    for (size_t i = 0; i < points.size(); ++i) {
        out += indent;
        out += "[" + format_double(points[i].x) + ", " + format_double(points[i].y) + "]";
        out += (i + 1 < points.size()) ? ",\n" : "\n";
    }
}

Vec2 parse_point(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

}  // namespace

std::string instance_to_json(const InstanceFile& file) {
    std::string out;
    out += "{\n";
    out += "  \"schema\": \"dtsp-instance/1\",\n";
    out += "  \"rho\": " + format_double(file.instance.rho) + ",\n";
    if (file.instance.box)
        out += "  \"box\": " + format_double(*file.instance.box) + ",\n";
    out += "  \"points\": [\n";
    append_points(out, file.instance.points, "    ");
    out += "  ]";
    if (file.generator) {
        const GenSpec& g = *file.generator;
        out += ",\n  \"generator\": {\n";
        out += "    \"n\": " + std::to_string(g.n) + ",\n";
        out += "    \"box_side\": " + format_double(g.box_side) + ",\n";
        out += "    \"min_separation\": " + format_double(g.min_separation) + ",\n";
        out += "    \"rho\": " + format_double(g.rho) + ",\n";
        out += "    \"seed\": " + std::to_string(g.seed) + ",\n";
        out += "    \"burn_in\": " + std::to_string(g.burn_in) + ",\n";
        out += "    \"thinning\": " + std::to_string(g.thinning) + "\n";
        out += "  }";
    }
    out += "\n}\n";
    return out;
}

InstanceFile instance_from_json(const std::string& text) {
    const json j = json::parse(text);
    if (j.at("schema").get<std::string>() != "dtsp-instance/1")
        throw std::runtime_error("unsupported instance schema: " +
                                 j.at("schema").get<std::string>());
    InstanceFile file;
    file.instance.rho = j.at("rho").get<double>();
    if (j.contains("box")) file.instance.box = j.at("box").get<double>();
    for (const auto& p : j.at("points")) file.instance.points.push_back(parse_point(p));
    if (j.contains("generator")) {
        const auto& g = j.at("generator");
        GenSpec spec;
        spec.n = g.at("n").get<int>();
        spec.box_side = g.at("box_side").get<double>();
        spec.min_separation = g.at("min_separation").get<double>();
        spec.rho = g.at("rho").get<double>();
        spec.seed = g.at("seed").get<std::uint64_t>();
        spec.burn_in = g.at("burn_in").get<int>();
        spec.thinning = g.at("thinning").get<int>();
        file.generator = spec;
    }
    return file;
}

std::string solution_to_json(const SolutionFile& file) {
    std::string out;
    out += "{\n";
    out += "  \"schema\": \"dtsp-solution/1\",\n";
    out += "  \"instance\": {\"path\": " + json(file.instance_path).dump() +
           ", \"fnv1a64\": \"" + file.instance_hash + "\"},\n";
    out += "  \"rho\": " + format_double(file.rho) + ",\n";
    out += "  \"sequence\": [";
    for (size_t i = 0; i < file.sequence.size(); ++i) {
        out += std::to_string(file.sequence[i]);
        if (i + 1 < file.sequence.size()) out += ", ";
    }
    out += "],\n";
    out += "  \"angles\": [";
    for (size_t i = 0; i < file.angles.size(); ++i) {
        out += format_double(file.angles[i]);
        if (i + 1 < file.angles.size()) out += ", ";
    }
    out += "],\n";
    out += "  \"length\": " + format_double(file.length) + ",\n";
    out += "  \"certificate\": " +
           (file.certificate ? format_double(*file.certificate) : std::string("null")) + ",\n";
    out += "  \"edges\": [\n";
    for (size_t i = 0; i < file.edges.size(); ++i) {
        const auto& e = file.edges[i];
        out += "    {\"from\": " + std::to_string(e.from) + ", \"to\": " + std::to_string(e.to) +
               ", \"subtype\": \"" + e.subtype + "\", \"arc1\": " + format_double(e.arc1) +
               ", \"straight\": " + format_double(e.straight) +
               ", \"arc2\": " + format_double(e.arc2) +
               ", \"length\": " + format_double(e.length) + "}";
        out += (i + 1 < file.edges.size()) ? ",\n" : "\n";
    }
    out += "  ],\n";
    out += "  \"solver\": {\n";
    out += "    \"mode\": \"" + file.solver.mode + "\",\n";
    out += "    \"sequences_explored\": " + std::to_string(file.solver.sequences_explored) + ",\n";
    out += "    \"iterations\": " + std::to_string(file.solver.iterations) + ",\n";
    out += "    \"initial_length\": " + format_double(file.solver.initial_length) + ",\n";
    out += "    \"final_grad_norm\": " + format_double(file.solver.final_grad_norm) + ",\n";
    out += "    \"converged\": " + std::string(file.solver.converged ? "true" : "false") + ",\n";
    out += "    \"settings\": " + file.solver.settings_json + "\n";
    out += "  }\n";
    out += "}\n";
    return out;
}

SolutionFile solution_from_json(const std::string& text) {
    const json j = json::parse(text);
    if (j.at("schema").get<std::string>() != "dtsp-solution/1")
        throw std::runtime_error("unsupported solution schema: " +
                                 j.at("schema").get<std::string>());
    SolutionFile file;
    file.instance_path = j.at("instance").at("path").get<std::string>();
    file.instance_hash = j.at("instance").at("fnv1a64").get<std::string>();
    file.rho = j.at("rho").get<double>();
    file.sequence = j.at("sequence").get<std::vector<int>>();
    file.angles = j.at("angles").get<std::vector<double>>();
    file.length = j.at("length").get<double>();
    if (!j.at("certificate").is_null()) file.certificate = j.at("certificate").get<double>();
    for (const auto& je : j.at("edges")) {
        SolutionFile::Edge e;
        e.from = je.at("from").get<int>();
        e.to = je.at("to").get<int>();
        e.subtype = je.at("subtype").get<std::string>();
        e.arc1 = je.at("arc1").get<double>();
        e.straight = je.at("straight").get<double>();
        e.arc2 = je.at("arc2").get<double>();
        e.length = je.at("length").get<double>();
        file.edges.push_back(e);
    }
    const auto& s = j.at("solver");
    file.solver.mode = s.at("mode").get<std::string>();
    file.solver.sequences_explored = s.at("sequences_explored").get<int>();
    file.solver.iterations = s.at("iterations").get<int>();
    file.solver.initial_length = s.at("initial_length").get<double>();
    file.solver.final_grad_norm = s.at("final_grad_norm").get<double>();
    file.solver.converged = s.at("converged").get<bool>();
    file.solver.settings_json = s.at("settings").dump();
    return file;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path + " for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace dtsp
