#include "qreflect/io.hpp"

#include <fstream>
#include <stdexcept>

namespace qref {

namespace {

std::vector<std::string> payload_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::string> out;
    std::string row;
    while (std::getline(in, row)) {
        const auto hash = row.find('#');
        if (hash != std::string::npos) row.erase(hash);
        const auto first = row.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = row.find_last_not_of(" \t\r");
        out.push_back(row.substr(first, last - first + 1));
    }
    return out;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    return out;
}

}  // namespace

LineSet read_lines(const std::string& path) {
    LineSet set;
    for (const std::string& row : payload_lines(path)) set.insert(parse_line(row));
    return set;
}

void write_lines(const std::string& path, const LineSet& lines) {
    auto out = open_out(path);
    for (const Line& l : lines.lines()) out << l.str() << "\n";
}

std::vector<MatH> read_generators(const std::string& path) {
    std::vector<MatH> gens;
    for (const std::string& row : payload_lines(path)) gens.push_back(parse_math(row));
    return gens;
}

void write_generators(const std::string& path, std::span<const MatH> gens) {
    auto out = open_out(path);
    for (const MatH& g : gens) out << g.str() << "\n";
}

std::vector<MatC> read_complex_generators(const std::string& path) {
    std::vector<MatC> gens;
    for (const std::string& row : payload_lines(path)) gens.push_back(parse_matc(row));
    return gens;
}

void write_complex_generators(const std::string& path, std::span<const MatC> gens) {
    auto out = open_out(path);
    for (const MatC& g : gens) out << g.str() << "\n";
}

nlohmann::json lines_to_json(const LineSet& lines) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Line& l : lines.lines()) arr.push_back(l.str());
    return nlohmann::json{{"lines", arr}};
}

LineSet lines_from_json(const nlohmann::json& j) {
    LineSet set;
    for (const auto& entry : j.at("lines")) set.insert(parse_line(entry.get<std::string>()));
    return set;
}

nlohmann::json generators_to_json(std::span<const MatH> gens) {
    nlohmann::json arr = nlohmann::json::array();
    for (const MatH& g : gens) arr.push_back(g.str());
    return nlohmann::json{{"generators", arr}};
}

std::vector<MatH> generators_from_json(const nlohmann::json& j) {
    std::vector<MatH> gens;
    for (const auto& entry : j.at("generators")) gens.push_back(parse_math(entry.get<std::string>()));
    return gens;
}

}  // namespace qref
