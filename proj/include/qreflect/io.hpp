#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "qreflect/lines.hpp"

namespace qref {

// Plain text formats. One value per line, `#` starts a comment, blank lines
// are skipped. Lines use "inf" or the slope quaternion text, matrices their
// row-major bracket text.

LineSet read_lines(const std::string& path);
void write_lines(const std::string& path, const LineSet& lines);

std::vector<MatH> read_generators(const std::string& path);
void write_generators(const std::string& path, std::span<const MatH> gens);

std::vector<MatC> read_complex_generators(const std::string& path);
void write_complex_generators(const std::string& path, std::span<const MatC> gens);

// JSON mirrors of the same data.
nlohmann::json lines_to_json(const LineSet& lines);
LineSet lines_from_json(const nlohmann::json& j);

nlohmann::json generators_to_json(std::span<const MatH> gens);
std::vector<MatH> generators_from_json(const nlohmann::json& j);

}  // namespace qref
