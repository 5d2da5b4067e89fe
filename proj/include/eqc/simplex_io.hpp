#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "eqc/harness.hpp"

namespace eqc {

// On-disk simplex document: JSON with keys "dimension" (integer),
// "vertices" ((n+1) x n array of finite reals) and an optional "label".
// Numbers are written with 17 significant digits, so a write/read round
// trip reproduces every coordinate bit-exactly.
struct SimplexFile {
  Simplex simplex;
  std::string label;  // empty = absent
};

SimplexFile read_simplex(std::istream& in);
SimplexFile read_simplex_file(const std::string& path);  // "-" reads stdin

void write_simplex(std::ostream& out, const SimplexFile& file);
void write_simplex_file(const std::string& path, const SimplexFile& file);

// Shortest-exact decimal form used everywhere a coordinate is printed.
std::string format_double(double value);

nlohmann::ordered_json point_to_json(const Point& p);
nlohmann::ordered_json summary_to_json(const TrialSummary& summary);
std::string summary_to_text(const TrialSummary& summary);

}  // namespace eqc
