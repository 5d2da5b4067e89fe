#include "eqc/simplex_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace eqc {

using nlohmann::ordered_json;

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

SimplexFile read_simplex(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("invalid simplex document: ") + e.what());
  }

  if (!doc.is_object() || !doc.contains("dimension") || !doc.contains("vertices"))
    fail(ErrorKind::Parse, "simplex document needs 'dimension' and 'vertices'");
  if (!doc["dimension"].is_number_integer())
    fail(ErrorKind::Parse, "'dimension' must be an integer");
  const int n = doc["dimension"].get<int>();
  if (n < 1) fail(ErrorKind::Parse, "'dimension' must be >= 1");

  const auto& rows = doc["vertices"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != n + 1) {
    std::ostringstream msg;
    msg << "'vertices' must be an array of " << n + 1 << " rows";
    fail(ErrorKind::Parse, msg.str());
  }

  std::vector<Point> vertices;
  vertices.reserve(rows.size());
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      fail(ErrorKind::Parse, "each vertex row must list exactly 'dimension' numbers");
    Point p(n);
    for (int i = 0; i < n; ++i) {
      if (!row[i].is_number())
        fail(ErrorKind::Parse, "vertex coordinates must be numbers");
      p(i) = row[i].get<double>();
      if (!std::isfinite(p(i)))
        fail(ErrorKind::Parse, "vertex coordinates must be finite");
    }
    vertices.push_back(std::move(p));
  }

  SimplexFile file;
  file.simplex = make_simplex(std::move(vertices));
  if (doc.contains("label")) {
    if (!doc["label"].is_string())
      fail(ErrorKind::Parse, "'label' must be a string");
    file.label = doc["label"].get<std::string>();
  }
  return file;
}

SimplexFile read_simplex_file(const std::string& path) {
  if (path == "-") return read_simplex(std::cin);
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open '" + path + "'");
  return read_simplex(in);
}

void write_simplex(std::ostream& out, const SimplexFile& file) {
  const Simplex& s = file.simplex;
  out << "{\n  \"dimension\": " << s.dim() << ",\n";
  if (!file.label.empty())
    out << "  \"label\": " << nlohmann::json(file.label).dump() << ",\n";
  out << "  \"vertices\": [\n";
  for (std::size_t i = 0; i < s.vertices.size(); ++i) {
    out << "    [";
    for (int j = 0; j < s.dim(); ++j) {
      if (j) out << ", ";
      out << format_double(s.vertices[i](j));
    }
    out << (i + 1 < s.vertices.size() ? "],\n" : "]\n");
  }
  out << "  ]\n}\n";
}

void write_simplex_file(const std::string& path, const SimplexFile& file) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::Parse, "cannot open '" + path + "' for writing");
  write_simplex(out, file);
}

ordered_json point_to_json(const Point& p) {
  ordered_json arr = ordered_json::array();
  for (Eigen::Index i = 0; i < p.size(); ++i) arr.push_back(p(i));
  return arr;
}

ordered_json summary_to_json(const TrialSummary& summary) {
  ordered_json doc;
  doc["report"] = "verify";
  doc["seed"] = summary.seed;
  doc["dims"] = summary.dims;
  doc["count"] = summary.count;
  doc["tolerance"] = {{"abs", summary.tol.abs}, {"rel", summary.tol.rel}};
  doc["per_dim"] = ordered_json::array();
  for (const auto& d : summary.per_dim) {
    ordered_json row;
    row["dim"] = d.dim;
    row["instances"] = d.instances;
    row["coincidence_pass"] = d.coincidence_pass;
    row["coincidence_fail"] = d.coincidence_fail;
    row["certificate_pass"] = d.certificate_pass;
    row["certificate_fail"] = d.certificate_fail;
    row["max_residual"] = d.max_residual;
    if (std::isfinite(d.min_separation))
      row["min_separation"] = d.min_separation;
    else
      row["min_separation"] = nullptr;
    doc["per_dim"].push_back(std::move(row));
  }
  doc["total_instances"] = summary.total_instances();
  doc["total_failures"] = summary.total_failures();
  doc["failures"] = ordered_json::array();
  for (const auto& f : summary.failures) {
    ordered_json row;
    row["dim"] = f.dim;
    row["instance"] = f.instance;
    row["equifacetal"] = f.equifacetal;
    row["message"] = f.message;
    doc["failures"].push_back(std::move(row));
  }
  return doc;
}

std::string summary_to_text(const TrialSummary& summary) {
  std::ostringstream out;
  out << "verification run: seed " << summary.seed << ", count " << summary.count
      << " per dim, tol abs " << format_double(summary.tol.abs) << " rel "
      << format_double(summary.tol.rel) << "\n";
  for (const auto& d : summary.per_dim) {
    out << "  dim " << d.dim << ": " << d.instances << " instances, coincidence "
        << d.coincidence_pass << "/" << d.coincidence_pass + d.coincidence_fail
        << ", certificates " << d.certificate_pass << "/"
        << d.certificate_pass + d.certificate_fail << ", max residual "
        << format_double(d.max_residual) << ", min separation ";
    if (std::isfinite(d.min_separation))
      out << format_double(d.min_separation);
    else
      out << "n/a";
    out << "\n";
  }
  out << "total: " << summary.total_instances() << " instances, "
      << summary.total_failures() << " failures\n";
  for (const auto& f : summary.failures)
    out << "  FAIL dim " << f.dim << " " << f.instance << ": " << f.message << "\n";
  return out.str();
}

}  // namespace eqc
