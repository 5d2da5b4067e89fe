// Command-line front end: analyze simplex files, list center values,
// run the coincidence/certificate verification harness, and transport
// orbit-pinned centers between congruent simplices.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "eqc/centers.hpp"
#include "eqc/harness.hpp"
#include "eqc/simplex_io.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitTrialFailures = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitDomain = 4;
constexpr int kExitInternal = 5;

int exit_code_for(eqc::ErrorKind kind) {
  switch (kind) {
    case eqc::ErrorKind::Parse:
      return kExitParse;
    case eqc::ErrorKind::OutOfDomain:
    case eqc::ErrorKind::Collinear:
    case eqc::ErrorKind::NoAffineCenter:
      return kExitDomain;
    case eqc::ErrorKind::InvariantViolation:
      return kExitInternal;
    default:
      return kExitValidation;
  }
}

struct Options {
  double tol_abs = 1e-9;
  double tol_rel = 1e-9;
  std::string format = "text";

  eqc::Tolerance tol() const { return eqc::Tolerance{tol_abs, tol_rel}; }
  bool structured() const { return format == "structured"; }
};

std::vector<int> parse_dims(const std::string& spec) {
  std::vector<int> dims;
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    const auto dash = token.find('-', 1);  // allow plain "a" and ranges "a-b"
    try {
      if (dash == std::string::npos) {
        dims.push_back(std::stoi(token));
      } else {
        const int lo = std::stoi(token.substr(0, dash));
        const int hi = std::stoi(token.substr(dash + 1));
        for (int d = lo; d <= hi; ++d) dims.push_back(d);
      }
    } catch (const std::exception&) {
      eqc::fail(eqc::ErrorKind::Parse, "cannot parse --dims value '" + spec + "'");
    }
  }
  if (dims.empty())
    eqc::fail(eqc::ErrorKind::Parse, "--dims must name at least one dimension");
  for (int d : dims)
    if (d < 1) eqc::fail(eqc::ErrorKind::Parse, "--dims entries must be >= 1");
  return dims;
}

eqc::Point parse_point(const std::string& spec) {
  std::vector<double> coords;
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      std::size_t used = 0;
      coords.push_back(std::stod(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      eqc::fail(eqc::ErrorKind::Parse, "cannot parse coordinate '" + token + "'");
    }
  }
  if (coords.empty())
    eqc::fail(eqc::ErrorKind::Parse, "anchor needs at least one coordinate");
  eqc::Point p(static_cast<Eigen::Index>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i)
    p(static_cast<Eigen::Index>(i)) = coords[i];
  return p;
}

std::string point_text(const eqc::Point& p) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (i) out += ", ";
    out += eqc::format_double(p(i));
  }
  return out + ")";
}

std::string perm_text(const std::vector<int>& perm) {
  std::string out = "[";
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(perm[i]);
  }
  return out + "]";
}

int cmd_analyze(const std::string& path, const Options& opt) {
  const eqc::SimplexFile file = eqc::read_simplex_file(path);
  const eqc::Simplex& simplex = file.simplex;
  const eqc::Tolerance tol = opt.tol();

  const bool independent = eqc::is_affinely_independent(simplex, tol);
  const bool equifacetal = eqc::is_equifacetal(simplex, tol);

  ordered_json doc;
  doc["report"] = "analyze";
  if (!file.label.empty()) doc["label"] = file.label;
  doc["dimension"] = simplex.dim();
  doc["affinely_independent"] = independent;
  doc["equifacetal"] = equifacetal;

  if (independent) {
    const eqc::SymmetryGroup group = eqc::symmetry_group(simplex, tol);
    const eqc::AffineSubspace fixed = eqc::fixed_subspace(group, tol);
    doc["symmetry_order"] = group.order();
    doc["symmetry_permutations"] = ordered_json::array();
    for (const auto& e : group.elements)
      doc["symmetry_permutations"].push_back(e.perm);
    doc["fixed_subspace"] = {
        {"dim", fixed.dim()},
        {"base_point", eqc::point_to_json(fixed.base_point)},
    };
    doc["fixed_subspace"]["directions"] = ordered_json::array();
    for (const auto& d : fixed.directions)
      doc["fixed_subspace"]["directions"].push_back(eqc::point_to_json(d));
    doc["vertex_transitive"] = eqc::is_vertex_transitive(group);
  } else {
    doc["symmetry_note"] = "stabilizer infinite -- skipped";
  }

  if (opt.structured()) {
    std::cout << doc.dump(2) << "\n";
    return 0;
  }

  if (!file.label.empty()) std::cout << "label: " << file.label << "\n";
  std::cout << "dimension: " << simplex.dim() << "\n"
            << "affinely_independent: " << (independent ? "true" : "false") << "\n"
            << "equifacetal: " << (equifacetal ? "true" : "false") << "\n";
  if (independent) {
    const eqc::SymmetryGroup group = eqc::symmetry_group(simplex, tol);
    const eqc::AffineSubspace fixed = eqc::fixed_subspace(group, tol);
    std::cout << "symmetry_order: " << group.order() << "\n"
              << "symmetry_permutations:\n";
    for (const auto& e : group.elements)
      std::cout << "  " << perm_text(e.perm) << "\n";
    std::cout << "fixed_subspace_dim: " << fixed.dim() << "\n"
              << "fixed_subspace_base: " << point_text(fixed.base_point) << "\n";
    for (const auto& d : fixed.directions)
      std::cout << "fixed_subspace_direction: " << point_text(d) << "\n";
    std::cout << "vertex_transitive: "
              << (eqc::is_vertex_transitive(group) ? "true" : "false") << "\n";
  } else {
    std::cout << "symmetry: stabilizer infinite -- skipped\n";
  }
  return 0;
}

int cmd_centers(const std::string& path, const Options& opt) {
  const eqc::SimplexFile file = eqc::read_simplex_file(path);
  const eqc::Simplex& simplex = file.simplex;
  const eqc::Tolerance tol = opt.tol();

  std::vector<eqc::CenterFunction> centers = {
      eqc::make_centroid_center(),
      eqc::make_h_weighted_center(),
  };
  if (simplex.dim() == 2) {
    centers.push_back(eqc::make_triangle_center(eqc::TriangleCenterKind::Incenter));
    centers.push_back(eqc::make_triangle_center(eqc::TriangleCenterKind::Orthocenter));
    centers.push_back(eqc::make_triangle_center(eqc::TriangleCenterKind::Circumcenter));
  }

  ordered_json doc;
  doc["report"] = "centers";
  if (!file.label.empty()) doc["label"] = file.label;
  doc["dimension"] = simplex.dim();
  doc["centers"] = ordered_json::array();

  for (const auto& center : centers) {
    ordered_json row;
    row["center"] = center.id();
    try {
      const eqc::Point value = eqc::evaluate(center, simplex, tol);
      row["status"] = "ok";
      row["value"] = eqc::point_to_json(value);
    } catch (const eqc::Error& e) {
      row["status"] = eqc::to_string(e.kind());
      row["error"] = e.what();
    }
    doc["centers"].push_back(std::move(row));
  }

  if (opt.structured()) {
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  if (!file.label.empty()) std::cout << "label: " << file.label << "\n";
  for (const auto& row : doc["centers"]) {
    std::cout << row["center"].get<std::string>() << ": ";
    if (row["status"] == "ok") {
      const auto& v = row["value"];
      std::cout << "(";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << eqc::format_double(v[i].get<double>());
      }
      std::cout << ")\n";
    } else {
      std::cout << row["status"].get<std::string>() << " -- "
                << row["error"].get<std::string>() << "\n";
    }
  }
  return 0;
}

int cmd_verify(const std::string& dims_spec, int count, std::uint64_t seed,
               const Options& opt) {
  const std::vector<int> dims = parse_dims(dims_spec);
  const eqc::TrialSummary summary = eqc::run_trials(dims, count, seed, opt.tol());
  if (opt.structured())
    std::cout << eqc::summary_to_json(summary).dump(2) << "\n";
  else
    std::cout << eqc::summary_to_text(summary);
  return summary.total_failures() == 0 ? 0 : kExitTrialFailures;
}

int cmd_transport(const std::string& base_path, const std::string& anchor_spec,
                  const std::string& target_path, const Options& opt) {
  const eqc::Tolerance tol = opt.tol();
  const eqc::SimplexFile base = eqc::read_simplex_file(base_path);
  const eqc::Point anchor = parse_point(anchor_spec);
  const eqc::SimplexFile target = eqc::read_simplex_file(target_path);

  const eqc::CenterFunction center =
      eqc::make_orbit_center(base.simplex, anchor, tol);
  const eqc::Point value = eqc::evaluate(center, target.simplex, tol);

  if (opt.structured()) {
    ordered_json doc;
    doc["report"] = "transport";
    doc["anchor"] = eqc::point_to_json(anchor);
    doc["value"] = eqc::point_to_json(value);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << point_text(value) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equicenter: symmetry groups, equivariant centers and "
               "equifacetality certificates for simplices"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--tol-abs", opt.tol_abs, "absolute tolerance")
      ->capture_default_str();
  app.add_option("--tol-rel", opt.tol_rel, "relative tolerance")
      ->capture_default_str();
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();

  std::string path;
  auto* analyze = app.add_subcommand(
      "analyze", "symmetry group, fixed subspace and equifacetality of a simplex file");
  analyze->add_option("path", path, "simplex file, '-' for stdin")->required();

  std::string centers_path;
  auto* centers = app.add_subcommand("centers", "evaluate applicable centers");
  centers->add_option("path", centers_path, "simplex file, '-' for stdin")->required();

  std::string dims_spec = "2,3,4,5";
  int count = 100;
  std::uint64_t seed = 2025;
  auto* verify = app.add_subcommand(
      "verify", "run the coincidence/certificate harness over generated simplices");
  verify->add_option("--dims", dims_spec, "dimensions, e.g. 2,3 or 2-5")
      ->capture_default_str();
  verify->add_option("--count", count, "random simplices per dimension")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify->add_option("--seed", seed, "random seed")->capture_default_str();

  std::string base_path, anchor_spec, target_path;
  auto* transport = app.add_subcommand(
      "transport", "move an anchored center along the orbit of its base simplex");
  transport->add_option("--base", base_path, "base simplex file")->required();
  transport->add_option("--anchor", anchor_spec, "anchor point, e.g. '0,1'")
      ->required();
  transport->add_option("--target", target_path, "target simplex file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(path, opt);
    if (centers->parsed()) return cmd_centers(centers_path, opt);
    if (verify->parsed()) return cmd_verify(dims_spec, count, seed, opt);
    if (transport->parsed())
      return cmd_transport(base_path, anchor_spec, target_path, opt);
  } catch (const eqc::Error& e) {
    std::cerr << "error (" << eqc::to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return 0;
}
