#include "eqc/harness.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "eqc/detail/rng.hpp"

namespace eqc {

namespace {

constexpr int kMaxRegularDim = 7;

// A certificate must separate by a robust margin, not a tolerance artifact.
double separation_floor(const Tolerance& tol, double diam) {
  return 1e3 * tol.point_tol(1.0 + diam);
}

void validate_witness_equivariance(const CenterFunction& witness,
                                   const Simplex& V, const Tolerance& tol,
                                   std::uint64_t seed, int checks) {
  for (int k = 0; k < checks; ++k) {
    const Isometry g =
        random_isometry(detail::mix_seed(seed, static_cast<std::uint64_t>(k)),
                        V.dim(), 2.0);
    if (!check_equivariance(witness, V, g, tol)) {
      std::ostringstream msg;
      msg << "certificate witness failed equivariance on random isometry #" << k;
      fail(ErrorKind::InvariantViolation, msg.str());
    }
  }
}

}  // namespace

Simplex regular_simplex(int n) {
  if (n < 1 || n > kMaxRegularDim) {
    std::ostringstream msg;
    msg << "regular_simplex supports 1 <= n <= " << kMaxRegularDim << ", got " << n;
    fail(ErrorKind::Unsupported, msg.str());
  }
  // Orthonormal basis of the hyperplane of R^{n+1} orthogonal to (1,...,1):
  // the standard-basis simplex lives there with edge length sqrt(2).
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n + 1, n + 1);
  a.col(0) = Eigen::VectorXd::Ones(n + 1);
  for (int j = 1; j <= n; ++j) a(j - 1, j) = 1.0;
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  const Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd basis = q.rightCols(n);  // orthogonal to ones

  std::vector<Point> vertices;
  vertices.reserve(n + 1);
  const double scale = 1.0 / std::sqrt(2.0);
  for (int i = 0; i <= n; ++i)
    vertices.push_back(scale * (basis.transpose() *
                                Eigen::VectorXd::Unit(n + 1, i)));
  return make_simplex(std::move(vertices));
}

Simplex isosceles_tetrahedron(double x, double y, double z, bool allow_regular) {
  if (!(x > 0.0) || !(y > 0.0) || !(z > 0.0))
    fail(ErrorKind::Unsupported, "isosceles_tetrahedron parameters must be positive");
  if (!allow_regular && x == y && y == z)
    fail(ErrorKind::Unsupported,
         "all-equal parameters give the regular tetrahedron; pass allow_regular");
  std::vector<Point> vertices(4, Point(3));
  vertices[0] << x, y, z;
  vertices[1] << x, -y, -z;
  vertices[2] << -x, y, -z;
  vertices[3] << -x, -y, z;
  return make_simplex(std::move(vertices));
}

Simplex random_simplex(int n, std::uint64_t seed) {
  if (n < 1) fail(ErrorKind::Unsupported, "random_simplex needs n >= 1");
  std::mt19937_64 rng(detail::mix_seed(seed, static_cast<std::uint64_t>(n)));
  while (true) {
    std::vector<Point> vertices(n + 1, Point(n));
    for (auto& v : vertices)
      for (int i = 0; i < n; ++i) v(i) = detail::uniform_in(rng, -1.0, 1.0);
    Simplex s = make_simplex(std::move(vertices));
    if (is_affinely_independent(s)) return s;
  }
}

CoincidenceReport verify_coincidence(const Simplex& V, const Tolerance& tol) {
  if (!is_equifacetal(V, tol))
    fail(ErrorKind::NotEquifacetal,
         "verify_coincidence requires an equifacetal simplex");

  const std::vector<std::pair<std::string, Point>> values = {
      {"centroid", centroid(V)},
      {"h_weighted", h_weighted_center(V, tol)},
  };

  CoincidenceReport report;
  report.simplex = V;

  const double diam = diameter(V.vertices);
  const double thresh = tol.point_tol(1.0 + diam);

  if (is_affinely_independent(V, tol)) {
    const SymmetryGroup group = symmetry_group(V, tol);
    const AffineSubspace fixed = fixed_subspace(group, tol);
    if (fixed.dim() != 0) {
      std::ostringstream msg;
      msg << "equifacetal independent simplex has fixed subspace of dimension "
          << fixed.dim() << " (expected a single point)";
      fail(ErrorKind::InvariantViolation, msg.str());
    }
    report.the_point = fixed.base_point;
    report.fixed_dim = 0;
  } else {
    report.the_point = values.front().second;  // centroid
    report.fixed_dim = -1;
  }

  for (const auto& [id, value] : values) {
    const double residual = (value - report.the_point).norm();
    report.centers_checked.push_back(CenterCheck{id, value, residual});
    if (residual > thresh) {
      std::ostringstream msg;
      msg << "center " << id << " misses the coincidence point by " << residual;
      fail(ErrorKind::InvariantViolation, msg.str());
    }
  }
  return report;
}

Certificate certificate_of_noncoincidence(const Simplex& V, const Tolerance& tol,
                                          std::uint64_t validation_seed,
                                          int equivariance_checks) {
  if (is_equifacetal(V, tol))
    fail(ErrorKind::EquifacetalInput,
         "certificate_of_noncoincidence requires a non-equifacetal simplex");

  Certificate cert;
  cert.simplex = V;
  cert.centroid_value = centroid(V);
  const double diam = diameter(V.vertices);

  if (!is_affinely_independent(V, tol)) {
    cert.witness_center = make_h_weighted_center();
    cert.witness_value = h_weighted_center(V, tol);
  } else {
    const SymmetryGroup group = symmetry_group(V, tol);
    const AffineSubspace fixed = fixed_subspace(group, tol);
    if (fixed.dim() == 0)
      fail(ErrorKind::InvariantViolation,
           "non-equifacetal independent simplex has a zero-dimensional fixed "
           "subspace; the transitivity characterization would be violated");
    const Point anchor = cert.centroid_value + diam * fixed.directions.front();
    cert.witness_center = make_orbit_center(V, anchor, tol);
    cert.witness_value = evaluate(cert.witness_center, V, tol);
  }

  cert.separation = (cert.witness_value - cert.centroid_value).norm();
  if (cert.separation <= separation_floor(tol, diam)) {
    std::ostringstream msg;
    msg << "witness separation " << cert.separation
        << " is below the robustness floor " << separation_floor(tol, diam);
    fail(ErrorKind::InvariantViolation, msg.str());
  }

  validate_witness_equivariance(cert.witness_center, V, tol, validation_seed,
                                equivariance_checks);
  return cert;
}

void DimStats::add(const InstanceResult& r) {
  ++instances;
  if (r.equifacetal) {
    if (r.pass) {
      ++coincidence_pass;
      max_residual = std::max(max_residual, r.residual);
    } else {
      ++coincidence_fail;
    }
  } else {
    if (r.pass) {
      ++certificate_pass;
      min_separation = std::min(min_separation, r.separation);
    } else {
      ++certificate_fail;
    }
  }
}

void DimStats::merge(const DimStats& other) {
  instances += other.instances;
  coincidence_pass += other.coincidence_pass;
  coincidence_fail += other.coincidence_fail;
  certificate_pass += other.certificate_pass;
  certificate_fail += other.certificate_fail;
  max_residual = std::max(max_residual, other.max_residual);
  min_separation = std::min(min_separation, other.min_separation);
}

int TrialSummary::total_instances() const {
  int total = 0;
  for (const auto& d : per_dim) total += d.instances;
  return total;
}

int TrialSummary::total_failures() const {
  return static_cast<int>(failures.size());
}

void TrialSummary::merge(const TrialSummary& other) {
  for (const auto& d : other.per_dim) {
    auto it = std::find_if(per_dim.begin(), per_dim.end(),
                           [&](const DimStats& s) { return s.dim == d.dim; });
    if (it == per_dim.end())
      per_dim.push_back(d);
    else
      it->merge(d);
  }
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  normalize();
}

void TrialSummary::normalize() {
  std::sort(per_dim.begin(), per_dim.end(),
            [](const DimStats& a, const DimStats& b) { return a.dim < b.dim; });
  std::sort(failures.begin(), failures.end(),
            [](const InstanceResult& a, const InstanceResult& b) {
              return std::tie(a.dim, a.instance) < std::tie(b.dim, b.instance);
            });
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

InstanceResult run_instance(const Simplex& V, int dim, const std::string& name,
                            const Tolerance& tol, std::uint64_t seed) {
  InstanceResult result;
  result.dim = dim;
  result.instance = name;
  try {
    result.equifacetal = is_equifacetal(V, tol);
    if (result.equifacetal) {
      const CoincidenceReport report = verify_coincidence(V, tol);
      for (const auto& check : report.centers_checked)
        result.residual = std::max(result.residual, check.residual);
    } else {
      const Certificate cert = certificate_of_noncoincidence(V, tol, seed);
      result.separation = cert.separation;
    }
    result.pass = true;
  } catch (const Error& e) {
    result.pass = false;
    result.message = std::string(to_string(e.kind())) + ": " + e.what();
  }
  return result;
}

}  // namespace

TrialSummary run_trials(const std::vector<int>& dims, int count,
                        std::uint64_t seed, const Tolerance& tol) {
  TrialSummary summary;
  summary.seed = seed;
  summary.dims = dims;
  summary.count = count;
  summary.tol = tol;

  for (int n : dims) {
    DimStats stats;
    stats.dim = n;

    std::vector<std::pair<std::string, Simplex>> instances;
    if (n >= 1 && n <= kMaxRegularDim)
      instances.emplace_back("regular", regular_simplex(n));
    if (n == 2) {
      std::vector<Point> v(3, Point(2));
      v[0] << 0, 0;
      v[1] << 0, 0;
      v[2] << 3, 0;
      instances.emplace_back("degenerate_repeated_vertex", make_simplex(v));
    }
    if (n == 3)
      instances.emplace_back("isosceles_tetrahedron_1_2_3",
                             isosceles_tetrahedron(1, 2, 3));
    for (int k = 0; k < count; ++k) {
      std::ostringstream name;
      name << "random_" << k;
      instances.emplace_back(
          name.str(),
          random_simplex(n, detail::mix_seed(seed, (static_cast<std::uint64_t>(n)
                                                    << 32) |
                                                       static_cast<std::uint64_t>(k))));
    }

    for (const auto& [name, simplex] : instances) {
      const std::uint64_t inst_seed =
          detail::mix_seed(seed ^ 0xCE27B00CULL,
                           (static_cast<std::uint64_t>(n) << 40) ^ fnv1a(name));
      InstanceResult r = run_instance(simplex, n, name, tol, inst_seed);
      stats.add(r);
      if (!r.pass) summary.failures.push_back(std::move(r));
    }
    summary.per_dim.push_back(stats);
  }

  summary.normalize();
  return summary;
}

}  // namespace eqc
