#include "eqc/geometry.hpp"

#include <random>
#include <sstream>

#include "eqc/detail/rng.hpp"

namespace eqc {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonOrthogonal: return "NonOrthogonal";
    case ErrorKind::AffinelyDependent: return "AffinelyDependent";
    case ErrorKind::Collinear: return "Collinear";
    case ErrorKind::NoAffineCenter: return "NoAffineCenter";
    case ErrorKind::AnchorNotFixed: return "AnchorNotFixed";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::NotEquifacetal: return "NotEquifacetal";
    case ErrorKind::EquifacetalInput: return "EquifacetalInput";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

Isometry identity_isometry(int dim) {
  if (dim < 1) fail(ErrorKind::Unsupported, "isometry dimension must be >= 1");
  return Isometry{Eigen::MatrixXd::Identity(dim, dim),
                  Eigen::VectorXd::Zero(dim)};
}

bool is_orthogonal(const Eigen::MatrixXd& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) return false;
  const Eigen::MatrixXd defect =
      m.transpose() * m - Eigen::MatrixXd::Identity(m.rows(), m.cols());
  return defect.norm() <= tol;
}

Isometry make_isometry(Eigen::MatrixXd linear, Eigen::VectorXd translation) {
  if (linear.rows() != linear.cols() || linear.rows() != translation.size())
    fail(ErrorKind::DimensionMismatch, "isometry parts have mismatched shapes");
  if (!is_orthogonal(linear))
    fail(ErrorKind::NonOrthogonal, "linear part is not orthogonal");
  return Isometry{std::move(linear), std::move(translation)};
}

Point apply(const Isometry& g, const Point& p) {
  if (g.linear.cols() != p.size())
    fail(ErrorKind::DimensionMismatch, "isometry/point dimension mismatch");
  return g.linear * p + g.translation;
}

Isometry compose(const Isometry& g, const Isometry& h) {
  if (g.dim() != h.dim())
    fail(ErrorKind::DimensionMismatch, "composing isometries of different dimensions");
  return Isometry{g.linear * h.linear, g.linear * h.translation + g.translation};
}

Isometry inverse(const Isometry& g) {
  if (!is_orthogonal(g.linear))
    fail(ErrorKind::NonOrthogonal, "cannot invert a non-orthogonal linear part");
  Eigen::MatrixXd qt = g.linear.transpose();
  return Isometry{qt, -(qt * g.translation)};
}

Isometry random_isometry(std::uint64_t seed, int dim, double translation_scale) {
  if (dim < 1) fail(ErrorKind::Unsupported, "isometry dimension must be >= 1");
  std::mt19937_64 rng(detail::mix_seed(seed, 0x15ab1efcULL));

  Eigen::MatrixXd q;
  while (true) {
    Eigen::MatrixXd a(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) a(i, j) = detail::uniform_in(rng, -1.0, 1.0);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
    Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
    if (r.diagonal().cwiseAbs().minCoeff() < 1e-6) continue;  // resample near-singular draws
    q = qr.householderQ();
    for (int j = 0; j < dim; ++j)
      if (r(j, j) < 0.0) q.col(j) = -q.col(j);
    break;
  }
  if (rng() & 1u) q.col(dim - 1) = -q.col(dim - 1);

  Eigen::VectorXd t(dim);
  for (int i = 0; i < dim; ++i)
    t(i) = detail::uniform_in(rng, -translation_scale, translation_scale);
  return Isometry{std::move(q), std::move(t)};
}

Eigen::MatrixXd distance_matrix(const std::vector<Point>& points) {
  const auto m = static_cast<Eigen::Index>(points.size());
  for (const Point& p : points)
    if (p.size() != points.front().size())
      fail(ErrorKind::DimensionMismatch, "distance_matrix: mixed point dimensions");
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = i + 1; j < m; ++j)
      d(i, j) = d(j, i) = (points[i] - points[j]).norm();
  return d;
}

Point centroid_of(const std::vector<Point>& points) {
  if (points.empty()) fail(ErrorKind::Unsupported, "centroid of empty point list");
  Point sum = Eigen::VectorXd::Zero(points.front().size());
  for (const Point& p : points) {
    if (p.size() != sum.size())
      fail(ErrorKind::DimensionMismatch, "centroid_of: mixed point dimensions");
    sum += p;
  }
  return sum / static_cast<double>(points.size());
}

double diameter(const std::vector<Point>& points) {
  double d = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      d = std::max(d, (points[i] - points[j]).norm());
  return d;
}

bool points_close(const Point& a, const Point& b, double eps) {
  return a.size() == b.size() && (a - b).norm() <= eps;
}

}  // namespace eqc
