#include "eqc/simplex.hpp"

#include <cmath>
#include <sstream>

#include "eqc/detail/matching.hpp"
#include "eqc/symmetry.hpp"

namespace eqc {

Simplex make_simplex(std::vector<Point> vertices) {
  if (vertices.empty())
    fail(ErrorKind::DimensionMismatch, "simplex needs at least two vertices");
  const auto n = vertices.front().size();
  if (n < 1) fail(ErrorKind::DimensionMismatch, "simplex vertices must have dimension >= 1");
  if (static_cast<Eigen::Index>(vertices.size()) != n + 1) {
    std::ostringstream msg;
    msg << "simplex in R^" << n << " needs " << n + 1 << " vertices, got "
        << vertices.size();
    fail(ErrorKind::DimensionMismatch, msg.str());
  }
  for (const Point& v : vertices) {
    if (v.size() != n)
      fail(ErrorKind::DimensionMismatch, "simplex vertices have mixed dimensions");
    if (!v.allFinite())
      fail(ErrorKind::Parse, "simplex vertex has a non-finite coordinate");
  }
  return Simplex{std::move(vertices)};
}

std::vector<std::vector<Point>> facets(const Simplex& V) {
  const std::size_t m = V.vertices.size();
  std::vector<std::vector<Point>> out(m);
  for (std::size_t k = 0; k < m; ++k) {
    out[k].reserve(m - 1);
    for (std::size_t i = 0; i < m; ++i)
      if (i != k) out[k].push_back(V.vertices[i]);
  }
  return out;
}

std::optional<Correspondence> congruent(const std::vector<Point>& S,
                                        const std::vector<Point>& T,
                                        const Tolerance& tol) {
  if (S.size() != T.size())
    fail(ErrorKind::DimensionMismatch, "congruent: cardinality mismatch");
  if (S.empty()) fail(ErrorKind::DimensionMismatch, "congruent: empty point lists");
  if (S.front().size() != T.front().size())
    fail(ErrorKind::DimensionMismatch, "congruent: ambient dimension mismatch");

  std::optional<Correspondence> result;
  detail::for_each_distance_matching(
      S, T, tol, [&](const std::vector<int>& perm) {
        if (auto iso = register_correspondence(S, T, perm, tol)) {
          result = Correspondence{perm, std::move(*iso)};
          return false;
        }
        return true;
      });
  return result;
}

bool is_affinely_independent(const Simplex& V, const Tolerance& tol) {
  const int n = V.dim();
  Eigen::MatrixXd edges(n, n);
  for (int i = 0; i < n; ++i)
    edges.col(i) = V.vertices[static_cast<std::size_t>(i) + 1] - V.vertices[0];
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(edges);
  const double smallest = svd.singularValues()(n - 1);
  return smallest > tol.abs + tol.rel * diameter(V.vertices);
}

bool is_equifacetal(const Simplex& V, const Tolerance& tol) {
  const auto fs = facets(V);
  for (std::size_t k = 1; k < fs.size(); ++k)
    if (!congruent(fs[0], fs[k], tol)) return false;
  return true;
}

Simplex apply_pointwise(const Isometry& g, const Simplex& V) {
  if (g.dim() != V.dim())
    fail(ErrorKind::DimensionMismatch, "apply_pointwise: dimension mismatch");
  Simplex out;
  out.vertices.reserve(V.vertices.size());
  for (const Point& v : V.vertices) out.vertices.push_back(apply(g, v));
  return out;
}

}  // namespace eqc
