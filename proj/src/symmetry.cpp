#include "eqc/symmetry.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <unordered_map>

#include "eqc/detail/matching.hpp"

namespace eqc {

namespace {

// Residual bound for self-checks of computed groups and fixed subspaces.
// Deliberately not scaled by the caller's tolerance: a sloppy tolerance may
// admit bogus correspondences, but the algebra they produce must still be
// consistent, and this constant is what catches it.
constexpr double kSelfCheckTol = 1e-8;

Eigen::MatrixXd centered_matrix(const std::vector<Point>& pts,
                                const Point& centroid) {
  Eigen::MatrixXd m(centroid.size(), static_cast<Eigen::Index>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) m.col(i) = pts[i] - centroid;
  return m;
}

// Orthogonal factor aligning centered source columns to centered target
// columns. cross = target * source^T. When the data spans all of R^n the
// factor is U W^T from the SVD. Otherwise the map is fixed on the data
// span and completed on the orthogonal complements by the polar factor of
// the composed projections, which reduces to the identity whenever the two
// affine hulls coincide. Falls back to plain U W^T if the complements are
// degenerately aligned.
Eigen::MatrixXd orthogonal_factor(const Eigen::MatrixXd& cross) {
  const Eigen::Index n = cross.rows();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(
      cross, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::VectorXd sigma = svd.singularValues();
  const double smax = sigma.size() > 0 ? sigma(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i)
    if (sigma(i) > smax * 1e-12 && sigma(i) > 0.0) ++rank;

  const Eigen::MatrixXd u = svd.matrixU();
  const Eigen::MatrixXd w = svd.matrixV();
  if (rank == n) return u * w.transpose();

  const Eigen::MatrixXd ur = u.leftCols(rank);
  const Eigen::MatrixXd wr = w.leftCols(rank);
  const Eigen::MatrixXd ps =
      Eigen::MatrixXd::Identity(n, n) - wr * wr.transpose();
  const Eigen::MatrixXd pt =
      Eigen::MatrixXd::Identity(n, n) - ur * ur.transpose();
  Eigen::JacobiSVD<Eigen::MatrixXd> comp(
      pt * ps, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Index need = n - rank;
  if (comp.singularValues()(need - 1) <= 1e-9)
    return u * w.transpose();
  const Eigen::MatrixXd q = ur * wr.transpose() +
                            comp.matrixU().leftCols(need) *
                                comp.matrixV().leftCols(need).transpose();
  return q;
}

std::uint64_t encode_perm(const std::vector<int>& p) {
  std::uint64_t code = 0;
  for (int v : p) code = (code << 4) | static_cast<std::uint64_t>(v);
  return code;
}

std::vector<int> compose_perm(const std::vector<int>& a,
                              const std::vector<int>& b) {
  // (a after b)(i) = a[b[i]]
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

std::vector<int> invert_perm(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

}  // namespace

std::optional<Isometry> register_correspondence(const std::vector<Point>& S,
                                                const std::vector<Point>& T,
                                                const std::vector<int>& perm,
                                                const Tolerance& tol) {
  if (S.size() != T.size() || S.size() != perm.size() || S.empty())
    fail(ErrorKind::DimensionMismatch, "register_correspondence: cardinality mismatch");
  if (S.front().size() != T.front().size())
    fail(ErrorKind::DimensionMismatch, "register_correspondence: dimension mismatch");

  std::vector<Point> target(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) target[i] = T[perm[i]];

  const Point sc = centroid_of(S);
  const Point tc = centroid_of(target);
  const Eigen::MatrixXd cs = centered_matrix(S, sc);
  const Eigen::MatrixXd ct = centered_matrix(target, tc);

  const Eigen::MatrixXd q = orthogonal_factor(ct * cs.transpose());
  const Eigen::VectorXd t = tc - q * sc;

  double residual = 0.0;
  for (std::size_t i = 0; i < S.size(); ++i)
    residual = std::max(residual, (q * S[i] + t - target[i]).norm());

  const double scale = 1.0 + std::max(diameter(S), diameter(T));
  if (residual > tol.point_tol(scale)) return std::nullopt;
  return Isometry{q, t};
}

SymmetryGroup make_symmetry_group(Simplex base,
                                  std::vector<SymmetryElement> elements,
                                  const Tolerance& tol) {
  const int m = static_cast<int>(base.vertices.size());
  if (m > 16)
    fail(ErrorKind::Unsupported, "symmetry groups supported up to 16 vertices");

  std::unordered_map<std::uint64_t, int> index;
  index.reserve(elements.size() * 2);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto& e = elements[i];
    if (static_cast<int>(e.perm.size()) != m)
      fail(ErrorKind::InvariantViolation, "symmetry element has wrong permutation size");
    if (!index.emplace(encode_perm(e.perm), static_cast<int>(i)).second)
      fail(ErrorKind::InvariantViolation, "duplicate permutation in symmetry group");
  }

  std::vector<int> id_perm(m);
  for (int i = 0; i < m; ++i) id_perm[i] = i;
  if (!index.count(encode_perm(id_perm)))
    fail(ErrorKind::InvariantViolation, "symmetry group misses the identity");

  // Closure on the permutation parts. For an affinely independent base each
  // permutation is realized by exactly one isometry, so permutation closure
  // carries isometry closure with it; the sampled matrix checks below guard
  // the numerics.
  std::vector<std::uint64_t> codes;
  codes.reserve(elements.size());
  for (const auto& e : elements) codes.push_back(encode_perm(e.perm));
  std::vector<std::uint64_t> sorted_codes = codes;
  std::sort(sorted_codes.begin(), sorted_codes.end());
  const auto contains = [&](std::uint64_t c) {
    auto it = std::lower_bound(sorted_codes.begin(), sorted_codes.end(), c);
    return it != sorted_codes.end() && *it == c;
  };

  const std::size_t order = elements.size();
  const std::size_t full_pair_budget = 40'000'000;
  const std::size_t stride =
      std::max<std::size_t>(1, (order * order) / full_pair_budget);
  for (std::size_t a = 0; a < order; ++a) {
    if (!contains(encode_perm(invert_perm(elements[a].perm))))
      fail(ErrorKind::InvariantViolation, "symmetry group not closed under inverse");
    for (std::size_t b = a % stride; b < order; b += stride) {
      if (!contains(encode_perm(compose_perm(elements[a].perm, elements[b].perm))))
        fail(ErrorKind::InvariantViolation, "symmetry group not closed under composition");
    }
  }

  const double diam = diameter(base.vertices);
  const double iso_tol =
      std::max(kSelfCheckTol * (1.0 + diam), 10.0 * tol.point_tol(1.0 + diam));

  // Identity permutation must carry the identity isometry.
  {
    const auto& e = elements[index.at(encode_perm(id_perm))];
    const int n = base.dim();
    if ((e.iso.linear - Eigen::MatrixXd::Identity(n, n)).norm() +
            e.iso.translation.norm() >
        iso_tol)
      fail(ErrorKind::InvariantViolation, "identity permutation carries a non-identity isometry");
  }

  std::size_t checked = 0;
  for (std::size_t a = 0; a < order && checked < 2000; ++a) {
    for (std::size_t b = 0; b < order && checked < 2000; ++b, ++checked) {
      const auto composed = compose_perm(elements[a].perm, elements[b].perm);
      auto it = index.find(encode_perm(composed));
      if (it == index.end())
        fail(ErrorKind::InvariantViolation, "symmetry group not closed under composition");
      const Isometry g = compose(elements[a].iso, elements[b].iso);
      const Isometry& h = elements[it->second].iso;
      if ((g.linear - h.linear).norm() + (g.translation - h.translation).norm() >
          iso_tol)
        fail(ErrorKind::InvariantViolation,
             "composed isometry disagrees with the stored element of its permutation");
    }
  }

  return SymmetryGroup{std::move(base), std::move(elements)};
}

SymmetryGroup symmetry_group(const Simplex& V, const Tolerance& tol) {
  if (!is_affinely_independent(V, tol))
    fail(ErrorKind::AffinelyDependent,
         "stabilizer of an affinely dependent simplex is infinite");

  std::vector<SymmetryElement> elements;
  detail::for_each_distance_matching(
      V.vertices, V.vertices, tol, [&](const std::vector<int>& perm) {
        if (auto iso = register_correspondence(V.vertices, V.vertices, perm, tol))
          elements.push_back(SymmetryElement{std::move(*iso), perm});
        return true;
      });
  return make_symmetry_group(V, std::move(elements), tol);
}

double AffineSubspace::distance_to(const Point& p) const {
  Eigen::VectorXd d = p - base_point;
  for (const auto& dir : directions) d -= dir.dot(d) * dir;
  return d.norm();
}

AffineSubspace fixed_subspace(const SymmetryGroup& H, const Tolerance& tol) {
  if (H.elements.empty())
    fail(ErrorKind::InvariantViolation, "fixed_subspace of an empty group");
  const int n = H.base.dim();

  // Rows for every element that actually constrains something.
  std::vector<const SymmetryElement*> constraining;
  for (const auto& e : H.elements) {
    if ((e.iso.linear - Eigen::MatrixXd::Identity(n, n)).norm() > 0.0 ||
        e.iso.translation.norm() > 0.0)
      constraining.push_back(&e);
  }

  AffineSubspace result;
  if (constraining.empty()) {
    result.base_point = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i)
      result.directions.push_back(Eigen::VectorXd::Unit(n, i));
  } else {
    Eigen::MatrixXd a(static_cast<Eigen::Index>(constraining.size()) * n, n);
    Eigen::VectorXd b(a.rows());
    for (std::size_t k = 0; k < constraining.size(); ++k) {
      const auto& e = *constraining[k];
      a.middleRows(static_cast<Eigen::Index>(k) * n, n) =
          e.iso.linear - Eigen::MatrixXd::Identity(n, n);
      b.segment(static_cast<Eigen::Index>(k) * n, n) = -e.iso.translation;
    }
    Eigen::BDCSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeFullV);
    result.base_point = svd.solve(b);

    const Eigen::VectorXd sigma = svd.singularValues();
    const double cutoff = 1e-7 * (sigma(0) + 1.0);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double s = i < sigma.size() ? sigma(i) : 0.0;
      if (s > cutoff) continue;
      Eigen::VectorXd dir = svd.matrixV().col(i);
      // Deterministic sign: largest-magnitude component positive.
      Eigen::Index imax = 0;
      dir.cwiseAbs().maxCoeff(&imax);
      if (dir(imax) < 0.0) dir = -dir;
      result.directions.push_back(std::move(dir));
    }
  }

  const double scale =
      1.0 + diameter(H.base.vertices) + result.base_point.norm();
  const double thresh = std::max(kSelfCheckTol * scale, tol.point_tol(scale));
  for (const auto& e : H.elements) {
    if ((apply(e.iso, result.base_point) - result.base_point).norm() > thresh)
      fail(ErrorKind::InvariantViolation,
           "fixed-subspace base point is not fixed by the group");
    for (const auto& dir : result.directions)
      if ((e.iso.linear * dir - dir).norm() > thresh)
        fail(ErrorKind::InvariantViolation,
             "fixed-subspace direction is not invariant under the group");
  }
  return result;
}

bool is_vertex_transitive(const SymmetryGroup& H) {
  const int m = static_cast<int>(H.base.vertices.size());
  if (m == 0) return false;
  std::vector<char> in_orbit(m, 0);
  std::vector<int> queue{0};
  in_orbit[0] = 1;
  int seen = 1;
  while (!queue.empty()) {
    const int v = queue.back();
    queue.pop_back();
    for (const auto& e : H.elements) {
      const int w = e.perm[v];
      if (!in_orbit[w]) {
        in_orbit[w] = 1;
        ++seen;
        queue.push_back(w);
      }
    }
  }
  return seen == m;
}

std::optional<Isometry> register_simplex(const Simplex& V, const Simplex& W,
                                         const Tolerance& tol) {
  if (V.dim() != W.dim())
    fail(ErrorKind::DimensionMismatch, "register_simplex: dimension mismatch");
  if (!is_affinely_independent(V, tol))
    fail(ErrorKind::AffinelyDependent,
         "register_simplex requires an affinely independent source simplex");

  std::optional<Isometry> result;
  detail::for_each_distance_matching(
      V.vertices, W.vertices, tol, [&](const std::vector<int>& perm) {
        if (auto iso = register_correspondence(V.vertices, W.vertices, perm, tol)) {
          result = std::move(*iso);
          return false;
        }
        return true;
      });
  return result;
}

}  // namespace eqc
