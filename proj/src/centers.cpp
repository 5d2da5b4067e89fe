#include "eqc/centers.hpp"

#include <cmath>
#include <sstream>

namespace eqc {

namespace {

// 2x2 solve by Cramer's rule; caller has already rejected small determinants.
Point solve2(double a00, double a01, double a10, double a11, double b0,
             double b1) {
  const double det = a00 * a11 - a01 * a10;
  Point x(2);
  x << (b0 * a11 - b1 * a01) / det, (a00 * b1 - a10 * b0) / det;
  return x;
}

void require_triangle(const Point& a, const Point& b, const Point& c) {
  if (a.size() != 2 || b.size() != 2 || c.size() != 2)
    fail(ErrorKind::DimensionMismatch, "classical triangle centers live in R^2");
}

// Twice the signed area; the collinearity test compares the corresponding
// minimum altitude against the point tolerance.
double cross2(const Point& u, const Point& v) {
  return u(0) * v(1) - u(1) * v(0);
}

bool collinear(const Point& a, const Point& b, const Point& c,
               const Tolerance& tol) {
  const double d = diameter({a, b, c});
  if (d == 0.0) return true;
  return std::abs(cross2(b - a, c - a)) <= tol.point_tol(1.0 + d) * d;
}

}  // namespace

std::string CenterFunction::id() const {
  struct Visitor {
    std::string operator()(const CentroidCenter&) const { return "centroid"; }
    std::string operator()(const HWeightedCenter&) const { return "h_weighted"; }
    std::string operator()(const OrbitTransportCenter&) const {
      return "orbit_transport";
    }
    std::string operator()(const TriangleClassicalCenter& t) const {
      switch (t.kind) {
        case TriangleCenterKind::Incenter: return "incenter";
        case TriangleCenterKind::Orthocenter: return "orthocenter";
        case TriangleCenterKind::Circumcenter: return "circumcenter";
      }
      return "triangle";
    }
  };
  return std::visit(Visitor{}, variant);
}

CenterFunction make_centroid_center() { return CenterFunction{CentroidCenter{}}; }

CenterFunction make_h_weighted_center() {
  return CenterFunction{HWeightedCenter{}};
}

CenterFunction make_triangle_center(TriangleCenterKind kind) {
  return CenterFunction{TriangleClassicalCenter{kind}};
}

CenterFunction make_orbit_center(const Simplex& base, const Point& anchor,
                                 const Tolerance& tol) {
  if (anchor.size() != base.dim())
    fail(ErrorKind::DimensionMismatch, "anchor/base dimension mismatch");
  const SymmetryGroup group = symmetry_group(base, tol);
  const double scale = 1.0 + diameter(base.vertices) +
                       (anchor - centroid_of(base.vertices)).norm();
  for (std::size_t i = 0; i < group.elements.size(); ++i) {
    const double residual =
        (apply(group.elements[i].iso, anchor) - anchor).norm();
    if (residual > tol.point_tol(scale)) {
      std::ostringstream msg;
      msg << "anchor is moved by symmetry #" << i << " (permutation";
      for (int p : group.elements[i].perm) msg << ' ' << p;
      msg << "), residual " << residual;
      fail(ErrorKind::AnchorNotFixed, msg.str());
    }
  }
  return CenterFunction{OrbitTransportCenter{base, anchor}};
}

Point centroid(const Simplex& V) { return centroid_of(V.vertices); }

Point h_weighted_center(const Simplex& V, const Tolerance& tol) {
  const Point c = centroid(V);
  if (diameter(V.vertices) <= tol.point_tol(1.0)) return c;

  const std::size_t m = V.vertices.size();
  Eigen::VectorXd h(static_cast<Eigen::Index>(m));
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Point> others;
    others.reserve(m - 1);
    for (std::size_t j = 0; j < m; ++j)
      if (j != i) others.push_back(V.vertices[j]);
    h(static_cast<Eigen::Index>(i)) =
        (V.vertices[i] - centroid_of(others)).norm();
  }
  // Not all vertices coincide, so some vertex differs from the centroid of
  // the others and the weight sum is positive.
  const double total = h.sum();
  Point out = Eigen::VectorXd::Zero(V.dim());
  for (std::size_t i = 0; i < m; ++i)
    out += (h(static_cast<Eigen::Index>(i)) / total) * V.vertices[i];
  return out;
}

Point incenter(const Point& a, const Point& b, const Point& c,
               const Tolerance& tol) {
  require_triangle(a, b, c);
  const double la = (b - c).norm();
  const double lb = (c - a).norm();
  const double lc = (a - b).norm();
  const double s = la + lb + lc;
  if (s <= tol.point_tol(1.0))
    fail(ErrorKind::Collinear, "incenter undefined: all vertices coincide");
  return (la * a + lb * b + lc * c) / s;
}

Point circumcenter(const Point& a, const Point& b, const Point& c,
                   const Tolerance& tol) {
  require_triangle(a, b, c);
  if (collinear(a, b, c, tol))
    fail(ErrorKind::Collinear, "circumcenter undefined for collinear vertices");
  const Point u = b - a;
  const Point v = c - a;
  return solve2(2.0 * u(0), 2.0 * u(1), 2.0 * v(0), 2.0 * v(1),
                b.squaredNorm() - a.squaredNorm(),
                c.squaredNorm() - a.squaredNorm());
}

Point orthocenter(const Point& a, const Point& b, const Point& c,
                  const Tolerance& tol) {
  require_triangle(a, b, c);
  if (collinear(a, b, c, tol))
    fail(ErrorKind::Collinear, "orthocenter undefined for collinear vertices");
  const Point u = c - b;  // altitude through a
  const Point v = c - a;  // altitude through b
  return solve2(u(0), u(1), v(0), v(1), u.dot(a), v.dot(b));
}

Point evaluate(const CenterFunction& z, const Simplex& W, const Tolerance& tol) {
  struct Visitor {
    const Simplex& w;
    const Tolerance& tol;

    Point operator()(const CentroidCenter&) const { return centroid(w); }

    Point operator()(const HWeightedCenter&) const {
      return h_weighted_center(w, tol);
    }

    Point operator()(const OrbitTransportCenter& z) const {
      if (z.base.dim() != w.dim())
        fail(ErrorKind::DimensionMismatch,
             "orbit-transport center evaluated in the wrong dimension");
      auto g = register_simplex(z.base, w, tol);
      if (!g)
        fail(ErrorKind::OutOfDomain,
             "simplex is not congruent to the base of this orbit-transport center");
      return apply(*g, z.anchor);
    }

    Point operator()(const TriangleClassicalCenter& z) const {
      if (w.dim() != 2)
        fail(ErrorKind::DimensionMismatch,
             "classical triangle centers are defined for planar triangles only");
      const Point& a = w.vertices[0];
      const Point& b = w.vertices[1];
      const Point& c = w.vertices[2];
      switch (z.kind) {
        case TriangleCenterKind::Incenter: return incenter(a, b, c, tol);
        case TriangleCenterKind::Orthocenter: return orthocenter(a, b, c, tol);
        case TriangleCenterKind::Circumcenter: return circumcenter(a, b, c, tol);
      }
      fail(ErrorKind::InvariantViolation, "unknown triangle center kind");
    }
  };
  return std::visit(Visitor{W, tol}, z.variant);
}

Conic make_conic(const Eigen::Matrix3d& matrix) {
  const double scale = matrix.norm();
  if (scale == 0.0)
    fail(ErrorKind::Unsupported, "conic matrix must be nonzero");
  if ((matrix - matrix.transpose()).norm() > 1e-12 * scale)
    fail(ErrorKind::Unsupported, "conic matrix must be symmetric");
  return Conic{matrix};
}

Point conic_center(const Conic& c, const Tolerance& tol) {
  const double a = c.matrix(0, 0);
  const double b = c.matrix(0, 1);
  const double cc = c.matrix(1, 1);
  const double d = c.matrix(0, 2);
  const double e = c.matrix(1, 2);
  const double det = a * cc - b * b;
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(cc)});
  if (std::abs(det) <= tol.point_tol(scale) * std::max(scale, 1.0))
    fail(ErrorKind::NoAffineCenter,
         "conic has no affine center (pole lies on the line at infinity)");
  return solve2(a, b, b, cc, -d, -e);
}

bool check_equivariance(const CenterFunction& z, const Simplex& V,
                        const Isometry& g, const Tolerance& tol) {
  const Point lhs = evaluate(z, apply_pointwise(g, V), tol);
  const Point rhs = apply(g, evaluate(z, V, tol));
  return (lhs - rhs).norm() <= tol.point_tol(1.0 + diameter(V.vertices));
}

}  // namespace eqc
