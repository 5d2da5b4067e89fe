#pragma once

#include <string>
#include <variant>

#include "eqc/symmetry.hpp"

namespace eqc {

// Centers are partial equivariant maps from simplices to points. Each
// variant declares its own domain: the centroid and the h-weighted center
// are total, the orbit-transport center lives on the orbit of its base
// simplex, and the classical triangle centers live on non-collinear
// triangles in the plane.
enum class TriangleCenterKind { Incenter, Orthocenter, Circumcenter };

struct CentroidCenter {};
struct HWeightedCenter {};

// Constructive center pinned to one orbit: the anchor is a point fixed by
// every symmetry of the base, and the value at a congruent copy W is the
// anchor pushed through any isometry registering base onto W. The fixed-
// anchor invariant is exactly what makes the value witness-independent.
struct OrbitTransportCenter {
  Simplex base;
  Point anchor;
};

struct TriangleClassicalCenter {
  TriangleCenterKind kind;
};

struct CenterFunction {
  std::variant<CentroidCenter, HWeightedCenter, OrbitTransportCenter,
               TriangleClassicalCenter>
      variant;

  // Stable identifier used in reports: "centroid", "h_weighted",
  // "orbit_transport", "incenter", "orthocenter", "circumcenter".
  std::string id() const;
};

CenterFunction make_centroid_center();
CenterFunction make_h_weighted_center();
CenterFunction make_triangle_center(TriangleCenterKind kind);

// Validates that the anchor is fixed by every symmetry of the base (the
// base must be affinely independent so its stabilizer is finite). Throws
// AnchorNotFixed with the offending element and residual otherwise.
CenterFunction make_orbit_center(const Simplex& base, const Point& anchor,
                                 const Tolerance& tol = {});

// Arithmetic mean of the vertices.
Point centroid(const Simplex& V);

// Weights vertex i by h_i, its distance to the centroid of the other
// vertices; degenerates to the centroid when all vertices coincide.
Point h_weighted_center(const Simplex& V, const Tolerance& tol = {});

Point incenter(const Point& a, const Point& b, const Point& c,
               const Tolerance& tol = {});
Point orthocenter(const Point& a, const Point& b, const Point& c,
                  const Tolerance& tol = {});
Point circumcenter(const Point& a, const Point& b, const Point& c,
                   const Tolerance& tol = {});

// Evaluates a center at a simplex. Throws OutOfDomain when an orbit-
// transport center meets a simplex not congruent to its base, Collinear
// when a classical triangle center meets a degenerate triangle.
Point evaluate(const CenterFunction& z, const Simplex& W,
               const Tolerance& tol = {});

// Projective conic x^T A x = 0 given by a symmetric nonzero 3x3 matrix.
struct Conic {
  Eigen::Matrix3d matrix;
};

Conic make_conic(const Eigen::Matrix3d& matrix);

// Affine center of the conic: solves the 2x2 leading block against the
// mixed terms. Throws NoAffineCenter when the block is singular at
// tolerance (parabolas and degenerate cases).
Point conic_center(const Conic& c, const Tolerance& tol = {});

// Tests Z(g*V) = g*Z(V) with residual measured against
// tol.point_tol(1 + diameter(V)). Evaluation errors propagate.
bool check_equivariance(const CenterFunction& z, const Simplex& V,
                        const Isometry& g, const Tolerance& tol = {});

}  // namespace eqc
