#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <vector>

#include "eqc/error.hpp"

namespace eqc {

using Point = Eigen::VectorXd;

// Frobenius-norm bound on Q^T Q - I accepted as "orthogonal".
inline constexpr double kOrthTol = 1e-8;

// Single comparison policy threaded through every numeric test.
// Two lengths are equal iff |a-b| <= abs + rel*max(|a|,|b|); point
// residuals are compared against abs + rel*scale for a caller-chosen
// characteristic scale (typically 1 + diameter of the data).
struct Tolerance {
  double abs = 1e-9;
  double rel = 1e-9;

  bool length_eq(double a, double b) const {
    return std::abs(a - b) <= abs + rel * std::max(std::abs(a), std::abs(b));
  }

  double point_tol(double scale) const { return abs + rel * scale; }
};

// Rigid motion of R^n stored as p -> linear*p + translation, with the
// linear part orthogonal (rotations and reflections both allowed).
struct Isometry {
  Eigen::MatrixXd linear;
  Eigen::VectorXd translation;

  int dim() const { return static_cast<int>(translation.size()); }
};

Isometry identity_isometry(int dim);

// Validating factory: checks shapes and orthogonality of the linear part.
Isometry make_isometry(Eigen::MatrixXd linear, Eigen::VectorXd translation);

bool is_orthogonal(const Eigen::MatrixXd& m, double tol = kOrthTol);

Point apply(const Isometry& g, const Point& p);

// Composition acting as g after h: apply(compose(g,h), p) == apply(g, apply(h, p)).
Isometry compose(const Isometry& g, const Isometry& h);

Isometry inverse(const Isometry& g);

// Deterministic pseudo-random element of E(n): the linear part is the
// Q factor of a seeded random matrix (R-diagonal signs fixed, then the
// determinant sign flipped by one extra random bit so both components
// of O(n) are hit), the translation has entries in [-scale, scale].
Isometry random_isometry(std::uint64_t seed, int dim, double translation_scale);

// Symmetric matrix of pairwise Euclidean distances, zero diagonal.
Eigen::MatrixXd distance_matrix(const std::vector<Point>& points);

Point centroid_of(const std::vector<Point>& points);

// Largest pairwise distance; zero for empty or singleton input.
double diameter(const std::vector<Point>& points);

bool points_close(const Point& a, const Point& b, double eps);

}  // namespace eqc
