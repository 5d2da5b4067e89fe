#pragma once

// Shared fixtures for the test suites: canned simplices and small helpers.

#include <cmath>
#include <initializer_list>
#include <vector>

#include "eqc/harness.hpp"

namespace tst {

inline eqc::Point pt(std::initializer_list<double> coords) {
  eqc::Point p(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (double c : coords) p(i++) = c;
  return p;
}

inline eqc::Simplex simplex2(std::initializer_list<double> a,
                             std::initializer_list<double> b,
                             std::initializer_list<double> c) {
  return eqc::make_simplex({pt(a), pt(b), pt(c)});
}

// Right triangle with legs 3 and 4: side lengths 3, 4, 5, trivial symmetry.
inline eqc::Simplex scalene_triangle() {
  return simplex2({0, 0}, {4, 0}, {0, 3});
}

// Mirror-symmetric about the y-axis, not equilateral.
inline eqc::Simplex isosceles_triangle() {
  return simplex2({-1, 0}, {1, 0}, {0, 2});
}

inline eqc::Simplex equilateral_triangle() {
  return simplex2({0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2.0});
}

// Two coincident vertices plus one distant vertex; affinely dependent and
// not equifacetal.
inline eqc::Simplex degenerate_triangle() {
  return simplex2({0, 0}, {0, 0}, {3, 0});
}

inline eqc::Simplex regular_tetrahedron() {
  return eqc::make_simplex(
      {pt({1, 1, 1}), pt({1, -1, -1}), pt({-1, 1, -1}), pt({-1, -1, 1})});
}

inline eqc::Isometry rotation2(double angle, const eqc::Point& about) {
  Eigen::MatrixXd r(2, 2);
  r << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  return eqc::Isometry{r, about - r * about};
}

inline eqc::Isometry translation(const eqc::Point& t) {
  return eqc::Isometry{
      Eigen::MatrixXd::Identity(t.size(), t.size()), t};
}

// Multiset equality of point lists at absolute tolerance eps.
inline bool same_point_multiset(std::vector<eqc::Point> a,
                                std::vector<eqc::Point> b, double eps) {
  if (a.size() != b.size()) return false;
  std::vector<char> used(b.size(), 0);
  for (const auto& p : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!used[j] && (p - b[j]).norm() <= eps) {
        used[j] = 1;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace tst
