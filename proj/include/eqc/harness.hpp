#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "eqc/centers.hpp"

namespace eqc {

// Evidence that a simplex is not equifacetal: an equivariant center whose
// value provably separates from the centroid. The witness is validated for
// equivariance on a batch of random isometries before the certificate is
// issued, so it is a genuine center and not just a point.
struct Certificate {
  Simplex simplex;
  Point centroid_value;
  CenterFunction witness_center;
  Point witness_value;
  double separation;
};

struct CenterCheck {
  std::string center_id;
  Point value;
  double residual;
};

// Evidence that all computed centers of an equifacetal simplex agree. For
// affinely independent input the_point is the unique fixed point of the
// symmetry group and fixed_dim is 0; for degenerate input the centers are
// compared against the centroid and fixed_dim is -1 (stabilizer infinite).
struct CoincidenceReport {
  Simplex simplex;
  Point the_point;
  std::vector<CenterCheck> centers_checked;
  int fixed_dim = -1;
};

// n+1 pairwise equidistant points in R^n with edge length 1. Supported for
// 1 <= n <= 7.
Simplex regular_simplex(int n);

// Vertices (x,y,z), (x,-y,-z), (-x,y,-z), (-x,-y,z): opposite edges equal,
// hence equifacetal. Parameters must be positive; the all-equal case is the
// regular tetrahedron and is rejected unless allow_regular is set.
Simplex isosceles_tetrahedron(double x, double y, double z,
                              bool allow_regular = false);

// n+1 points with coordinates in [-1,1], resampled until affinely
// independent; deterministic per (n, seed).
Simplex random_simplex(int n, std::uint64_t seed);

// Evaluates every total center and, for affinely independent input,
// confirms the fixed subspace is a single point all values agree with.
// Throws NotEquifacetal when the precondition fails and InvariantViolation
// when a residual exceeds tolerance.
CoincidenceReport verify_coincidence(const Simplex& V, const Tolerance& tol = {});

// Builds a separation witness for a non-equifacetal simplex. Affinely
// dependent input uses the h-weighted center; independent input picks the
// anchor centroid + diameter * (first fixed direction) and transports it
// along the orbit. The witness is re-checked for equivariance on
// equivariance_checks random isometries derived from validation_seed.
// Fails loudly (InvariantViolation) rather than emit a weak certificate.
Certificate certificate_of_noncoincidence(const Simplex& V,
                                          const Tolerance& tol = {},
                                          std::uint64_t validation_seed = 0xEC5EEDULL,
                                          int equivariance_checks = 100);

struct InstanceResult {
  int dim = 0;
  std::string instance;
  bool equifacetal = false;
  bool pass = false;
  double residual = 0.0;    // coincidence branch: worst center residual
  double separation = 0.0;  // certificate branch
  std::string message;      // failure diagnostics
};

// Order-independent accumulator: counts add, extrema combine, so partial
// summaries from concurrent workers can be merged in any order.
struct DimStats {
  int dim = 0;
  int instances = 0;
  int coincidence_pass = 0;
  int coincidence_fail = 0;
  int certificate_pass = 0;
  int certificate_fail = 0;
  double max_residual = 0.0;
  double min_separation = std::numeric_limits<double>::infinity();

  void add(const InstanceResult& r);
  void merge(const DimStats& other);
};

struct TrialSummary {
  std::uint64_t seed = 0;
  std::vector<int> dims;
  int count = 0;
  Tolerance tol;
  std::vector<DimStats> per_dim;                // sorted by dim
  std::vector<InstanceResult> failures;         // sorted by (dim, instance)

  int total_instances() const;
  int total_failures() const;
  void merge(const TrialSummary& other);
  void normalize();  // sort per_dim and failures into canonical order
};

// Runs the canned equifacetal families plus `count` random simplices per
// dimension, routing each instance to verify_coincidence or
// certificate_of_noncoincidence. Per-instance failures are recorded, not
// thrown. Deterministic per seed.
TrialSummary run_trials(const std::vector<int>& dims, int count,
                        std::uint64_t seed, const Tolerance& tol = {});

}  // namespace eqc
