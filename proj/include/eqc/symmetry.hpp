#pragma once

#include <optional>
#include <vector>

#include "eqc/simplex.hpp"

namespace eqc {

// One symmetry of a simplex: the isometry sends base vertex i onto base
// vertex perm[i].
struct SymmetryElement {
  Isometry iso;
  std::vector<int> perm;
};

// Finite stabilizer of a full-dimensional simplex inside E(n). Contains
// the identity and is closed under composition and inverse; both facts
// are checked when the group is built.
struct SymmetryGroup {
  Simplex base;
  std::vector<SymmetryElement> elements;

  std::size_t order() const { return elements.size(); }
};

// Validating factory: identity present, permutation parts closed under
// composition and inverse, isometries consistent with their permutations
// on a bounded sample of pairs. Throws InvariantViolation otherwise.
SymmetryGroup make_symmetry_group(Simplex base,
                                  std::vector<SymmetryElement> elements,
                                  const Tolerance& tol = {});

// Affine solution set of the stacked fixed-point equations of a group,
// stored as base point plus orthonormal spanning directions.
struct AffineSubspace {
  Point base_point;
  std::vector<Eigen::VectorXd> directions;

  int dim() const { return static_cast<int>(directions.size()); }

  // Euclidean distance from p to the subspace.
  double distance_to(const Point& p) const;
};

// Least-squares rigid alignment sending S[i] onto T[perm[i]]: centroid
// shift plus the orthogonal factor of the cross-covariance of the centered
// sets. On rank deficiency the map is completed on the null directions so
// that it stays as close to the identity as the two affine hulls allow.
// Empty result when the best alignment leaves a residual above tolerance.
std::optional<Isometry> register_correspondence(const std::vector<Point>& S,
                                                const std::vector<Point>& T,
                                                const std::vector<int>& perm,
                                                const Tolerance& tol = {});

// Full stabilizer of an affinely independent simplex: every vertex
// permutation preserving the distance matrix, each realized by exactly one
// isometry. Affinely dependent input is rejected (its stabilizer in E(n)
// is infinite).
SymmetryGroup symmetry_group(const Simplex& V, const Tolerance& tol = {});

// Solves (Q_k - I) p = -t_k over all group elements. The result is never
// empty: the centroid of the base simplex satisfies every equation. The
// base point is the minimum-norm solution; directions span the common
// null space (singular values below 1e-7 * (sigma_max + 1) count as zero).
AffineSubspace fixed_subspace(const SymmetryGroup& H, const Tolerance& tol = {});

// True iff the permutation parts act with a single orbit on vertex indices.
bool is_vertex_transitive(const SymmetryGroup& H);

// Any isometry g with g*V = W as multisets, found by congruence search;
// empty when V and W are not congruent. Callers must not assume a
// particular witness. V must be affinely independent.
std::optional<Isometry> register_simplex(const Simplex& V, const Simplex& W,
                                         const Tolerance& tol = {});

}  // namespace eqc
