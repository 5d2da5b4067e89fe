#pragma once

#include <optional>
#include <vector>

#include "eqc/geometry.hpp"

namespace eqc {

// n+1 points of R^n kept as an ordered list with multiset semantics:
// coincident vertices are allowed and no operation depends on the order.
// Affine independence is not required.
struct Simplex {
  std::vector<Point> vertices;

  int dim() const {
    return vertices.empty() ? 0 : static_cast<int>(vertices.front().size());
  }
};

// Validates the vertex-count/dimension relation and finiteness.
Simplex make_simplex(std::vector<Point> vertices);

// Witness that two point lists are congruent: the isometry sends source
// point i onto target point perm[i].
struct Correspondence {
  std::vector<int> perm;
  Isometry isometry;
};

// Facet k is the vertex list of V with index k removed; n+1 facets in
// index order, each of n points.
std::vector<std::vector<Point>> facets(const Simplex& V);

// Searches for an isometry g and permutation pi with g*S[i] = T[pi[i]].
// Backtracking over permutations pruned by per-vertex sorted distance
// rows, each full candidate validated by rigid registration.
std::optional<Correspondence> congruent(const std::vector<Point>& S,
                                        const std::vector<Point>& T,
                                        const Tolerance& tol = {});

// True iff the edge vectors from vertex 0 have smallest singular value
// above tol.abs + tol.rel * diameter(V).
bool is_affinely_independent(const Simplex& V, const Tolerance& tol = {});

// All facets congruent to facet 0. The all-coincident simplex counts as
// equifacetal (its facets are identical).
bool is_equifacetal(const Simplex& V, const Tolerance& tol = {});

// Point-wise action of g: vertex i of the result is g applied to vertex i.
Simplex apply_pointwise(const Isometry& g, const Simplex& V);

}  // namespace eqc
