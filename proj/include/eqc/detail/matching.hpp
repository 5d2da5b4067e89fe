#pragma once

#include <functional>
#include <vector>

#include "eqc/geometry.hpp"

namespace eqc::detail {

// Enumerates bijections pi of {0..m-1} with |S_i - S_k| = |T_pi(i) - T_pi(k)|
// for all i,k at tolerance. Source vertices are processed sorted by their
// sorted distance-row (most constrained groups first in lexicographic order);
// candidates are pruned by the same row invariant and by distances to the
// already-assigned prefix. visit returns false to stop the search early.
//
// Requires |S| == |T| and equal ambient dimensions (caller-checked).
void for_each_distance_matching(
    const std::vector<Point>& S, const std::vector<Point>& T,
    const Tolerance& tol,
    const std::function<bool(const std::vector<int>&)>& visit);

}  // namespace eqc::detail
