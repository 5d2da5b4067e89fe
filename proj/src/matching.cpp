#include "eqc/detail/matching.hpp"

#include <algorithm>
#include <numeric>

namespace eqc::detail {

namespace {

std::vector<std::vector<double>> sorted_rows(const Eigen::MatrixXd& d) {
  std::vector<std::vector<double>> rows(d.rows());
  for (Eigen::Index i = 0; i < d.rows(); ++i) {
    rows[i].assign(d.row(i).begin(), d.row(i).end());
    std::sort(rows[i].begin(), rows[i].end());
  }
  return rows;
}

bool rows_match(const std::vector<double>& a, const std::vector<double>& b,
                const Tolerance& tol) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!tol.length_eq(a[k], b[k])) return false;
  return true;
}

struct SearchState {
  const Eigen::MatrixXd* ds;
  const Eigen::MatrixXd* dt;
  const Tolerance* tol;
  const std::function<bool(const std::vector<int>&)>* visit;
  std::vector<int> source_order;              // source indices, most constrained first
  std::vector<std::vector<int>> candidates;   // per source index, admissible targets
  std::vector<int> perm;                      // source index -> target index
  std::vector<char> used;
  bool stopped = false;

  void backtrack(std::size_t pos) {
    if (stopped) return;
    if (pos == source_order.size()) {
      if (!(*visit)(perm)) stopped = true;
      return;
    }
    const int i = source_order[pos];
    for (int j : candidates[i]) {
      if (used[j]) continue;
      bool ok = true;
      for (std::size_t q = 0; q < pos && ok; ++q) {
        const int k = source_order[q];
        ok = tol->length_eq((*ds)(i, k), (*dt)(j, perm[k]));
      }
      if (!ok) continue;
      used[j] = 1;
      perm[i] = j;
      backtrack(pos + 1);
      used[j] = 0;
      if (stopped) return;
    }
  }
};

}  // namespace

void for_each_distance_matching(
    const std::vector<Point>& S, const std::vector<Point>& T,
    const Tolerance& tol,
    const std::function<bool(const std::vector<int>&)>& visit) {
  const int m = static_cast<int>(S.size());
  if (m == 0) return;

  const Eigen::MatrixXd ds = distance_matrix(S);
  const Eigen::MatrixXd dt = distance_matrix(T);
  const auto rows_s = sorted_rows(ds);
  const auto rows_t = sorted_rows(dt);

  // Target indices in sorted-row order, so that when S == T the identity
  // assignment is the first one explored.
  std::vector<int> target_order(m);
  std::iota(target_order.begin(), target_order.end(), 0);
  std::stable_sort(target_order.begin(), target_order.end(),
                   [&](int a, int b) { return rows_t[a] < rows_t[b]; });

  SearchState st;
  st.ds = &ds;
  st.dt = &dt;
  st.tol = &tol;
  st.visit = &visit;

  st.source_order.resize(m);
  std::iota(st.source_order.begin(), st.source_order.end(), 0);
  std::stable_sort(st.source_order.begin(), st.source_order.end(),
                   [&](int a, int b) { return rows_s[a] < rows_s[b]; });

  st.candidates.resize(m);
  for (int i = 0; i < m; ++i) {
    for (int j : target_order)
      if (rows_match(rows_s[i], rows_t[j], tol)) st.candidates[i].push_back(j);
    if (st.candidates[i].empty()) return;  // some vertex has no possible image
  }

  st.perm.assign(m, -1);
  st.used.assign(m, 0);
  st.backtrack(0);
}

}  // namespace eqc::detail
