#include "egc/simplex.hpp"

#include "egc/errors.hpp"

namespace egc {

namespace {

// Dense tableau: rows of B^-1 A with the rhs kept separately.
struct Tableau {
  std::vector<std::vector<Scalar>> t;  // m x n
  std::vector<Scalar> rhs;             // m
  std::vector<int> basis;              // column basic in each row

  int rows() const { return static_cast<int>(t.size()); }
  int cols() const { return rows() ? static_cast<int>(t[0].size()) : 0; }

  void pivot(int row, int col) {
    Scalar p = t[row][col];
    for (auto& v : t[row]) v /= p;
    rhs[row] /= p;
    for (int i = 0; i < rows(); ++i) {
      if (i == row || t[i][col].is_zero()) continue;
      Scalar factor = t[i][col];
      for (int j = 0; j < cols(); ++j) t[i][j] -= factor * t[row][j];
      rhs[i] -= factor * rhs[row];
    }
    basis[row] = col;
  }
};

// Runs simplex iterations for the given objective over the allowed columns.
// Returns false when unbounded.
bool optimize(Tableau& tab, const std::vector<Scalar>& obj, int allowed_cols) {
  while (true) {
    // reduced cost r_j = obj_j - obj_basis . column_j; Bland: first positive
    int entering = -1;
    for (int j = 0; j < allowed_cols && entering < 0; ++j) {
      Scalar r = obj[j];
      for (int i = 0; i < tab.rows(); ++i) {
        if (tab.t[i][j].is_zero()) continue;
        r -= obj[tab.basis[i]] * tab.t[i][j];
      }
      if (r > Scalar(0)) entering = j;
    }
    if (entering < 0) return true;
    int leaving = -1;
    Scalar best_ratio(0);
    for (int i = 0; i < tab.rows(); ++i) {
      if (tab.t[i][entering] <= Scalar(0)) continue;
      Scalar ratio = tab.rhs[i] / tab.t[i][entering];
      if (leaving < 0 || ratio < best_ratio ||
          (ratio == best_ratio && tab.basis[i] < tab.basis[leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving < 0) return false;
    tab.pivot(leaving, entering);
  }
}

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
  int m = static_cast<int>(lp.A.size());
  int n = static_cast<int>(lp.c.size());
  for (const auto& row : lp.A)
    if (static_cast<int>(row.size()) != n)
      fail(Errc::invalid_parameter, "LP row length does not match objective length");
  if (static_cast<int>(lp.b.size()) != m)
    fail(Errc::invalid_parameter, "LP rhs length does not match row count");

  Tableau tab;
  tab.t.assign(m, std::vector<Scalar>(n + m, Scalar(0)));
  tab.rhs.assign(m, Scalar(0));
  tab.basis.resize(m);
  for (int i = 0; i < m; ++i) {
    bool flip = lp.b[i] < Scalar(0);
    for (int j = 0; j < n; ++j) tab.t[i][j] = flip ? -lp.A[i][j] : lp.A[i][j];
    tab.rhs[i] = flip ? -lp.b[i] : lp.b[i];
    tab.t[i][n + i] = Scalar(1);  // artificial
    tab.basis[i] = n + i;
  }

  // Phase one: maximize minus the sum of artificials.
  std::vector<Scalar> phase1(n + m, Scalar(0));
  for (int i = 0; i < m; ++i) phase1[n + i] = Scalar(-1);
  optimize(tab, phase1, n + m);  // bounded by construction

  Scalar infeas(0);
  for (int i = 0; i < m; ++i)
    if (tab.basis[i] >= n) infeas += tab.rhs[i];
  if (infeas > Scalar(0)) return {LpStatus::infeasible, Scalar(0), {}};

  // Drive leftover (value-zero) artificials out of the basis; a row with no
  // structural coefficient left is redundant and can be ignored by zeroing.
  for (int i = 0; i < tab.rows(); ++i) {
    if (tab.basis[i] < n) continue;
    int col = -1;
    for (int j = 0; j < n && col < 0; ++j)
      if (!tab.t[i][j].is_zero()) col = j;
    if (col >= 0) tab.pivot(i, col);
  }
  std::vector<int> keep;
  for (int i = 0; i < tab.rows(); ++i)
    if (tab.basis[i] < n) keep.push_back(i);
  if (static_cast<int>(keep.size()) != tab.rows()) {
    Tableau reduced;
    for (int i : keep) {
      reduced.t.push_back(std::move(tab.t[i]));
      reduced.rhs.push_back(std::move(tab.rhs[i]));
      reduced.basis.push_back(tab.basis[i]);
    }
    tab = std::move(reduced);
  }

  // Phase two on structural columns only.
  std::vector<Scalar> phase2(n + m, Scalar(0));
  for (int j = 0; j < n; ++j) phase2[j] = lp.c[j];
  if (!optimize(tab, phase2, n)) return {LpStatus::unbounded, Scalar(0), {}};

  LpResult result{LpStatus::optimal, Scalar(0), std::vector<Scalar>(n, Scalar(0))};
  for (int i = 0; i < tab.rows(); ++i)
    if (tab.basis[i] < n) result.x[tab.basis[i]] = tab.rhs[i];
  for (int j = 0; j < n; ++j) result.objective += lp.c[j] * result.x[j];
  return result;
}

}  // namespace egc
