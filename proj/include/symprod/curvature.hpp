#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "symprod/rational.hpp"

namespace symprod::curvature {

/// Point of the ordered simplex: r_1 >= ... >= r_m >= 0, sum r_i = 1.
struct SimplexPoint {
  std::vector<Rat> coords;

  bool is_valid() const;
};

/// Subset of the m x n index grid (1-based rows and columns). The first
/// column may carry at most m - 1 cells.
struct GammaShape {
  int m = 0;
  int n = 0;
  std::vector<std::pair<int, int>> cells;  // (row, column)

  int first_column_count() const;
  /// Per-row count of cells off the first column (index 0 = row 1).
  std::vector<int> off_column_row_counts() const;
  /// 1 for rows carrying a first-column cell, else 0.
  std::vector<int> first_column_rows() const;
  void validate() const;
};

/// The combinatorial curvature functional. For k = m - 1 first-column cells:
///   2 + sum of r_i over off-column cells (i, j).
/// For k <= m - 2:
///   2 sum r_i^2 + 2 sum_{(i,1)} r_i + sum_{(i,j), j>=2} r_i.
Rat evaluate_F(const SimplexPoint& r, const GammaShape& gamma);

struct MinimizationResult {
  Rat min;
  SimplexPoint argmin;
  /// Linear coefficient of r_i in the minimized objective, sorted ascending
  /// (rows are relabeled so larger weights pair with smaller coefficients).
  std::vector<Rat> sorted_coefficients;
  bool quadratic_branch = true;  // false on the k = m - 1 branch
};

/// Exact minimum of evaluate_F(., gamma) over the ordered simplex, together
/// with an attaining point. Rows are first sorted by coefficient; the
/// minimum over all row relabelings of gamma is unchanged and the sorted
/// problem attains it.
MinimizationResult minimize_F_given_gamma(const GammaShape& gamma);

/// Smallest t with sum_{i<=t} (a_t - a_i) >= 4, or m + 1 if none.
/// `a` must be non-decreasing of length m.
int smallest_forced_zero(const std::vector<Rat>& a, int m);

/// Candidate minimizing shapes for C_p: for each admissible count k of
/// first-column cells (placed on the bottom rows), the remaining p - 1 - k
/// cells fill the off-column slots bottom-up, at most n - 1 per row.
std::vector<GammaShape> canonical_gammas(int n, int m, int p);

enum class Normalization { UnnormalizedMin, CnmEqualsOne };

struct CurvatureValue {
  int n = 0;
  int m = 0;
  int p = 0;
  Rat value;
  Normalization normalization = Normalization::UnnormalizedMin;
  /// The closed-form table assumes n >= 5; below that the minimized value is
  /// still exact but carries this warning flag.
  bool closed_form_valid = true;
};

/// Minimum of the functional over the canonical shapes (unnormalized).
CurvatureValue min_F(int n, int m, int p);

/// Closed-form C_p for the m-fold product of n-balls, normalized so that
/// C_{nm} = 1. Throws std::domain_error for n < 5.
CurvatureValue closed_form_Cp(int n, int m, int p);

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Independent oracle: enumerates every admissible (p-1)-cell shape, solves
/// each exact simplex minimization, and returns the global minimum divided
/// by n + 1. Throws BudgetExceeded if binomial(nm, p-1) > budget.
CurvatureValue brute_force_Cp(int n, int m, int p,
                              long long budget = 10'000'000);

/// C_1 of the m-fold product from the holomorphic sectional curvature bound
/// gamma of one factor: gamma / m.
Rat c1_product(const Rat& gamma, int m);

Int binomial(int n, int k);

}  // namespace symprod::curvature
