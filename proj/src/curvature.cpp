#include "symprod/curvature.hpp"

#include <algorithm>
#include <numeric>

namespace symprod::curvature {

bool SimplexPoint::is_valid() const {
  if (coords.empty()) return false;
  Rat sum = 0;
  for (size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] < 0) return false;
    if (i > 0 && coords[i] > coords[i - 1]) return false;
    sum += coords[i];
  }
  return sum == 1;
}

int GammaShape::first_column_count() const {
  int k = 0;
  for (const auto& [i, j] : cells) k += (j == 1);
  return k;
}

std::vector<int> GammaShape::off_column_row_counts() const {
  std::vector<int> b(m, 0);
  for (const auto& [i, j] : cells)
    if (j >= 2) ++b[i - 1];
  return b;
}

std::vector<int> GammaShape::first_column_rows() const {
  std::vector<int> f(m, 0);
  for (const auto& [i, j] : cells)
    if (j == 1) f[i - 1] = 1;
  return f;
}

void GammaShape::validate() const {
  for (const auto& [i, j] : cells) {
    if (i < 1 || i > m || j < 1 || j > n)
      throw std::domain_error("gamma cell out of the m x n grid");
  }
  std::vector<std::pair<int, int>> sorted = cells;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::domain_error("gamma has repeated cells");
  if (first_column_count() > m - 1)
    throw std::domain_error("gamma has more than m - 1 first-column cells");
}

Rat evaluate_F(const SimplexPoint& r, const GammaShape& gamma) {
  if (static_cast<int>(r.coords.size()) != gamma.m)
    throw std::domain_error("simplex point dimension mismatch");
  gamma.validate();
  const int k = gamma.first_column_count();
  const std::vector<int> b = gamma.off_column_row_counts();
  if (k == gamma.m - 1) {
    Rat value = 2;
    for (int i = 0; i < gamma.m; ++i) value += b[i] * r.coords[i];
    return value;
  }
  const std::vector<int> f = gamma.first_column_rows();
  Rat value = 0;
  for (int i = 0; i < gamma.m; ++i) {
    value += 2 * r.coords[i] * r.coords[i];
    value += (2 * f[i] + b[i]) * r.coords[i];
  }
  return value;
}

MinimizationResult minimize_F_given_gamma(const GammaShape& gamma) {
  gamma.validate();
  const int m = gamma.m;
  const int k = gamma.first_column_count();
  const std::vector<int> b = gamma.off_column_row_counts();

  MinimizationResult result;
  if (k == m - 1 && m >= 2) {
    // Linear branch: 2 + sum b_i r_i. After sorting the rows so that the
    // off-column counts are non-decreasing, the minimum over the ordered
    // simplex sits at the vertex (1, 0, ..., 0).
    std::vector<int> sorted_b = b;
    std::sort(sorted_b.begin(), sorted_b.end());
    result.min = Rat(2 + sorted_b.front());
    result.argmin.coords.assign(m, 0);
    result.argmin.coords[0] = 1;
    result.sorted_coefficients.assign(sorted_b.begin(), sorted_b.end());
    result.quadratic_branch = false;
    return result;
  }

  // Quadratic branch: 2 sum r_i^2 + sum c_i r_i with c_i = 2 [row i has a
  // first-column cell] + b_i. Sort the coefficients ascending, then solve
  // the simplex-constrained quadratic by exact water-filling: on the support
  // 4 r_i + c_i is constant and r_i = (lambda - c_i) / 4.
  const std::vector<int> f = gamma.first_column_rows();
  std::vector<Rat> c(m);
  for (int i = 0; i < m; ++i) c[i] = 2 * f[i] + b[i];
  std::sort(c.begin(), c.end());

  Rat prefix = 0;
  for (int t = 1; t <= m; ++t) {
    prefix += c[t - 1];
    const Rat lambda = (4 + prefix) / t;
    if (lambda < c[t - 1]) continue;
    if (t < m && lambda > c[t]) continue;
    result.argmin.coords.assign(m, 0);
    Rat value = 0;
    for (int i = 0; i < t; ++i) {
      const Rat ri = (lambda - c[i]) / 4;
      result.argmin.coords[i] = ri;
      value += 2 * ri * ri + c[i] * ri;
    }
    result.min = value;
    result.sorted_coefficients = c;
    result.quadratic_branch = true;
    return result;
  }
  throw std::logic_error("water-filling found no support");  // unreachable
}

int smallest_forced_zero(const std::vector<Rat>& a, int m) {
  if (static_cast<int>(a.size()) != m)
    throw std::domain_error("coefficient list must have length m");
  Rat prefix = 0;
  for (int t = 1; t <= m; ++t) {
    // sum_{i<=t} (a_t - a_i) = t * a_t - prefix sum
    prefix += a[t - 1];
    if (t * a[t - 1] - prefix >= 4) return t;
  }
  return m + 1;
}

std::vector<GammaShape> canonical_gammas(int n, int m, int p) {
  if (p < 1 || p > n * m) throw std::domain_error("p must be in [1, n*m]");
  std::vector<GammaShape> shapes;
  const int max_k = std::min(m - 1, p - 1);
  for (int k = 0; k <= max_k; ++k) {
    const int off = p - 1 - k;
    if (off > m * (n - 1)) continue;
    GammaShape gamma;
    gamma.m = m;
    gamma.n = n;
    for (int i = m - k + 1; i <= m; ++i) gamma.cells.emplace_back(i, 1);
    int remaining = off;
    for (int i = m; i >= 1 && remaining > 0; --i) {
      const int take = std::min(remaining, n - 1);
      for (int j = n; j > n - take; --j) gamma.cells.emplace_back(i, j);
      remaining -= take;
    }
    gamma.validate();
    shapes.push_back(std::move(gamma));
  }
  return shapes;
}

CurvatureValue min_F(int n, int m, int p) {
  const std::vector<GammaShape> shapes = canonical_gammas(n, m, p);
  if (shapes.empty()) throw std::logic_error("no admissible canonical shape");
  bool first = true;
  Rat best;
  for (const GammaShape& gamma : shapes) {
    const Rat value = minimize_F_given_gamma(gamma).min;
    if (first || value < best) {
      best = value;
      first = false;
    }
  }
  CurvatureValue result;
  result.n = n;
  result.m = m;
  result.p = p;
  result.value = best;
  result.normalization = Normalization::UnnormalizedMin;
  result.closed_form_valid = n >= 5;
  return result;
}

CurvatureValue closed_form_Cp(int n, int m, int p) {
  if (n < 5)
    throw std::domain_error("closed form requires n >= 5");
  if (p < 1 || p > n * m) throw std::domain_error("p must be in [1, n*m]");
  const int k = (p - 1) / n;
  const int d = (p - 1) % n;
  const int mk = m - k;
  Rat unnormalized;
  if (mk == 1) {
    unnormalized = Rat(d + 2);
  } else if (d == 0) {
    unnormalized = Rat(2, mk);
  } else if (d == 1 && mk == 2) {
    unnormalized = Rat(23, 16);
  } else if (d == 1 && mk == 3) {
    unnormalized = Rat(11, 12);
  } else if (d == 1 && mk == 4) {
    unnormalized = Rat(21, 32);
  } else if (d == 2 && mk == 2) {
    unnormalized = Rat(7, 4);
  } else if (d == 3 && mk == 2) {
    unnormalized = Rat(31, 16);
  } else {
    unnormalized = Rat(2, mk - 1);
  }
  CurvatureValue result;
  result.n = n;
  result.m = m;
  result.p = p;
  result.value = unnormalized / (n + 1);
  result.normalization = Normalization::CnmEqualsOne;
  result.closed_form_valid = true;
  return result;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

CurvatureValue brute_force_Cp(int n, int m, int p, long long budget) {
  if (p < 1 || p > n * m) throw std::domain_error("p must be in [1, n*m]");
  const int cells = n * m;
  const int size = p - 1;
  if (binomial(cells, size) > budget)
    throw BudgetExceeded("enumeration budget exceeded");

  bool first = true;
  Rat best;
  // Subsets in lexicographic order over cell indices; cell index c maps to
  // row c / n + 1, column c % n + 1.
  std::vector<int> subset(size);
  std::iota(subset.begin(), subset.end(), 0);
  GammaShape gamma;
  gamma.m = m;
  gamma.n = n;
  while (true) {
    gamma.cells.clear();
    int k = 0;
    for (int c : subset) {
      const int row = c / n + 1;
      const int col = c % n + 1;
      k += (col == 1);
      gamma.cells.emplace_back(row, col);
    }
    if (k <= m - 1) {
      const Rat value = minimize_F_given_gamma(gamma).min;
      if (first || value < best) {
        best = value;
        first = false;
      }
    }
    // next combination
    int i = size - 1;
    while (i >= 0 && subset[i] == cells - size + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < size; ++j) subset[j] = subset[j - 1] + 1;
    if (size == 0) break;
  }
  if (first) throw std::logic_error("no admissible shape enumerated");
  CurvatureValue result;
  result.n = n;
  result.m = m;
  result.p = p;
  result.value = best / (n + 1);
  result.normalization = Normalization::CnmEqualsOne;
  result.closed_form_valid = n >= 5;
  return result;
}

Rat c1_product(const Rat& gamma, int m) {
  if (gamma <= 0) throw std::domain_error("gamma must be positive");
  if (m < 1) throw std::domain_error("m must be >= 1");
  return gamma / m;
}

}  // namespace symprod::curvature
