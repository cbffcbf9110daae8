#include "symprod/sections.hpp"

#include <algorithm>
#include <stdexcept>

namespace symprod::sections {

MultiPoly MultiPoly::zero(int m, int N) {
  MultiPoly p;
  p.m = m;
  p.N = N;
  return p;
}

MultiPoly MultiPoly::constant(int m, int N, const Rat& value) {
  MultiPoly p = zero(m, N);
  if (value != 0) p.terms[std::vector<int>(m * (N + 1), 0)] = value;
  return p;
}

MultiPoly MultiPoly::linear_form(int m, int N, int block,
                                 const std::vector<Rat>& coeffs) {
  if (static_cast<int>(coeffs.size()) != N + 1)
    throw std::domain_error("linear form needs N + 1 coefficients");
  MultiPoly p = zero(m, N);
  for (int l = 0; l <= N; ++l) {
    if (coeffs[l] == 0) continue;
    std::vector<int> exps(m * (N + 1), 0);
    exps[block * (N + 1) + l] = 1;
    p.terms[std::move(exps)] = coeffs[l];
  }
  return p;
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
  MultiPoly out = *this;
  for (const auto& [exps, coef] : other.terms) {
    Rat& slot = out.terms[exps];
    slot += coef;
    if (slot == 0) out.terms.erase(exps);
  }
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& other) const {
  MultiPoly out = *this;
  for (const auto& [exps, coef] : other.terms) {
    Rat& slot = out.terms[exps];
    slot -= coef;
    if (slot == 0) out.terms.erase(exps);
  }
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
  MultiPoly out = zero(m, N);
  std::vector<int> exps(m * (N + 1));
  for (const auto& [ea, ca] : terms) {
    for (const auto& [eb, cb] : other.terms) {
      for (size_t v = 0; v < exps.size(); ++v) exps[v] = ea[v] + eb[v];
      Rat& slot = out.terms[exps];
      slot += ca * cb;
      if (slot == 0) out.terms.erase(exps);
    }
  }
  return out;
}

int MultiPoly::block_degree(int block) const {
  int deg = 0;
  for (const auto& [exps, coef] : terms) {
    int d = 0;
    for (int l = 0; l <= N; ++l) d += exps[block * (N + 1) + l];
    deg = std::max(deg, d);
  }
  return deg;
}

bool MultiPoly::is_multihomogeneous() const {
  if (terms.empty()) return true;
  std::vector<int> ref(m, -1);
  for (const auto& [exps, coef] : terms) {
    for (int b = 0; b < m; ++b) {
      int d = 0;
      for (int l = 0; l <= N; ++l) d += exps[b * (N + 1) + l];
      if (ref[b] < 0)
        ref[b] = d;
      else if (ref[b] != d)
        return false;
    }
  }
  return true;
}

MultiPoly MultiPoly::swap_blocks(int a, int b) const {
  MultiPoly out = zero(m, N);
  const int w = N + 1;
  for (const auto& [exps, coef] : terms) {
    std::vector<int> swapped = exps;
    for (int l = 0; l < w; ++l)
      std::swap(swapped[a * w + l], swapped[b * w + l]);
    out.terms[std::move(swapped)] = coef;
  }
  return out;
}

Rat MultiPoly::evaluate(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != m * (N + 1))
    throw std::domain_error("evaluation point dimension mismatch");
  Rat total = 0;
  for (const auto& [exps, coef] : terms) {
    Rat value = coef;
    for (size_t v = 0; v < exps.size(); ++v)
      for (int e = 0; e < exps[v]; ++e) value *= point[v];
    total += value;
  }
  return total;
}

MultiPoly build_invariant_section(int m, int N,
                                  const std::vector<std::vector<Rat>>& X,
                                  const std::vector<std::vector<Rat>>& Y) {
  if (m < 1 || N < 1) throw std::domain_error("requires m >= 1 and N >= 1");
  if (static_cast<int>(X.size()) != m || static_cast<int>(Y.size()) != m)
    throw std::domain_error("need one X and one Y form per factor");
  auto is_zero_form = [](const std::vector<Rat>& c) {
    return std::all_of(c.begin(), c.end(), [](const Rat& x) { return x == 0; });
  };
  for (int i = 0; i < m; ++i)
    if (is_zero_form(X[i]) || is_zero_form(Y[i]))
      throw std::domain_error("zero input form");

  MultiPoly s = MultiPoly::constant(m, N, 1);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const MultiPoly xi = MultiPoly::linear_form(m, N, i, X[i]);
      const MultiPoly yi = MultiPoly::linear_form(m, N, i, Y[i]);
      const MultiPoly xj = MultiPoly::linear_form(m, N, j, X[j]);
      const MultiPoly yj = MultiPoly::linear_form(m, N, j, Y[j]);
      const MultiPoly factor = xi * yj - xj * yi;
      s = s * factor * factor;
    }
  }
  return s;
}

bool check_sm_invariance(const MultiPoly& s) {
  for (int b = 0; b + 1 < s.m; ++b) {
    const MultiPoly swapped = s.swap_blocks(b, b + 1);
    if (!(swapped.terms == s.terms)) return false;
  }
  return true;
}

namespace {

// Integer view of the polynomial: denominators cleared once so the epsilon
// expansion runs in cpp_int only.
struct IntTerm {
  std::vector<int> exps;
  Int coef;
};

std::vector<IntTerm> clear_denominators(const MultiPoly& s) {
  Int lcm_den = 1;
  for (const auto& [exps, coef] : s.terms) {
    const Int den = boost::multiprecision::denominator(coef);
    lcm_den = boost::multiprecision::lcm(lcm_den, den);
  }
  std::vector<IntTerm> out;
  out.reserve(s.terms.size());
  for (const auto& [exps, coef] : s.terms) {
    IntTerm t;
    t.exps = exps;
    t.coef = boost::multiprecision::numerator(coef) *
             (lcm_den / boost::multiprecision::denominator(coef));
    out.push_back(std::move(t));
  }
  return out;
}

// Truncated product accumulation of (a + b eps)^e factors, degree <= cap.
void mul_linear_power(std::vector<Int>& acc, long long a, long long b, int e,
                      int cap) {
  for (int rep = 0; rep < e; ++rep) {
    for (int d = cap; d >= 0; --d) {
      Int next = acc[d] * a;
      if (d > 0) next += acc[d - 1] * b;
      acc[d] = std::move(next);
    }
  }
}

long long rand_small(std::mt19937_64& rng) {
  return static_cast<long long>(rng() % 11) - 5;
}

bool proportional(const std::vector<long long>& u,
                  const std::vector<long long>& v) {
  for (size_t a = 0; a < u.size(); ++a)
    for (size_t b = a + 1; b < u.size(); ++b)
      if (u[a] * v[b] - u[b] * v[a] != 0) return false;
  return true;
}

std::vector<long long> random_vec(int len, std::mt19937_64& rng) {
  std::vector<long long> v(len);
  while (true) {
    bool nonzero = false;
    for (auto& x : v) {
      x = rand_small(rng);
      nonzero |= (x != 0);
    }
    if (nonzero) return v;
  }
}

// Coefficients of s restricted to the probe curve, up to degree cap in eps.
std::vector<Int> curve_coefficients(const std::vector<IntTerm>& terms,
                                    const std::vector<long long>& base,
                                    const std::vector<long long>& slope,
                                    int cap) {
  std::vector<Int> total(cap + 1, 0);
  std::vector<Int> acc(cap + 1);
  for (const IntTerm& t : terms) {
    std::fill(acc.begin(), acc.end(), Int(0));
    acc[0] = t.coef;
    for (size_t v = 0; v < t.exps.size(); ++v) {
      if (t.exps[v] == 0) continue;
      mul_linear_power(acc, base[v], slope[v], t.exps[v], cap);
    }
    for (int d = 0; d <= cap; ++d) total[d] += acc[d];
  }
  return total;
}

}  // namespace

std::vector<Rat> random_form(int N, std::mt19937_64& rng) {
  const std::vector<long long> v = random_vec(N + 1, rng);
  std::vector<Rat> out(v.size());
  for (size_t l = 0; l < v.size(); ++l) out[l] = Rat(v[l]);
  return out;
}

DiagonalOrderReport diagonal_vanishing_order(const MultiPoly& s, int trials,
                                             std::uint64_t seed) {
  if (trials < 1) throw std::domain_error("trials must be >= 1");
  if (s.m < 2) throw std::domain_error("diagonal probing requires m >= 2");
  DiagonalOrderReport report;
  report.direction_samples = trials;
  if (s.is_zero()) {
    report.infinite = true;
    return report;
  }

  const std::vector<IntTerm> terms = clear_denominators(s);
  int total_degree = 0;
  for (const IntTerm& t : terms) {
    int d = 0;
    for (int e : t.exps) d += e;
    total_degree = std::max(total_degree, d);
  }

  std::mt19937_64 rng(seed);
  const int w = s.N + 1;
  const int nvars = s.m * w;
  long long best = total_degree + 1;

  for (int i = 0; i < s.m; ++i) {
    for (int j = i + 1; j < s.m; ++j) {
      for (int trial = 0; trial < trials; ++trial) {
        bool done = false;
        for (int attempt = 0; attempt < 50 && !done; ++attempt) {
          // Base point: blocks i and j sit at a common point z, the others
          // at generic points off every diagonal; the curve leaves the
          // (i, j)-diagonal at first order.
          const std::vector<long long> z = random_vec(w, rng);
          std::vector<std::vector<long long>> anchors(s.m);
          bool distinct = true;
          for (int b = 0; b < s.m && distinct; ++b) {
            if (b == i || b == j) {
              anchors[b] = z;
              continue;
            }
            anchors[b] = random_vec(w, rng);
            if (proportional(anchors[b], z)) distinct = false;
            for (int b2 = 0; b2 < b && distinct; ++b2)
              if (b2 != i && b2 != j && proportional(anchors[b], anchors[b2]))
                distinct = false;
          }
          if (!distinct) continue;

          const std::vector<long long> vi = random_vec(w, rng);
          const std::vector<long long> vj = random_vec(w, rng);
          std::vector<long long> diff(w);
          for (int l = 0; l < w; ++l) diff[l] = vi[l] - vj[l];
          if (std::all_of(diff.begin(), diff.end(),
                          [](long long x) { return x == 0; }) ||
              proportional(diff, z))
            continue;

          std::vector<long long> base(nvars, 0), slope(nvars, 0);
          for (int b = 0; b < s.m; ++b) {
            for (int l = 0; l < w; ++l) {
              base[b * w + l] = anchors[b][l];
              if (b == i) slope[b * w + l] = vi[l];
              if (b == j) slope[b * w + l] = vj[l];
            }
          }

          int cap = std::min(4, total_degree);
          std::vector<Int> coeffs = curve_coefficients(terms, base, slope, cap);
          long long order = -1;
          for (int d = 0; d <= cap; ++d) {
            if (coeffs[d] != 0) {
              order = d;
              break;
            }
          }
          if (order < 0 && cap < total_degree) {
            coeffs = curve_coefficients(terms, base, slope, total_degree);
            for (int d = cap + 1; d <= total_degree; ++d) {
              if (coeffs[d] != 0) {
                order = d;
                break;
              }
            }
          }
          if (order < 0) continue;  // curve fell into a deeper stratum
          best = std::min(best, order);
          done = true;
        }
        if (!done)
          throw std::runtime_error(
              "diagonal probe kept degenerating; polynomial may vanish "
              "identically on a diagonal neighborhood");
      }
    }
  }
  report.order = best;
  return report;
}

Rat descend_order(long long r, long long mult) {
  if (r < 1 || mult < 1) throw std::domain_error("requires r, mult >= 1");
  return Rat(r, mult);
}

BaseLocusReport base_locus_coefficient(int m) {
  if (m < 2) throw std::domain_error("requires m >= 2");
  BaseLocusReport report;
  report.coefficient = Rat(1, 2 * (m - 1));
  report.section_degree = 2 * (m - 1);
  report.diagonal_order = 2;
  report.descended_order = descend_order(2, 2);
  return report;
}

}  // namespace symprod::sections
