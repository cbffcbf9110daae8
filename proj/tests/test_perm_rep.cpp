#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <vector>

#include "symprod/perm_rep.hpp"

using symprod::Int;
using symprod::Rat;
namespace pr = symprod::perm_rep;

namespace {

// Independent partition counter, by largest allowed part.
long long count_partitions(int m, int max_part) {
  if (m == 0) return 1;
  long long total = 0;
  for (int first = std::min(m, max_part); first >= 1; --first)
    total += count_partitions(m - first, first);
  return total;
}

// --- characteristic polynomial oracle --------------------------------------
//
// Builds the actual nm x nm permutation matrix of a representative, computes
// its characteristic polynomial by Faddeev-LeVerrier, and compares against
// the product of cyclotomic polynomials reconstructed from the claimed
// exponent multiset. The two derivations share no code with the library.

using Poly = std::vector<Int>;  // ascending degree

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Exact division, requires divisor to be monic over the integers.
Poly poly_divexact(Poly num, const Poly& den) {
  REQUIRE(den.back() == 1);
  Poly quot(num.size() - den.size() + 1, 0);
  for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
    const Int c = num[i + den.size() - 1];
    quot[i] = c;
    for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  for (const Int& c : num) REQUIRE(c == 0);
  return quot;
}

Poly cyclotomic(long long d) {
  Poly result(d + 1, 0);  // x^d - 1
  result[0] = -1;
  result[d] = 1;
  for (long long e = 1; e < d; ++e)
    if (d % e == 0) result = poly_divexact(result, cyclotomic(e));
  return result;
}

Poly charpoly_faddeev_leverrier(const std::vector<std::vector<Rat>>& A) {
  const int s = static_cast<int>(A.size());
  std::vector<std::vector<Rat>> M(s, std::vector<Rat>(s, 0));
  std::vector<Rat> coeffs(s + 1, 0);
  coeffs[s] = 1;
  for (int i = 0; i < s; ++i) M[i][i] = 1;  // M_0 = I
  for (int k = 1; k <= s; ++k) {
    std::vector<std::vector<Rat>> AM(s, std::vector<Rat>(s, 0));
    for (int i = 0; i < s; ++i)
      for (int l = 0; l < s; ++l)
        for (int j = 0; j < s; ++j) AM[i][j] += A[i][l] * M[l][j];
    Rat trace = 0;
    for (int i = 0; i < s; ++i) trace += AM[i][i];
    const Rat c = -trace / k;
    coeffs[s - k] = c;
    M = AM;
    for (int i = 0; i < s; ++i) M[i][i] += c;
  }
  return [&coeffs] {
    Poly out;
    for (const Rat& c : coeffs) {
      REQUIRE(boost::multiprecision::denominator(c) == 1);
      out.push_back(boost::multiprecision::numerator(c));
    }
    return out;
  }();
}

std::vector<std::vector<Rat>> permutation_action_matrix(const pr::CycleType& ct,
                                                        int n) {
  const int s = ct.m * n;
  std::vector<std::vector<Rat>> A(s, std::vector<Rat>(s, 0));
  int base = 0;
  for (int part : ct.parts) {
    for (int i = 0; i < part; ++i) {
      const int from = base + i;
      const int to = base + (i + 1) % part;
      for (int a = 0; a < n; ++a) A[to * n + a][from * n + a] = 1;
    }
    base += part;
  }
  return A;
}

Poly charpoly_from_exponents(const pr::ExponentMultiset& ex) {
  // Group residues by multiplicative order; each group of primitive d-th
  // roots must appear with a single multiplicity and contributes Phi_d^mu.
  std::map<long long, long long> order_mult;
  for (const auto& [residue, mult] : ex.entries) {
    const long long g = std::gcd(residue, ex.order);
    const long long d = ex.order / g;
    auto [it, inserted] = order_mult.emplace(d, mult);
    if (!inserted) REQUIRE(it->second == mult);
  }
  // Sanity: group size must be phi(d).
  for (const auto& [d, mult] : order_mult) {
    long long phi = 0;
    for (long long a = 0; a < ex.order; ++a)
      if (ex.order / std::gcd(a == 0 ? ex.order : a, ex.order) == d) ++phi;
    long long seen = 0;
    for (const auto& [residue, m2] : ex.entries) {
      const long long g = std::gcd(residue, ex.order);
      if (ex.order / g == d) ++seen;
    }
    CHECK(seen * mult == phi * mult);
  }
  Poly result{1};
  for (const auto& [d, mult] : order_mult) {
    const Poly phi_d = cyclotomic(d);
    for (long long i = 0; i < mult; ++i) result = poly_mul(result, phi_d);
  }
  return result;
}

// Smallest d-subset sum by full bitmask enumeration (independent of the
// sorted-prefix implementation). Only usable for small multisets.
long long brute_min_d_sum(const pr::ExponentMultiset& ex, int d) {
  std::vector<long long> residues;
  for (const auto& [r, mult] : ex.entries)
    for (long long i = 0; i < mult; ++i) residues.push_back(r);
  const int t = static_cast<int>(residues.size());
  long long best = -1;
  for (unsigned mask = 0; mask < (1u << t); ++mask) {
    if (std::popcount(mask) != d) continue;
    long long sum = 0;
    for (int i = 0; i < t; ++i)
      if (mask & (1u << i)) sum += residues[i];
    if (best < 0 || sum < best) best = sum;
  }
  return best;
}

}  // namespace

TEST_CASE("cycle type basics") {
  const auto ct = pr::CycleType::from_parts({2, 3, 1});
  CHECK(ct.parts == std::vector<int>{3, 2, 1});  // sorted non-increasing
  CHECK(ct.m == 6);
  CHECK(ct.order == 6);
  CHECK_FALSE(ct.is_identity());
  CHECK(pr::CycleType::from_parts({1, 1}).is_identity());
}

TEST_CASE("cycle type enumeration matches partition counts") {
  for (int m = 1; m <= 9; ++m) {
    const auto types = pr::enumerate_cycle_types(m);
    CHECK(static_cast<long long>(types.size()) == count_partitions(m, m));
    std::set<std::vector<int>> seen;
    for (const auto& ct : types) {
      CHECK(std::accumulate(ct.parts.begin(), ct.parts.end(), 0) == m);
      CHECK(seen.insert(ct.parts).second);
    }
    for (size_t i = 1; i < types.size(); ++i)
      CHECK(pr::lex_less(types[i], types[i - 1]));
  }
  CHECK(pr::enumerate_cycle_types(8).size() == 22);
  CHECK_THROWS_AS(pr::enumerate_cycle_types(0), std::invalid_argument);
}

TEST_CASE("enumeration order for m = 3") {
  const auto types = pr::enumerate_cycle_types(3);
  REQUIRE(types.size() == 3);
  CHECK(types[0].parts == std::vector<int>{3});
  CHECK(types[1].parts == std::vector<int>{2, 1});
  CHECK(types[2].parts == std::vector<int>{1, 1, 1});
}

TEST_CASE("exponent multiset for (2,2,1) acting on (C^3)^5") {
  const auto ct = pr::CycleType::from_parts({2, 2, 1});
  const auto ex = pr::exponents_on_product(ct, 3);
  CHECK(ex.order == 2);
  CHECK(ex.entries == std::map<long long, long long>{{0, 9}, {1, 6}});
  CHECK(ex.total_multiplicity() == 15);
}

TEST_CASE("residue zero multiplicity is n times the number of parts") {
  for (int m = 2; m <= 7; ++m)
    for (const auto& ct : pr::enumerate_cycle_types(m))
      for (int n = 1; n <= 4; ++n) {
        const auto ex = pr::exponents_on_product(ct, n);
        CHECK(ex.entries.at(0) ==
              static_cast<long long>(n) * static_cast<long long>(ct.parts.size()));
        CHECK(ex.total_multiplicity() == static_cast<long long>(n) * m);
      }
}

TEST_CASE("exponent multisets agree with the characteristic polynomial") {
  const std::vector<std::pair<std::vector<int>, int>> cases = {
      {{2, 2, 1}, 3}, {{3, 2}, 1}, {{4}, 2}, {{3, 1, 1}, 2},
      {{6, 2}, 1},    {{5}, 2},    {{2, 1}, 3}};
  for (const auto& [parts, n] : cases) {
    CAPTURE(n);
    const auto ct = pr::CycleType::from_parts(parts);
    const auto ex = pr::exponents_on_product(ct, n);
    const Poly claimed = charpoly_from_exponents(ex);
    const Poly actual =
        charpoly_faddeev_leverrier(permutation_action_matrix(ct, n));
    CHECK(claimed == actual);
  }
}

TEST_CASE("sigma sum closed form") {
  for (int m = 1; m <= 8; ++m)
    for (const auto& ct : pr::enumerate_cycle_types(m))
      for (int n = 1; n <= 5; ++n) {
        long long drop = 0;
        for (int part : ct.parts) drop += part - 1;
        const Rat closed = Rat(n) * Rat(ct.order) * Rat(drop) / 2;
        CHECK(Rat(pr::sigma_sum(ct, n)) == closed);
      }
}

TEST_CASE("min d-sum against bitmask enumeration") {
  const std::vector<std::pair<std::vector<int>, int>> cases = {
      {{2, 1}, 2}, {{3}, 2}, {{2, 2}, 2}, {{4, 1}, 1}, {{3, 2}, 1}};
  for (const auto& [parts, n] : cases) {
    const auto ex =
        pr::exponents_on_product(pr::CycleType::from_parts(parts), n);
    for (int d = 1; d <= ex.total_multiplicity(); ++d)
      CHECK(pr::min_d_sum(ex, d) == brute_min_d_sum(ex, d));
  }
}

TEST_CASE("min d-sum rejects oversized d") {
  const auto ex = pr::exponents_on_product(pr::CycleType::from_parts({2}), 2);
  CHECK_THROWS_AS(pr::min_d_sum(ex, ex.total_multiplicity() + 1),
                  std::domain_error);
}

TEST_CASE("condition check for m = n = 2") {
  // Transposition on (C^2)^2: residues {0,0,1,1} mod 2.
  const auto pass = pr::check_condition(2, 2, {4, Rat(0)});
  CHECK(pass.holds);

  const auto fail = pr::check_condition(2, 2, {3, Rat(0)});
  CHECK_FALSE(fail.holds);
  REQUIRE(fail.witness);
  CHECK(fail.witness->parts == std::vector<int>{2});
  CHECK(fail.witness_sum == 1);  // 0 + 0 + 1
  CHECK(fail.witness_required == 2);

  // alpha = 1 trivializes the requirement.
  CHECK(pr::check_condition(2, 2, {2, Rat(1)}).holds);
}

TEST_CASE("witness is the lexicographically smallest violator") {
  const auto rep = pr::check_condition(4, 2, {3, Rat(0)});
  REQUIRE_FALSE(rep.holds);
  REQUIRE(rep.witness);
  // Every violator found later in enumeration order must not precede it.
  bool reached_witness = false;
  for (const auto& ct : pr::enumerate_cycle_types(4)) {
    if (ct.is_identity()) continue;
    const auto ex = pr::exponents_on_product(ct, 2);
    const bool violates = Rat(pr::min_d_sum(ex, 3)) < Rat(ct.order);
    if (ct.parts == rep.witness->parts) {
      CHECK(violates);
      reached_witness = true;
    } else if (violates && !reached_witness) {
      CHECK(pr::lex_less(*rep.witness, ct));
    }
  }
  CHECK(reached_witness);
}

TEST_CASE("condition check against exhaustive per-class evaluation") {
  for (int m = 2; m <= 5; ++m)
    for (int n = 2; n <= 3; ++n)
      for (long long d = 1; d <= static_cast<long long>(n) * m; ++d)
        for (const Rat& alpha : {Rat(0), Rat(1, 2), Rat(1)}) {
          bool expect = true;
          for (const auto& ct : pr::enumerate_cycle_types(m)) {
            if (ct.is_identity()) continue;
            const auto ex = pr::exponents_on_product(ct, n);
            if (Rat(pr::min_d_sum(ex, d)) < Rat(ct.order) * (1 - alpha))
              expect = false;
          }
          CHECK(pr::check_condition(m, n, {d, alpha}).holds == expect);
        }
}

TEST_CASE("threshold is not sufficient for every alpha") {
  // At n = 4, m = 6, alpha = 1/2 the threshold evaluates to d = 20, but the
  // transposition has 20 zero exponents, so a zero d-sum violates the
  // condition. Pinned here so the behavior is a documented fact rather than
  // a surprise: the condition only becomes sufficient at
  // d >= n(m-1) + 2(1 - alpha), which is 21 for these parameters.
  CHECK(pr::lemcrit_threshold(4, 6, Rat(1, 2)) == 20);
  const auto at_threshold = pr::check_condition(6, 4, {20, Rat(1, 2)});
  CHECK_FALSE(at_threshold.holds);
  REQUIRE(at_threshold.witness);
  CHECK(at_threshold.witness->parts == std::vector<int>{2, 1, 1, 1, 1});
  CHECK(at_threshold.witness_sum == 0);
  CHECK(pr::check_condition(6, 4, {21, Rat(1, 2)}).holds);
}

TEST_CASE("threshold values") {
  CHECK(pr::lemcrit_threshold(4, 4, Rat(0)) == 14);
  CHECK(pr::lemcrit_threshold(4, 4, Rat(1)) == 12);
  CHECK(pr::lemcrit_threshold(3, 5, Rat(1, 2)) == Rat(53, 4));
  CHECK(pr::lemcrit_threshold(2, 6, Rat(1)) == 12);  // alpha term vanishes
}
