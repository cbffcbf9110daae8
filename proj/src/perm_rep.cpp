#include "symprod/perm_rep.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace symprod::perm_rep {

CycleType CycleType::from_parts(std::vector<int> parts) {
  if (parts.empty()) throw std::invalid_argument("empty cycle type");
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  CycleType ct;
  ct.m = 0;
  ct.order = 1;
  for (int p : parts) {
    if (p < 1) throw std::invalid_argument("cycle type parts must be >= 1");
    ct.m += p;
    ct.order = std::lcm(ct.order, static_cast<long long>(p));
  }
  ct.parts = std::move(parts);
  return ct;
}

bool lex_less(const CycleType& a, const CycleType& b) {
  return std::lexicographical_compare(a.parts.begin(), a.parts.end(),
                                      b.parts.begin(), b.parts.end());
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<CycleType>& out) {
  if (remaining == 0) {
    out.push_back(CycleType::from_parts(acc));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    partitions_rec(remaining - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<CycleType> enumerate_cycle_types(int m) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  std::vector<CycleType> out;
  std::vector<int> acc;
  partitions_rec(m, m, acc, out);
  return out;
}

long long ExponentMultiset::total_multiplicity() const {
  long long total = 0;
  for (const auto& [residue, mult] : entries) total += mult;
  return total;
}

ExponentMultiset exponents_on_product(const CycleType& ct, int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  ExponentMultiset ex;
  ex.order = ct.order;
  for (int part : ct.parts) {
    const long long step = ct.order / part;
    for (int j = 0; j < part; ++j) ex.entries[j * step] += n;
  }
  return ex;
}

long long sigma_sum(const CycleType& ct, int n) {
  const ExponentMultiset ex = exponents_on_product(ct, n);
  long long sum = 0;
  for (const auto& [residue, mult] : ex.entries) sum += residue * mult;
  return sum;
}

long long min_d_sum(const ExponentMultiset& ex, long long d) {
  if (d > ex.total_multiplicity())
    throw std::domain_error("d exceeds total multiplicity");
  long long sum = 0;
  long long taken = 0;
  for (const auto& [residue, mult] : ex.entries) {  // map iterates ascending
    const long long take = std::min(mult, d - taken);
    sum += residue * take;
    taken += take;
    if (taken == d) break;
  }
  return sum;
}

ConditionReport check_condition(int m, int n, const ConditionParams& params) {
  if (params.d > static_cast<long long>(n) * m)
    throw std::domain_error("d exceeds n*m");
  ConditionReport report;
  for (const CycleType& ct : enumerate_cycle_types(m)) {
    if (ct.is_identity()) continue;
    const ExponentMultiset ex = exponents_on_product(ct, n);
    const long long sum = min_d_sum(ex, params.d);
    const Rat required = Rat(ct.order) * (Rat(1) - params.alpha);
    if (Rat(sum) < required) {
      if (report.holds || lex_less(ct, *report.witness)) {
        report.witness = ct;
        report.witness_sum = sum;
        report.witness_required = required;
      }
      report.holds = false;
    }
  }
  return report;
}

Rat lemcrit_threshold(int n, int m, const Rat& alpha) {
  if (n < 2 || m < 2) throw std::domain_error("requires n >= 2 and m >= 2");
  if (alpha < 0 || alpha > 1) throw std::domain_error("alpha must be in [0,1]");
  return Rat(n) * (m - 1) + 2 - alpha * Rat((n - 2) * (m - 2), 2);
}

}  // namespace symprod::perm_rep
