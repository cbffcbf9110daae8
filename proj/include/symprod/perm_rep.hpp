#pragma once

#include <map>
#include <optional>
#include <vector>

#include "symprod/rational.hpp"

namespace symprod::perm_rep {

/// Conjugacy class of the symmetric group S_m, stored as a non-increasing
/// partition of m. The order of any representative is lcm(parts).
struct CycleType {
  std::vector<int> parts;
  int m = 0;
  long long order = 1;

  static CycleType from_parts(std::vector<int> parts);
  bool is_identity() const { return order == 1; }
};

bool lex_less(const CycleType& a, const CycleType& b);

/// All partitions of m, each exactly once, in descending lexicographic order
/// on the non-increasing part lists. Throws std::invalid_argument for m = 0.
std::vector<CycleType> enumerate_cycle_types(int m);

/// Multiset of eigenvalue exponents (residues mod `order`) of a finite-order
/// linear action, with multiplicities.
struct ExponentMultiset {
  long long order = 1;
  std::map<long long, long long> entries;  // residue -> multiplicity
  long long total_multiplicity() const;
};

/// Exponent multiset of the action of a permutation of cycle type `ct` on the
/// product of m copies of an n-dimensional space: residues j*r/r_k for each
/// part r_k and 0 <= j < r_k, each counted n times.
ExponentMultiset exponents_on_product(const CycleType& ct, int n);

/// Sum of all exponents of the full action, by direct summation. Equals
/// (n/2) * r * sum_k (r_k - 1) over all parts.
long long sigma_sum(const CycleType& ct, int n);

/// Sum of the d smallest residues counted with multiplicity. Throws
/// std::domain_error if d exceeds the total multiplicity.
long long min_d_sum(const ExponentMultiset& ex, long long d);

struct ConditionParams {
  long long d = 1;
  Rat alpha = 0;
};

struct ConditionReport {
  bool holds = true;
  std::optional<CycleType> witness;  // lexicographically smallest violator
  long long witness_sum = 0;         // its minimal d-sum
  Rat witness_required = 0;          // r * (1 - alpha) for the witness
};

/// Decides whether every non-identity cycle type of S_m acting on the m-fold
/// product of an n-dimensional space satisfies
///   min d-sum of exponents >= r * (1 - alpha),
/// exactly over the rationals.
ConditionReport check_condition(int m, int n, const ConditionParams& params);

/// n(m-1) + 2 - alpha (n-2)(m-2)/2, as an exact rational.
Rat lemcrit_threshold(int n, int m, const Rat& alpha);

}  // namespace symprod::perm_rep
