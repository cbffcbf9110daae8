#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symprod/rational.hpp"

namespace symprod::bounds {

/// Exact result of one effective bound or criterion, with its inputs echoed
/// for reporting. `satisfied`/`margin` are present only for criteria.
struct BoundReport {
  std::string name;
  std::vector<std::pair<std::string, Rat>> inputs;
  Rat value;
  std::optional<bool> satisfied;
  std::optional<Rat> margin;
  std::vector<std::pair<std::string, Rat>> extras;
};

/// d/r > 2m(m-1), strict; margin = d/r - 2m(m-1).
BoundReport hyp_criterion_margin(long long d, long long r, long long m);

/// 16 n^5 (5n + 2m^2 + 4).
BoundReport bk19_bound(long long n, long long m);

/// (2n - 1)^5 (2m^2 + 10n - 1).
BoundReport kobayashi_sym_bound(long long n, long long m);

/// (n + n')^((n + n')^2) * 2m(m-1). Requires n' >= n.
BoundReport debarre_ci_bound(long long n, long long nprime, long long m);

/// Minimal certified dimension (m-1)n + 2, with codim_max = n - 2.
BoundReport subvariety_gt_threshold(long long n, long long m);

/// codim_max = n - 6 and p_min = n(m-1) + 6; flags n < 7 as vacuous.
BoundReport ball_quotient_thresholds(long long n, long long m);

/// gamma * delta > 2m(m-1), strict.
BoundReport compact_quotient_check(const Rat& gamma, const Rat& delta,
                                   long long m);

/// Orbifold multiplicity in Q>=1 together with +infinity.
struct OrbMult {
  bool infinite = false;
  Rat value = 1;

  static OrbMult inf() { return OrbMult{true, 0}; }
  static OrbMult finite(Rat v) { return OrbMult{false, std::move(v)}; }
};

struct FiberComponent {
  long long scheme_multiplicity = 1;  // t_k
  OrbMult orbifold_multiplicity;      // m_Delta(F_k)
};

/// min over components of t_k * m_k, with infinity absorbing.
OrbMult orbifold_multiplicity(const std::vector<FiberComponent>& fiber);

enum class AlbaneseVerdict { NotZariskiDense, Unknown };

/// NotZariskiDense when mn < q, or when X is of general type with n >= 2 and
/// mn <= q; Unknown otherwise.
AlbaneseVerdict albanese_degeneracy(long long n, long long m, long long q_irr,
                                    bool general_type);

/// satisfied = (l * codim_Y <= n - 2); when satisfied, extras carry
/// g_min = d + 1.
BoundReport genus_estimate(long long l, long long codim_Y, long long n,
                           long long d);

}  // namespace symprod::bounds
