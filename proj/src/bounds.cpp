#include "symprod/bounds.hpp"

#include <stdexcept>

namespace symprod::bounds {

namespace {

Int int_pow(Int base, Int exp) {
  Int result = 1;
  while (exp > 0) {
    if (exp % 2 == 1) result *= base;
    base *= base;
    exp /= 2;
  }
  return result;
}

}  // namespace

BoundReport hyp_criterion_margin(long long d, long long r, long long m) {
  if (r == 0) throw std::domain_error("r must be nonzero");
  if (d < 1 || r < 1 || m < 1) throw std::domain_error("requires d, r, m >= 1");
  BoundReport rep;
  rep.name = "hyp_criterion";
  rep.inputs = {{"d", d}, {"r", r}, {"m", m}};
  const Rat margin = Rat(d, r) - Rat(2 * m * (m - 1));
  rep.margin = margin;
  rep.satisfied = margin > 0;
  rep.value = margin;
  return rep;
}

BoundReport bk19_bound(long long n, long long m) {
  if (n < 1 || m < 1) throw std::domain_error("requires n, m >= 1");
  BoundReport rep;
  rep.name = "bk19";
  rep.inputs = {{"n", n}, {"m", m}};
  rep.value = Rat(16 * int_pow(n, 5) * (5 * Int(n) + 2 * Int(m) * m + 4));
  return rep;
}

BoundReport kobayashi_sym_bound(long long n, long long m) {
  if (n < 1 || m < 1) throw std::domain_error("requires n, m >= 1");
  BoundReport rep;
  rep.name = "kobayashi_sym";
  rep.inputs = {{"n", n}, {"m", m}};
  rep.value = Rat(int_pow(2 * Int(n) - 1, 5) * (2 * Int(m) * m + 10 * Int(n) - 1));
  return rep;
}

BoundReport debarre_ci_bound(long long n, long long nprime, long long m) {
  if (n < 1 || m < 1) throw std::domain_error("requires n, m >= 1");
  if (nprime < n) throw std::domain_error("requires n' >= n");
  BoundReport rep;
  rep.name = "debarre_ci";
  rep.inputs = {{"n", n}, {"nprime", nprime}, {"m", m}};
  const Int s = Int(n) + nprime;
  rep.value = Rat(int_pow(s, s * s) * (2 * Int(m) * (m - 1)));
  return rep;
}

BoundReport subvariety_gt_threshold(long long n, long long m) {
  if (n < 2 || m < 1) throw std::domain_error("requires n >= 2 and m >= 1");
  BoundReport rep;
  rep.name = "subvariety_gt";
  rep.inputs = {{"n", n}, {"m", m}};
  rep.value = Rat((m - 1) * n + 2);
  rep.extras = {{"codim_max", n - 2}};
  return rep;
}

BoundReport ball_quotient_thresholds(long long n, long long m) {
  if (n < 1 || m < 1) throw std::domain_error("requires n, m >= 1");
  BoundReport rep;
  rep.name = "ball_quotient";
  rep.inputs = {{"n", n}, {"m", m}};
  rep.value = Rat(n * (m - 1) + 6);  // p_min
  rep.extras = {{"codim_max", n - 6},
                {"p_min", n * (m - 1) + 6},
                {"vacuous", n < 7 ? 1 : 0}};
  return rep;
}

BoundReport compact_quotient_check(const Rat& gamma, const Rat& delta,
                                   long long m) {
  if (gamma <= 0 || delta <= 0)
    throw std::domain_error("gamma and delta must be positive");
  if (m < 1) throw std::domain_error("requires m >= 1");
  BoundReport rep;
  rep.name = "compact_quotient";
  rep.inputs = {{"gamma", gamma}, {"delta", delta}, {"m", m}};
  const Rat margin = gamma * delta - Rat(2 * m * (m - 1));
  rep.margin = margin;
  rep.satisfied = margin > 0;
  rep.value = margin;
  return rep;
}

OrbMult orbifold_multiplicity(const std::vector<FiberComponent>& fiber) {
  if (fiber.empty()) throw std::domain_error("fiber must be non-empty");
  OrbMult best = OrbMult::inf();
  for (const FiberComponent& c : fiber) {
    if (c.scheme_multiplicity < 1)
      throw std::domain_error("scheme multiplicities must be >= 1");
    if (c.orbifold_multiplicity.infinite) continue;
    if (c.orbifold_multiplicity.value < 1)
      throw std::domain_error("orbifold multiplicities must be >= 1");
    const Rat product = Rat(c.scheme_multiplicity) * c.orbifold_multiplicity.value;
    if (best.infinite || product < best.value) best = OrbMult::finite(product);
  }
  return best;
}

AlbaneseVerdict albanese_degeneracy(long long n, long long m, long long q_irr,
                                    bool general_type) {
  if (n < 1 || m < 1 || q_irr < 0)
    throw std::domain_error("requires n, m >= 1 and q >= 0");
  if (m * n < q_irr) return AlbaneseVerdict::NotZariskiDense;
  if (general_type && n >= 2 && m * n <= q_irr)
    return AlbaneseVerdict::NotZariskiDense;
  return AlbaneseVerdict::Unknown;
}

BoundReport genus_estimate(long long l, long long codim_Y, long long n,
                           long long d) {
  if (l < 1 || codim_Y < 0 || n < 2 || d < 1)
    throw std::domain_error("requires l >= 1, codim >= 0, n >= 2, d >= 1");
  BoundReport rep;
  rep.name = "genus_estimate";
  rep.inputs = {{"l", l}, {"codim_Y", codim_Y}, {"n", n}, {"d", d}};
  const bool sat = l * codim_Y <= n - 2;
  rep.satisfied = sat;
  rep.value = Rat(l * codim_Y);
  if (sat) rep.extras = {{"g_min", d + 1}};
  return rep;
}

}  // namespace symprod::bounds
