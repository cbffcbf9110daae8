// Command-line front end: curvature-constant tables, Reid-Tai-Weissauer
// condition checks, effective bound calculators, and invariant-section
// verification, with text/json/csv output.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "symprod/bounds.hpp"
#include "symprod/curvature.hpp"
#include "symprod/perm_rep.hpp"
#include "symprod/rational.hpp"
#include "symprod/sections.hpp"

namespace {

using symprod::Int;
using symprod::Rat;
namespace perm_rep = symprod::perm_rep;
namespace curvature = symprod::curvature;
namespace sections = symprod::sections;
namespace bounds = symprod::bounds;

using Field = std::pair<std::string, std::string>;

struct Row {
  std::vector<Field> fields;
  void add(const std::string& key, const std::string& value) {
    fields.emplace_back(key, value);
  }
  void add_rat(const std::string& key, const Rat& value) {
    add(key, symprod::to_fraction_string(value));
    add(key + "_decimal", symprod::to_decimal_string(value));
  }
};

struct RunReport {
  std::string command;
  std::vector<Field> inputs;
  std::vector<Row> results;
  bool all_passed = true;
  std::string extra_text;  // preformatted block (grid layout), text mode only
};

std::string render_text(const RunReport& report) {
  std::ostringstream out;
  out << "command: " << report.command << "\n";
  for (const auto& [k, v] : report.inputs) out << "  " << k << " = " << v << "\n";
  for (const Row& row : report.results) {
    bool first = true;
    for (const auto& [k, v] : row.fields) {
      out << (first ? "" : "  ") << k << "=" << v;
      first = false;
    }
    out << "\n";
  }
  if (!report.extra_text.empty()) out << report.extra_text;
  out << "all_passed: " << (report.all_passed ? "true" : "false") << "\n";
  return out.str();
}

std::string render_json(const RunReport& report) {
  nlohmann::ordered_json j;
  j["command"] = report.command;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  for (const auto& [k, v] : report.inputs) inputs[k] = v;
  j["inputs"] = inputs;
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  for (const Row& row : report.results) {
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (const auto& [k, v] : row.fields) r[k] = v;
    results.push_back(r);
  }
  j["results"] = results;
  j["all_passed"] = report.all_passed;
  return j.dump(2) + "\n";
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  return out + "\"";
}

std::string render_csv(const RunReport& report) {
  std::ostringstream out;
  if (!report.results.empty()) {
    bool first = true;
    for (const auto& [k, v] : report.results.front().fields) {
      out << (first ? "" : ",") << csv_escape(k);
      first = false;
    }
    out << "\n";
    for (const Row& row : report.results) {
      first = true;
      for (const auto& [k, v] : row.fields) {
        out << (first ? "" : ",") << csv_escape(v);
        first = false;
      }
      out << "\n";
    }
  }
  return out.str();
}

struct CommonOptions {
  std::string format = "text";
  std::string out_path;
  std::uint64_t seed = 0xC0FFEE;
  bool verify = false;
  long long budget = 10'000'000;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--out", opts.out_path, "Write output to file");
  cmd->add_option("--seed", opts.seed, "Seed for randomized checks");
  cmd->add_flag("--verify", opts.verify, "Enable brute-force oracles");
  cmd->add_option("--budget", opts.budget, "Enumeration cap");
}

int emit(const RunReport& report, const CommonOptions& opts) {
  std::string rendered;
  if (opts.format == "json") rendered = render_json(report);
  else if (opts.format == "csv") rendered = render_csv(report);
  else rendered = render_text(report);
  if (!opts.out_path.empty()) {
    std::ofstream f(opts.out_path, std::ios::binary);
    if (!f) {
      std::cerr << "cannot open output file: " << opts.out_path << "\n";
      return 2;
    }
    f << rendered;
  } else {
    std::cout << rendered;
  }
  return report.all_passed ? 0 : 1;
}

Int rat_ceil(const Rat& x) {
  const Int num = boost::multiprecision::numerator(x);
  const Int den = boost::multiprecision::denominator(x);
  Int q = num / den;
  if (q * den < num) ++q;
  return q;
}

std::string cycle_type_string(const perm_rep::CycleType& ct) {
  std::string out = "(";
  for (size_t i = 0; i < ct.parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(ct.parts[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------

int run_cp_table(int n, int m, bool grid, const CommonOptions& opts) {
  RunReport report;
  report.command = "cp-table";
  report.inputs = {{"n", std::to_string(n)}, {"m", std::to_string(m)}};
  for (int p = 1; p <= n * m; ++p) {
    Row row;
    const int k = (p - 1) / n;
    const int d = (p - 1) % n;
    row.add("p", std::to_string(p));
    row.add("k", std::to_string(k));
    row.add("d", std::to_string(d));
    const curvature::CurvatureValue min_value = curvature::min_F(n, m, p);
    if (n >= 5) {
      const curvature::CurvatureValue cp = curvature::closed_form_Cp(n, m, p);
      row.add_rat("Cp", cp.value);
      if (min_value.value != cp.value * (n + 1)) report.all_passed = false;
      if (opts.verify) {
        try {
          const curvature::CurvatureValue oracle =
              curvature::brute_force_Cp(n, m, p, opts.budget);
          const bool match = oracle.value == cp.value;
          row.add("oracle", match ? "match" : "mismatch");
          if (!match) report.all_passed = false;
        } catch (const curvature::BudgetExceeded&) {
          row.add("oracle", "skipped (budget)");
        }
      }
    } else {
      row.add("Cp", "closed form unavailable (n < 5)");
      row.add_rat("minimized", min_value.value);
      row.add_rat("minimized_normalized", min_value.value / (n + 1));
    }
    report.results.push_back(std::move(row));
  }
  if (grid && n >= 5) {
    std::ostringstream g;
    g << "grid (rows d, columns m-k):\n";
    g << "      ";
    for (int mk = 1; mk <= m; ++mk) g << "m-k=" << mk << "\t";
    g << "\n";
    for (int d = 0; d < n; ++d) {
      g << "d=" << d << "\t";
      for (int mk = 1; mk <= m; ++mk) {
        const int k = m - mk;
        const int p = k * n + d + 1;
        if (p >= 1 && p <= n * m)
          g << symprod::to_fraction_string(
                   curvature::closed_form_Cp(n, m, p).value)
            << "\t";
        else
          g << "-\t";
      }
      g << "\n";
    }
    report.extra_text = g.str();
  }
  return emit(report, opts);
}

int run_check_reidtai(int n, int m, long long d, const Rat& alpha,
                      const CommonOptions& opts) {
  RunReport report;
  report.command = "check-reidtai";
  report.inputs = {{"n", std::to_string(n)},
                   {"m", std::to_string(m)},
                   {"d", std::to_string(d)},
                   {"alpha", symprod::to_fraction_string(alpha)}};
  const perm_rep::ConditionReport res =
      perm_rep::check_condition(m, n, {d, alpha});
  Row row;
  row.add("holds", res.holds ? "true" : "false");
  if (!res.holds) {
    row.add("witness", cycle_type_string(*res.witness));
    row.add("min_sum", std::to_string(res.witness_sum));
    row.add("required", symprod::to_fraction_string(res.witness_required));
    report.all_passed = false;
  }
  report.results.push_back(std::move(row));
  return emit(report, opts);
}

int run_verify_lemcrit(int n_min, int n_max, int m_min, int m_max,
                       const std::vector<std::string>& alpha_strings,
                       const CommonOptions& opts) {
  if (n_min > n_max || m_min > m_max || alpha_strings.empty()) {
    std::cerr << "verify-lemcrit: empty range\n";
    return 2;
  }
  std::vector<Rat> alphas;
  for (const std::string& s : alpha_strings)
    alphas.push_back(symprod::parse_rational(s));
  RunReport report;
  report.command = "verify-lemcrit";
  report.inputs = {{"n_range", std::to_string(n_min) + ".." + std::to_string(n_max)},
                   {"m_range", std::to_string(m_min) + ".." + std::to_string(m_max)}};
  std::string alpha_list;
  for (size_t i = 0; i < alphas.size(); ++i)
    alpha_list += (i ? "," : "") + symprod::to_fraction_string(alphas[i]);
  report.inputs.emplace_back("alphas", alpha_list);

  for (int n = n_min; n <= n_max; ++n) {
    for (int m = m_min; m <= m_max; ++m) {
      for (const Rat& alpha : alphas) {
        Row row;
        row.add("n", std::to_string(n));
        row.add("m", std::to_string(m));
        row.add("alpha", symprod::to_fraction_string(alpha));
        const Rat threshold = perm_rep::lemcrit_threshold(n, m, alpha);
        const long long d = rat_ceil(threshold).convert_to<long long>();
        row.add("d", std::to_string(d));
        bool pass = perm_rep::check_condition(m, n, {d, alpha}).holds;
        if (alpha == 0) {
          const long long d_sharp = static_cast<long long>(n) * (m - 1) + 1;
          const perm_rep::ConditionReport sharp =
              perm_rep::check_condition(m, n, {d_sharp, Rat(0)});
          std::vector<int> transposition(m - 1, 1);
          transposition[0] = 2;
          const bool sharp_ok =
              !sharp.holds && sharp.witness &&
              sharp.witness->parts == transposition;
          if (sharp_ok)
            row.add("sharpness_witness", cycle_type_string(*sharp.witness));
          pass = pass && sharp_ok;
        }
        row.add("pass", pass ? "true" : "false");
        if (!pass) report.all_passed = false;
        report.results.push_back(std::move(row));
      }
    }
  }
  return emit(report, opts);
}

void add_bound_report(RunReport& report, const bounds::BoundReport& rep) {
  for (const auto& [k, v] : rep.inputs)
    report.inputs.emplace_back(k, symprod::to_fraction_string(v));
  Row row;
  row.add("name", rep.name);
  row.add_rat("value", rep.value);
  if (rep.margin) row.add_rat("margin", *rep.margin);
  if (rep.satisfied) {
    row.add("satisfied", *rep.satisfied ? "true" : "false");
    if (!*rep.satisfied) report.all_passed = false;
  }
  for (const auto& [k, v] : rep.extras) row.add_rat(k, v);
  report.results.push_back(std::move(row));
}

int run_section_check(int m, int N, int trials, const CommonOptions& opts) {
  RunReport report;
  report.command = "section-check";
  report.inputs = {{"m", std::to_string(m)},
                   {"N", std::to_string(N)},
                   {"seed", std::to_string(opts.seed)},
                   {"trials", std::to_string(trials)}};
  std::mt19937_64 rng(opts.seed);

  sections::MultiPoly s;
  Rat value_at_point;
  bool nonzero = false;
  for (int attempt = 0; attempt < 20 && !nonzero; ++attempt) {
    // The same two forms on every factor; distinct forms per factor would
    // break the symmetry the construction relies on.
    const std::vector<Rat> x = sections::random_form(N, rng);
    const std::vector<Rat> y = sections::random_form(N, rng);
    s = sections::build_invariant_section(
        m, N, std::vector<std::vector<Rat>>(m, x),
        std::vector<std::vector<Rat>>(m, y));
    if (s.is_zero()) continue;  // proportional draw
    // off-diagonal rational test point
    std::vector<Rat> point(m * (N + 1));
    for (auto& c : point) c = Rat(static_cast<long long>(rng() % 19) - 9);
    value_at_point = s.evaluate(point);
    nonzero = value_at_point != 0;
  }

  const bool invariant = sections::check_sm_invariance(s);
  bool degrees_ok = true;
  for (int b = 0; b < m; ++b)
    degrees_ok = degrees_ok && s.block_degree(b) == 2 * (m - 1);
  const sections::DiagonalOrderReport order =
      sections::diagonal_vanishing_order(s, trials, opts.seed ^ 0x9E3779B97F4A7C15ull);
  const bool order_ok = !order.infinite && order.order == 2;

  Row row;
  row.add("invariant", invariant ? "yes" : "no");
  row.add("block_degree", std::to_string(s.block_degree(0)));
  row.add("diagonal_order",
          order.infinite ? "infinite" : std::to_string(order.order));
  row.add("nonzero_at_random_point", nonzero ? "yes" : "no");
  report.results.push_back(std::move(row));
  report.all_passed = invariant && degrees_ok && order_ok && nonzero;
  return emit(report, opts);
}

int run_sigma_check(int max_m, int max_n, const CommonOptions& opts) {
  RunReport report;
  report.command = "sigma-check";
  report.inputs = {{"max_m", std::to_string(max_m)},
                   {"max_n", std::to_string(max_n)}};
  for (int m = 1; m <= max_m; ++m) {
    int checked = 0;
    bool ok = true;
    for (const perm_rep::CycleType& ct : perm_rep::enumerate_cycle_types(m)) {
      for (int n = 1; n <= max_n; ++n) {
        long long parts_sum = 0;
        for (int part : ct.parts) parts_sum += part - 1;
        const Rat closed = Rat(n, 2) * Rat(ct.order) * parts_sum;
        ok = ok && Rat(perm_rep::sigma_sum(ct, n)) == closed;
        ++checked;
      }
    }
    Row row;
    row.add("m", std::to_string(m));
    row.add("checked", std::to_string(checked));
    row.add("pass", ok ? "true" : "false");
    if (!ok) report.all_passed = false;
    report.results.push_back(std::move(row));
  }
  return emit(report, opts);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculators for symmetric-product hyperbolicity data"};
  app.require_subcommand(1);

  CommonOptions opts;

  // cp-table
  auto* cp = app.add_subcommand("cp-table", "Curvature constants C_p table");
  int cp_n = 5, cp_m = 2;
  bool cp_grid = false;
  cp->add_option("--n", cp_n, "Ball dimension n")->required();
  cp->add_option("--m", cp_m, "Number of factors m")->required();
  cp->add_flag("--grid", cp_grid, "Print the (d, m-k) grid layout");
  add_common(cp, opts);

  // check-reidtai
  auto* cr = app.add_subcommand("check-reidtai", "Check condition (I')");
  int cr_n = 2, cr_m = 2;
  long long cr_d = 1;
  std::string cr_alpha = "0";
  cr->add_option("--n", cr_n)->required();
  cr->add_option("--m", cr_m)->required();
  cr->add_option("--d", cr_d)->required();
  cr->add_option("--alpha", cr_alpha);
  add_common(cr, opts);

  // verify-lemcrit
  auto* vl = app.add_subcommand("verify-lemcrit", "Threshold campaign");
  int vl_nmin = 2, vl_nmax = 6, vl_mmin = 2, vl_mmax = 8;
  std::vector<std::string> vl_alphas = {"0", "1/2", "1"};
  vl->add_option("--n-min", vl_nmin);
  vl->add_option("--n-max", vl_nmax);
  vl->add_option("--m-min", vl_mmin);
  vl->add_option("--m-max", vl_mmax);
  vl->add_option("--alpha", vl_alphas)->expected(-1);
  add_common(vl, opts);

  // bounds
  auto* bd = app.add_subcommand("bounds", "Effective bound calculators");
  std::string bd_name;
  bd->add_option("name", bd_name,
                 "One of: hypcrit, bk19, kobayashi, debarre, subvariety, "
                 "ballquotient, compact-quotient, orbifold, albanese, genus")
      ->required();
  long long bd_d = 1, bd_r = 1, bd_m = 1, bd_n = 1, bd_nprime = 1;
  long long bd_q = 0, bd_l = 1, bd_codim = 0;
  std::string bd_gamma = "1", bd_delta = "1";
  bool bd_general_type = false;
  std::vector<std::string> bd_components;
  bd->add_option("--d", bd_d);
  bd->add_option("--r", bd_r);
  bd->add_option("--m", bd_m);
  bd->add_option("--n", bd_n);
  bd->add_option("--nprime", bd_nprime);
  bd->add_option("--gamma", bd_gamma);
  bd->add_option("--delta", bd_delta);
  bd->add_option("--q", bd_q);
  bd->add_option("--l", bd_l);
  bd->add_option("--codim", bd_codim);
  bd->add_flag("--general-type", bd_general_type);
  bd->add_option("--component", bd_components,
                 "Fiber component t:mult (mult rational or 'inf')");
  add_common(bd, opts);

  // section-check
  auto* sc = app.add_subcommand("section-check", "Invariant section checks");
  int sc_m = 2, sc_N = 1, sc_trials = 8;
  sc->add_option("--m", sc_m)->required();
  sc->add_option("--N", sc_N)->required();
  sc->add_option("--trials", sc_trials);
  add_common(sc, opts);

  // sigma-check
  auto* sg = app.add_subcommand("sigma-check", "Sigma identity campaign");
  int sg_m = 10, sg_n = 6;
  sg->add_option("--max-m", sg_m);
  sg->add_option("--max-n", sg_n);
  add_common(sg, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cp) return run_cp_table(cp_n, cp_m, cp_grid, opts);
    if (*cr)
      return run_check_reidtai(cr_n, cr_m, cr_d,
                               symprod::parse_rational(cr_alpha), opts);
    if (*vl)
      return run_verify_lemcrit(vl_nmin, vl_nmax, vl_mmin, vl_mmax, vl_alphas,
                                opts);
    if (*sc) {
      if (sc_m < 2) {
        std::cerr << "section-check: m >= 2 required\n";
        return 2;
      }
      return run_section_check(sc_m, sc_N, sc_trials, opts);
    }
    if (*sg) return run_sigma_check(sg_m, sg_n, opts);
    if (*bd) {
      RunReport report;
      report.command = "bounds " + bd_name;
      if (bd_name == "hypcrit") {
        add_bound_report(report, bounds::hyp_criterion_margin(bd_d, bd_r, bd_m));
      } else if (bd_name == "bk19") {
        add_bound_report(report, bounds::bk19_bound(bd_n, bd_m));
      } else if (bd_name == "kobayashi") {
        add_bound_report(report, bounds::kobayashi_sym_bound(bd_n, bd_m));
      } else if (bd_name == "debarre") {
        add_bound_report(report,
                         bounds::debarre_ci_bound(bd_n, bd_nprime, bd_m));
      } else if (bd_name == "subvariety") {
        add_bound_report(report, bounds::subvariety_gt_threshold(bd_n, bd_m));
      } else if (bd_name == "ballquotient") {
        add_bound_report(report, bounds::ball_quotient_thresholds(bd_n, bd_m));
      } else if (bd_name == "compact-quotient") {
        add_bound_report(report, bounds::compact_quotient_check(
                                     symprod::parse_rational(bd_gamma),
                                     symprod::parse_rational(bd_delta), bd_m));
      } else if (bd_name == "orbifold") {
        if (bd_components.empty()) {
          std::cerr << "orbifold: at least one --component t:mult required\n";
          return 2;
        }
        std::vector<bounds::FiberComponent> fiber;
        for (const std::string& spec : bd_components) {
          const auto colon = spec.find(':');
          if (colon == std::string::npos) {
            std::cerr << "orbifold: component must be t:mult\n";
            return 2;
          }
          bounds::FiberComponent c;
          c.scheme_multiplicity = std::stoll(spec.substr(0, colon));
          const std::string mult = spec.substr(colon + 1);
          c.orbifold_multiplicity =
              (mult == "inf") ? bounds::OrbMult::inf()
                              : bounds::OrbMult::finite(
                                    symprod::parse_rational(mult));
          fiber.push_back(std::move(c));
        }
        const bounds::OrbMult result = bounds::orbifold_multiplicity(fiber);
        Row row;
        row.add("name", "orbifold_multiplicity");
        if (result.infinite) row.add("value", "inf");
        else row.add_rat("value", result.value);
        report.results.push_back(std::move(row));
      } else if (bd_name == "albanese") {
        const bounds::AlbaneseVerdict verdict =
            bounds::albanese_degeneracy(bd_n, bd_m, bd_q, bd_general_type);
        Row row;
        row.add("name", "albanese_degeneracy");
        row.add("verdict", verdict == bounds::AlbaneseVerdict::NotZariskiDense
                               ? "NotZariskiDense"
                               : "Unknown");
        report.results.push_back(std::move(row));
      } else if (bd_name == "genus") {
        add_bound_report(report,
                         bounds::genus_estimate(bd_l, bd_codim, bd_n, bd_d));
      } else {
        std::cerr << "unknown bound name: " << bd_name << "\n";
        return 2;
      }
      return emit(report, opts);
    }
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const curvature::BudgetExceeded& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
