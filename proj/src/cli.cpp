#include "derange/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "derange/bijections.hpp"
#include "derange/cycles.hpp"
#include "derange/error.hpp"
#include "derange/oracle.hpp"
#include "derange/sampling.hpp"
#include "derange/series.hpp"
#include "derange/tables.hpp"

namespace derange {
namespace {

struct TableCmd {
  std::string which;
  int max_n = 1;
  std::string format = "text";
};

struct CountCmd {
  std::string which;
  int n = 0;
};

struct BijCmd {
  std::string which;
  std::string cycles;
};

struct VerifyCmd {
  int max_n = 8;
  std::string format = "text";
  std::string corrupt;
};

struct SeriesCmd {
  int degree = 1;
};

struct SampleCmd {
  std::string which;
  int n = 1;
  long long samples = 100000;
  std::uint64_t seed = 1;
  std::string format = "text";
};

void check_count_range(int n, int lo, int hi, const std::string& which) {
  if (n < lo || n > hi) {
    fail(Errc::usage_error, "--n for '" + which + "' must be in [" +
                                std::to_string(lo) + ".." + std::to_string(hi) + "]");
  }
}

int parse_int_field(std::string_view text) {
  int value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    fail(Errc::usage_error, "--inject-corruption wants two integers as 'n,k'");
  }
  return value;
}

std::pair<int, int> parse_corruption(const std::string& text, int max_n) {
  const std::size_t comma = text.find(',');
  if (comma == std::string::npos) {
    fail(Errc::usage_error, "--inject-corruption wants two integers as 'n,k'");
  }
  const int n = parse_int_field(std::string_view(text).substr(0, comma));
  const int k = parse_int_field(std::string_view(text).substr(comma + 1));
  if (k < 1 || n < k || n > max_n) {
    fail(Errc::usage_error, "--inject-corruption needs 1 <= k <= n <= " +
                                std::to_string(max_n));
  }
  return {n, k};
}

void run_table(const TableCmd& cmd, std::ostream& out) {
  const CountTriangle t =
      cmd.which == "a" ? a_triangle(cmd.max_n) : b_triangle(cmd.max_n);
  if (cmd.format == "csv") {
    out << triangle_csv(t);
  } else if (cmd.format == "json") {
    out << triangle_json(t) << '\n';
  } else {
    for (int n = 1; n <= t.max_n(); ++n) {
      out << n << ':';
      for (int k = 1; k <= n; ++k) out << ' ' << t.at(n, k);
      out << '\n';
    }
  }
}

void run_count(const CountCmd& cmd, std::ostream& out) {
  BigInt value;
  if (cmd.which == "d") {
    check_count_range(cmd.n, 0, 1000, cmd.which);
    value = derangements_up_to(cmd.n).at(cmd.n);
  } else if (cmd.which == "alpha") {
    check_count_range(cmd.n, 1, 300, cmd.which);
    value = alpha(cmd.n, a_triangle(cmd.n));
  } else if (cmd.which == "beta") {
    check_count_range(cmd.n, 1, 300, cmd.which);
    value = beta(cmd.n, b_triangle(cmd.n));
  } else {
    check_count_range(cmd.n, 1, 1000, cmd.which);
    value = e_count(cmd.n);
  }
  out << value.str() << '\n';
}

void run_bij(const BijCmd& cmd, std::ostream& out) {
  const CycleForm form = parse_cycles(cmd.cycles);
  const bool forward = cmd.which == "phi" || cmd.which == "psi";
  if (forward && form.mark.has_value()) {
    fail(Errc::usage_error,
         "forward maps take an unmarked permutation; drop the '_'");
  }
  if (!forward && !form.mark.has_value()) {
    fail(Errc::usage_error, "inverse maps need exactly one marked element");
  }
  if (forward) {
    const Permutation p = to_permutation(form);
    const MarkedPermutation m = cmd.which == "phi" ? phi(p) : psi(p);
    out << to_canonical_cycles(m.perm, m.mark) << '\n';
    return;
  }
  const MarkMode mode =
      cmd.which == "phi-inv" ? MarkMode::largest : MarkMode::smallest;
  const MarkedPermutation m{to_permutation(form), *form.mark, mode};
  const Permutation result = cmd.which == "phi-inv" ? phi_inv(m) : psi_inv(m);
  out << to_canonical_cycles(result) << '\n';
}

int run_verify(const VerifyCmd& cmd, std::ostream& out) {
  CountTriangle a = a_triangle(cmd.max_n);
  if (!cmd.corrupt.empty()) {
    const auto [cn, ck] = parse_corruption(cmd.corrupt, cmd.max_n);
    std::vector<std::vector<BigInt>> rows = a.rows();
    rows[static_cast<std::size_t>(cn - 1)][static_cast<std::size_t>(ck - 1)] += 1;
    a = CountTriangle(std::move(rows));
  }

  std::vector<OracleReport> reports = full_sweep(
      cmd.max_n, a, b_triangle(cmd.max_n), derangements_up_to(cmd.max_n));
  for (int m = 2; m <= std::min(cmd.max_n + 1, kOracleCap); ++m) {
    for (const BijectionKind kind : {BijectionKind::phi, BijectionKind::psi}) {
      std::vector<OracleReport> more = verify_bijection(m, kind);
      reports.insert(reports.end(), more.begin(), more.end());
    }
  }

  const bool ok = all_agree(reports);
  if (cmd.format == "csv") {
    out << reports_csv(reports);
  } else {
    long long disagreements = 0;
    for (const OracleReport& r : reports) {
      if (r.agrees) continue;
      ++disagreements;
      out << "MISMATCH " << r.quantity << " n=" << r.n;
      if (r.k.has_value()) out << " k=" << *r.k;
      out << ": brute " << r.brute_value.str() << " vs formula "
          << r.formula_value.str() << '\n';
    }
    out << reports.size() << " comparisons up to n=" << cmd.max_n << ": ";
    if (ok) {
      out << "all agree\n";
    } else {
      out << disagreements << " disagree\n";
    }
  }
  return ok ? 0 : 1;
}

int run_series(const SeriesCmd& cmd, std::ostream& out) {
  const EgfSeries series = egf_derangements(cmd.degree);
  const DerangementSequence d = derangements_up_to(cmd.degree);
  bool coeffs_ok = true;
  out << "n n!*coeff d_n agree\n";
  for (int n = 0; n <= cmd.degree; ++n) {
    const BigRat scaled = series.coeff(n) * factorial(n);
    const bool ok = denominator(scaled) == 1 && numerator(scaled) == d.at(n);
    coeffs_ok = coeffs_ok && ok;
    out << n << ' ' << scaled << ' ' << d.at(n) << ' ' << (ok ? "yes" : "no")
        << '\n';
  }
  const bool identity_ok = egf_identity_check(cmd.degree);
  out << "identity check: " << (identity_ok ? "pass" : "fail") << '\n';
  return coeffs_ok && identity_ok ? 0 : 1;
}

int run_sample(const SampleCmd& cmd, bool has_n, std::ostream& out) {
  const RngSpec rng{cmd.seed, "mt19937-64"};
  StatSummary s;
  if (cmd.which == "poisson") {
    if (has_n) fail(Errc::usage_error, "'sample poisson' takes no --n");
    s = poisson_conditioned_max(cmd.samples, rng);
  } else {
    if (!has_n) fail(Errc::usage_error, "'sample " + cmd.which + "' needs --n");
    s = cmd.which == "largest"
            ? estimate_largest_fp_mean(cmd.n, cmd.samples, rng)
            : estimate_beta_fraction(cmd.n, cmd.samples, rng);
  }
  if (cmd.format == "json") {
    out << summary_json(s) << '\n';
  } else {
    out << summary_text(s);
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact and statistical checks for fixed-point counts of permutations"};
  app.require_subcommand(1);

  TableCmd table_cmd;
  CLI::App* table = app.add_subcommand(
      "table", "print the triangle counting permutations by largest (a) or "
               "smallest (b) fixed point");
  table->add_option("which", table_cmd.which, "a or b")
      ->required()
      ->check(CLI::IsMember({"a", "b"}));
  table->add_option("--max-n", table_cmd.max_n, "rows to compute")
      ->required()
      ->check(CLI::Range(1, 300));
  table->add_option("--format", table_cmd.format, "csv, json, or text")
      ->check(CLI::IsMember({"csv", "json", "text"}));

  CountCmd count_cmd;
  CLI::App* count = app.add_subcommand(
      "count", "print one exact value: d (derangements), alpha, beta, or e "
               "(permutations with two or more fixed points)");
  count->add_option("which", count_cmd.which, "d, alpha, beta, or e")
      ->required()
      ->check(CLI::IsMember({"d", "alpha", "beta", "e"}));
  count->add_option("--n", count_cmd.n, "index")->required();

  BijCmd bij_cmd;
  CLI::App* bij = app.add_subcommand(
      "bij", "apply a fixed-point bijection to a permutation in cycle form");
  bij->add_option("which", bij_cmd.which, "phi, phi-inv, psi, or psi-inv")
      ->required()
      ->check(CLI::IsMember({"phi", "phi-inv", "psi", "psi-inv"}));
  bij->add_option("cycles", bij_cmd.cycles,
                  "cycle text, e.g. \"(3,1,2)(4)\"; mark with '_'")
      ->required();

  VerifyCmd verify_cmd;
  CLI::App* verify = app.add_subcommand(
      "verify", "brute-force every count and bijection up to --max-n; exits "
                "nonzero on any disagreement");
  verify->add_option("--max-n", verify_cmd.max_n, "largest size to enumerate")
      ->check(CLI::Range(1, kOracleCap));
  verify->add_option("--format", verify_cmd.format, "csv or text")
      ->check(CLI::IsMember({"csv", "text"}));
  verify->add_option("--inject-corruption", verify_cmd.corrupt,
                     "n,k: add one to that a-triangle entry first (the checks "
                     "must then fail)");

  SeriesCmd series_cmd;
  CLI::App* series = app.add_subcommand(
      "series", "compare the exponential generating function coefficients "
                "against the derangement recurrence");
  series->add_option("--degree", series_cmd.degree, "truncation degree")
      ->required()
      ->check(CLI::Range(1, 200));

  SampleCmd sample_cmd;
  CLI::App* sample = app.add_subcommand(
      "sample", "Monte Carlo estimate: largest (mean l(pi)/n), beta "
                "(two-or-more-fixed-points fraction), or poisson "
                "(conditioned max of a rate-1 process)");
  sample->add_option("which", sample_cmd.which, "largest, beta, or poisson")
      ->required()
      ->check(CLI::IsMember({"largest", "beta", "poisson"}));
  CLI::Option* sample_n =
      sample->add_option("--n", sample_cmd.n, "permutation size")
          ->check(CLI::Range(1, 1000000));
  sample->add_option("--samples", sample_cmd.samples, "number of draws")
      ->check(CLI::Range(1LL, 1000000000LL));
  sample->add_option("--seed", sample_cmd.seed, "rng seed");
  sample->add_option("--format", sample_cmd.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << errc_name(Errc::usage_error) << '\n' << e.what() << '\n';
    return 2;
  }

  try {
    if (table->parsed()) {
      run_table(table_cmd, out);
      return 0;
    }
    if (count->parsed()) {
      run_count(count_cmd, out);
      return 0;
    }
    if (bij->parsed()) {
      run_bij(bij_cmd, out);
      return 0;
    }
    if (verify->parsed()) return run_verify(verify_cmd, out);
    if (series->parsed()) return run_series(series_cmd, out);
    if (sample->parsed()) return run_sample(sample_cmd, sample_n->count() > 0, out);
  } catch (const Error& e) {
    err << e.name() << '\n' << e.what() << '\n';
    return e.code() == Errc::usage_error ? 2 : 1;
  }
  err << errc_name(Errc::usage_error) << '\n';
  err << "expected one subcommand\n";
  return 2;
}

}  // namespace derange
