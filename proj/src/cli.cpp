#include "ehplab/cli.hpp"

#include "ehplab/bounds.hpp"
#include "ehplab/closed_forms.hpp"
#include "ehplab/enumeration.hpp"
#include "ehplab/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#ifndef EHPLAB_DEFAULT_DATA_DIR
#define EHPLAB_DEFAULT_DATA_DIR "data"
#endif

namespace ehplab {
namespace {

using nlohmann::json;

const std::vector<std::string> kSeriesKinds = {
    "A-enumerated", "A-closed", "A-verbatim", "welcher", "p_M0_Mk",
    "L_S",          "unstable-bound", "I",    "admissible"};

struct Options {
  std::string stable_table;
  std::string unstable_table;
  std::string format = "csv";
  std::string out;

  std::size_t Q = kDefaultTruncation;
  std::string kind;
  std::vector<unsigned> k = {1};
  std::vector<unsigned> n = {3};
  std::optional<unsigned> q;
  unsigned q_max = 30;
};

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void write_series(std::ostream& out, const TruncatedSeries& s, const std::string& format) {
  if (format == "json") {
    out << to_json(s).dump(2) << '\n';
    return;
  }
  out << "degree,coefficient\n";
  for (std::size_t d = 0; d <= s.trunc_degree(); ++d)
    if (s[d] != 0) out << d << ',' << to_string(s[d]) << '\n';
}

unsigned single(const std::vector<unsigned>& v, const char* flag) {
  if (v.size() != 1) throw CLI::ValidationError(flag, "expects a single value here");
  return v.front();
}

int cmd_verify(const Options& o, std::ostream& out) {
  SuiteConfig config;
  config.trunc_degree = o.Q;
  config.stable_table = o.stable_table;
  config.unstable_table = o.unstable_table;
  const auto report = run_suite(config);
  out << report.to_json().dump(2) << '\n';
  return report.ok() ? 0 : 1;
}

int cmd_series(const Options& o, std::ostream& out) {
  const unsigned k = single(o.k, "--k");
  const unsigned n = single(o.n, "--n");
  const std::size_t Q = o.Q;
  const std::string& kind = o.kind;

  if (kind == "I") {
    out << to_json(enumerate_I(k, n, static_cast<unsigned>(Q))).dump(2) << '\n';
    return 0;
  }
  if (kind == "admissible") {
    std::vector<Rational> c(Q + 1);
    for (const auto& [deg, count] : enumerate_admissible(k, static_cast<unsigned>(Q)))
      c[deg] = Rational(count);
    write_series(out, TruncatedSeries(Q, std::move(c)), o.format);
    return 0;
  }
  if (kind == "A-enumerated") {
    write_series(out, series_A_enum(k, n, Q), o.format);
  } else if (kind == "A-closed") {
    write_series(out, a_closed_form(k, n, Q), o.format);
  } else if (kind == "A-verbatim") {
    write_series(out, a_closed_form(k, n, Q, AFormula::verbatim), o.format);
  } else if (kind == "welcher") {
    write_series(out, welcher_series(k, Q), o.format);
  } else if (kind == "p_M0_Mk") {
    write_series(out, p_M0_Mk(k, Q), o.format);
  } else if (kind == "L_S") {
    write_series(out, load_stable_table(o.stable_table).L_S_series(Q), o.format);
  } else if (kind == "unstable-bound") {
    write_series(out, unstable_bound_series(k, n, Q, load_stable_table(o.stable_table)), o.format);
  }
  return 0;
}

int cmd_bound(const Options& o, std::ostream& out) {
  std::vector<unsigned> qs;
  if (o.q) {
    qs.push_back(*o.q);
  } else {
    for (unsigned q = 0; q <= o.q_max; ++q) qs.push_back(q);
  }
  json rows = json::array();
  if (o.format == "csv") out << "q,k,n,mainthm,final_remark,remark45,mahler_limit\n";
  for (unsigned k : o.k)
    for (unsigned n : o.n)
      for (unsigned q : qs) {
        const Rational main = tower_stage_bound(k, q);
        const auto nd = n_dependent_bounds(k, n, q);
        const double limit = mahler_F(q + 1.0).value;
        if (o.format == "csv") {
          out << q << ',' << k << ',' << n << ',' << to_string(main) << ','
              << to_string(nd.stage_bound) << ',' << to_string(nd.coefficient_bound) << ','
              << format_double(limit) << '\n';
        } else {
          rows.push_back({{"q", q}, {"k", k}, {"n", n}, {"mainthm", to_string(main)},
                          {"final_remark", to_string(nd.stage_bound)},
                          {"remark45", to_string(nd.coefficient_bound)}, {"mahler_limit", limit}});
        }
      }
  if (o.format == "json") out << rows.dump(2) << '\n';
  return 0;
}

int cmd_fit(const Options& o, std::ostream& out) {
  const auto fit = conjecture_fit(load_stable_table(o.stable_table));
  if (o.format == "json") {
    json residuals = json::array();
    for (const auto& r : fit.residuals) residuals.push_back(to_string(r));
    out << json{{"q_last", fit.q_last}, {"C", fit.C}, {"a", to_string(fit.a)},
                {"b", to_string(fit.b)}, {"tight_a", to_string(fit.tight_a)},
                {"tight_b", to_string(fit.tight_b)}, {"residuals", residuals}}
               .dump(2)
        << '\n';
  } else {
    out << "q_last,C,a,b,tight_a,tight_b\n"
        << fit.q_last << ',' << format_double(fit.C) << ',' << to_string(fit.a) << ','
        << to_string(fit.b) << ',' << to_string(fit.tight_a) << ',' << to_string(fit.tight_b)
        << '\n';
  }
  return 0;
}

}  // namespace

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("EHPLAB_DATA_DIR"); env && *env) return env;
  return EHPLAB_DEFAULT_DATA_DIR;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  const auto data = default_data_dir();
  o.stable_table = (data / "stable_stems.csv").string();
  o.unstable_table = (data / "unstable_groups.csv").string();

  CLI::App app{"Goodwillie tower and EHP bound verification", "ehplab"};
  app.require_subcommand(1);

  const auto add_tables = [&](CLI::App* sub) {
    sub->add_option("--stable-table", o.stable_table, "stable stems CSV (q,orders)");
    sub->add_option("--unstable-table", o.unstable_table, "unstable groups CSV (n,q,orders)");
  };
  const auto add_output = [&](CLI::App* sub, bool with_format) {
    if (with_format)
      sub->add_option("--format", o.format, "output format")
          ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", o.out, "write output to PATH instead of stdout");
  };

  auto* verify = app.add_subcommand("verify", "run the verification suite, print a JSON report");
  verify->add_option("--Q", o.Q, "truncation degree")->check(CLI::Range(1, 512));
  add_tables(verify);
  add_output(verify, false);

  auto* series = app.add_subcommand("series", "dump a power series or grading");
  series->add_option("--kind", o.kind, "series to dump")
      ->required()
      ->check(CLI::IsMember(kSeriesKinds));
  series->add_option("--k", o.k, "tower stage k or word length")->expected(1);
  series->add_option("--n", o.n, "sphere dimension n")->expected(1);
  series->add_option("--Q", o.Q, "truncation degree")->check(CLI::Range(0, 4096));
  add_tables(series);
  add_output(series, true);

  auto* bound = app.add_subcommand("bound", "tabulate stage bounds over a (k, n, q) grid");
  bound->add_option("--k", o.k, "stage indices")->delimiter(',');
  bound->add_option("--n", o.n, "sphere dimensions")->delimiter(',');
  auto* q_opt = bound->add_option("--q", o.q, "single stem");
  bound->add_option("--q-max", o.q_max, "stems 0..q-max")->excludes(q_opt);
  add_output(bound, true);

  auto* fit = app.add_subcommand("fit", "fit the quadratic growth constants to the stable table");
  add_tables(fit);
  add_output(fit, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "ehplab: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) {
      err << "ehplab: cannot open '" << o.out << "' for writing\n";
      return 1;
    }
  }
  std::ostream& sink = o.out.empty() ? out : file;

  try {
    if (*verify) return cmd_verify(o, sink);
    if (*series) return cmd_series(o, sink);
    if (*bound) return cmd_bound(o, sink);
    return cmd_fit(o, sink);
  } catch (const CLI::ValidationError& e) {
    err << "ehplab: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "ehplab: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace ehplab
