// subord: reproduce the sharp beta thresholds and check q_beta(D) against the
// target regions from the command line.
//
// Exit status: 0 success, 1 a check failed (deviation or containment), 2 usage.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "subord/report.hpp"
#include "subord/thresholds.hpp"
#include "subord/verifier.hpp"

namespace {

using namespace subord;
using report::OutputFormat;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::size_t n = kDefaultBoundarySamples;
  double delta = kDefaultBand;
  double tol = 1e-12;
  std::string format = "table";
  std::optional<double> beta;
  std::optional<double> a;
  std::optional<double> b;
  double eps = 1e-3;
  double r_max = 0.99;
  std::size_t lemma_n = 360;
  std::string id;
};

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "json | csv | table")->envname("SUBORD_FORMAT");
}

void add_sampling(CLI::App* cmd, Options& o) {
  cmd->add_option("--n", o.n, "boundary samples")->envname("SUBORD_N");
  cmd->add_option("--delta", o.delta, "boundary band half-width")->envname("SUBORD_DELTA");
}

void add_janowski(CLI::App* cmd, Options& o) {
  cmd->add_option("--A", o.a, "Janowski A")->envname("SUBORD_A");
  cmd->add_option("--B", o.b, "Janowski B")->envname("SUBORD_B");
}

OutputFormat output_format(const Options& o) {
  auto f = report::parse_output_format(o.format);
  if (!f) throw UsageError("unknown format '" + o.format + "'");
  return *f;
}

std::optional<JanowskiParams> janowski_params(const Options& o, bool needed) {
  if (!needed) {
    if (o.a || o.b) throw UsageError("--A/--B apply only to Janowski cases");
    return std::nullopt;
  }
  if (o.a.has_value() != o.b.has_value()) throw UsageError("give both --A and --B");
  return o.a ? JanowskiParams{*o.a, *o.b} : kDefaultJanowski;
}

TheoremCase parse_case(const Options& o) {
  auto label = parse_case_label(o.id);
  if (!label) throw UsageError("unknown case label '" + o.id + "'");
  try {
    return TheoremCase::make(*label, janowski_params(o, is_janowski(*label)));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

report::RunConfig run_config(const Options& o) {
  report::RunConfig config{o.n, o.delta, o.tol, output_format(o)};
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return config;
}

int cmd_table(const Options& o) {
  const report::RunConfig config = run_config(o);
  const auto jp = janowski_params(o, true);
  const auto rows = report::constant_table(config, *jp);
  std::cout << report::format_table(rows, config.format);
  return report::all_rows_ok(rows) ? kExitOk : kExitCheckFailed;
}

VerificationReport checked(auto&& run) {
  try {
    return run();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int cmd_verify(const Options& o) {
  const report::RunConfig config = run_config(o);
  const TheoremCase c = parse_case(o);
  const double beta = o.beta ? *o.beta : closed_form_beta(c).beta_sharp;
  const VerificationReport r =
      checked([&] { return verify_subordination(c, beta, config.n_samples, config.band); });
  std::cout << report::format_report(r, config.format);
  return r.passed ? kExitOk : kExitCheckFailed;
}

// Success means the threshold was shown sharp: the report must fail.
int cmd_sharpness(const Options& o) {
  const report::RunConfig config = run_config(o);
  const TheoremCase c = parse_case(o);
  const VerificationReport r =
      checked([&] { return sharpness_falsify(c, o.eps, config.n_samples, config.band); });
  std::cout << report::format_report(r, config.format);
  return r.passed ? kExitCheckFailed : kExitOk;
}

int cmd_curve(const Options& o) {
  const report::RunConfig config = run_config(o);
  std::vector<report::CurveSample> samples;
  try {
    if (auto kind = parse_target_kind(o.id)) {
      if (o.beta) throw UsageError("--beta applies only to case labels");
      const auto jp = janowski_params(o, *kind == TargetKind::Janowski);
      const TargetFunction target =
          jp ? TargetFunction::janowski(jp->a, jp->b) : TargetFunction(*kind);
      samples = report::target_curve(target, config.n_samples);
    } else {
      const TheoremCase c = parse_case(o);
      const double beta = o.beta ? *o.beta : closed_form_beta(c).beta_sharp;
      samples = report::case_curves(c, beta, config.n_samples);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::cout << report::format_curve(samples, config.format);
  return kExitOk;
}

int cmd_lemma(const Options& o) {
  const OutputFormat format = output_format(o);
  LemmaCheck check{};
  try {
    check = lemma_minimum(o.r_max, o.lemma_n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::cout << report::format_lemma(check, o.r_max, o.lemma_n, format);
  return check.holds ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sharp subordination thresholds for 1 + beta z p'/p^j < sqrt(1+z)"};
  app.require_subcommand(1);
  Options o;

  auto* table = app.add_subcommand("table", "reproduce the threshold constants");
  table->add_option("--tol", o.tol, "bisection tolerance")->envname("SUBORD_TOL");
  add_janowski(table, o);
  add_format(table, o);

  auto* verify = app.add_subcommand("verify", "check q_beta(D) inside P(D)");
  verify->add_option("case", o.id, "case label, e.g. T1a")->required();
  verify->add_option("--beta", o.beta, "beta (default: sharp value)")->envname("SUBORD_BETA");
  add_janowski(verify, o);
  add_sampling(verify, o);
  add_format(verify, o);

  auto* sharp = app.add_subcommand("sharpness", "show failure at (1 - eps) * sharp beta");
  sharp->add_option("case", o.id, "case label")->required();
  sharp->add_option("--eps", o.eps, "relative step below the sharp beta")->envname("SUBORD_EPS");
  add_janowski(sharp, o);
  add_sampling(sharp, o);
  add_format(sharp, o);

  auto* curve = app.add_subcommand("curve", "emit boundary samples for plotting");
  curve->add_option("id", o.id, "case label or target name")->required();
  curve->add_option("--beta", o.beta, "beta for q (default: sharp value)")->envname("SUBORD_BETA");
  add_janowski(curve, o);
  curve->add_option("--n", o.n, "samples per curve")->envname("SUBORD_N");
  add_format(curve, o);

  auto* lemma = app.add_subcommand("lemma-check", "check Re(zQ'/Q) > 0 on a polar grid");
  lemma->add_option("--r-max", o.r_max, "outer radius");
  lemma->add_option("--n", o.lemma_n, "grid size (radii and angles)")->envname("SUBORD_N");
  add_format(lemma, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*table) return cmd_table(o);
    if (*verify) return cmd_verify(o);
    if (*sharp) return cmd_sharpness(o);
    if (*curve) return cmd_curve(o);
    if (*lemma) return cmd_lemma(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}
