#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subord/thresholds.hpp"
#include "subord/verifier.hpp"

namespace subord::report {

enum class OutputFormat { Json, Csv, Table };

std::optional<OutputFormat> parse_output_format(std::string_view text);

struct RunConfig {
  std::size_t n_samples = kDefaultBoundarySamples;
  double band = kDefaultBand;
  double tol = 1e-12;
  OutputFormat format = OutputFormat::Table;

  /// Throws std::invalid_argument if band or tol is not positive or n is 0.
  void validate() const;
};

/// Allowed deviation from a printed decimal.
inline constexpr double kPrintedTolerance = 1e-5;

struct TableRow {
  TheoremCase theorem_case;
  ThresholdResult closed;
  ThresholdResult numeric;
  /// The value the printed decimal refers to: beta_sharp, or the crossover
  /// constant for T1f and T3d. Absent when nothing is printed (T2e).
  std::optional<double> reproduced;
  std::optional<double> printed;
  std::optional<double> deviation;

  bool ok() const { return !deviation || *deviation <= kPrintedTolerance; }
};

/// One row per theorem part; Janowski rows use `janowski`.
std::vector<TableRow> constant_table(const RunConfig& config,
                                     JanowskiParams janowski = kDefaultJanowski);

bool all_rows_ok(const std::vector<TableRow>& rows);

struct CurveSample {
  std::string curve;
  std::size_t index;
  double theta;
  Complex value;
};

/// Samples of the target boundary P(e^{i theta}).
std::vector<CurveSample> target_curve(const TargetFunction& target, std::size_t n);

/// Samples of q_beta(e^{i theta}) followed by the case's target boundary.
std::vector<CurveSample> case_curves(const TheoremCase& c, double beta, std::size_t n);

/// "%.17g"; JSON null for non-finite values.
std::string format_number(double x);

std::string format_table(const std::vector<TableRow>& rows, OutputFormat format);
std::string format_report(const VerificationReport& report, OutputFormat format);
std::string format_curve(const std::vector<CurveSample>& samples, OutputFormat format);
std::string format_lemma(const LemmaCheck& check, double r_max, std::size_t n,
                         OutputFormat format);

}  // namespace subord::report
