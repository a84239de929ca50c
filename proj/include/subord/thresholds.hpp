#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "subord/dominant.hpp"
#include "subord/targets.hpp"

namespace subord {

/// Theorem parts: T1* pair with j = 0, T2* with j = 1, T3* with j = 2.
enum class CaseLabel { T1a, T1b, T1c, T1d, T1e, T1f, T2a, T2b, T2c, T2d, T2e, T3a, T3b, T3c, T3d };

inline constexpr std::array<CaseLabel, 15> kAllCases{
    CaseLabel::T1a, CaseLabel::T1b, CaseLabel::T1c, CaseLabel::T1d, CaseLabel::T1e,
    CaseLabel::T1f, CaseLabel::T2a, CaseLabel::T2b, CaseLabel::T2c, CaseLabel::T2d,
    CaseLabel::T2e, CaseLabel::T3a, CaseLabel::T3b, CaseLabel::T3c, CaseLabel::T3d};

std::string_view to_string(CaseLabel label);
std::optional<CaseLabel> parse_case_label(std::string_view text);

SolutionFamily family_of(CaseLabel label);
TargetKind target_kind_of(CaseLabel label);
inline bool is_janowski(CaseLabel label) { return target_kind_of(label) == TargetKind::Janowski; }

struct JanowskiParams {
  double a;
  double b;
};

/// Parameters used wherever a Janowski case needs a default.
inline constexpr JanowskiParams kDefaultJanowski{0.5, -0.5};

struct TheoremCase {
  CaseLabel label;
  SolutionFamily family;
  TargetFunction target;

  /// Janowski labels require params, the others reject them.
  /// Throws std::invalid_argument.
  static TheoremCase make(CaseLabel label, std::optional<JanowskiParams> params = std::nullopt);

  std::string name() const;
};

enum class ThresholdSource { ClosedForm, Numeric };
enum class Side { Left, Right };

std::string_view to_string(ThresholdSource source);
std::string_view to_string(Side side);

struct ThresholdResult {
  double beta1;
  double beta2;
  double beta_sharp;
  ThresholdSource source;
};

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Both endpoint bounds from the theorem closed forms; beta_sharp = max.
ThresholdResult closed_form_beta(const TheoremCase& c);

/// Solves q_beta(x) = P(x) for beta in closed form, x = -1 (Left) or +1 (Right).
double beta_endpoint(const TheoremCase& c, Side side);

/// Bisection on beta -> q_beta(x) - P(x) for both endpoints.
/// Throws SolverError if a bracket does not straddle a sign change.
ThresholdResult beta_numeric(const TheoremCase& c, double tol = 1e-12);

/// Parameter where the two Janowski bounds coincide: B0 for j = 0, A0 for j = 2.
/// Throws std::invalid_argument for j = 1.
double janowski_crossover(SolutionFamily family);

/// Endpoint whose bound is binding (the larger of beta1, beta2; Left on ties).
Side dominant_side(const TheoremCase& c);

/// Decimal printed alongside the theorem part (the crossover constant for
/// T1f and T3d); nullopt for T2e.
std::optional<double> printed_decimal(CaseLabel label);

}  // namespace subord
