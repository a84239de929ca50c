#include "subord/thresholds.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

namespace subord {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kLn2 = std::numbers::ln2;

struct CaseInfo {
  CaseLabel label;
  std::string_view name;
  SolutionFamily family;
  TargetKind target;
  std::optional<double> printed;
};

constexpr std::array<CaseInfo, 15> kCases{{
    {CaseLabel::T1a, "T1a", SolutionFamily::Linear, TargetKind::Sqrt, 1.09116},
    {CaseLabel::T1b, "T1b", SolutionFamily::Linear, TargetKind::Rational0, 3.57694},
    {CaseLabel::T1c, "T1c", SolutionFamily::Linear, TargetKind::Sine, 0.729325},
    {CaseLabel::T1d, "T1d", SolutionFamily::Linear, TargetKind::Lune, 1.044766},
    {CaseLabel::T1e, "T1e", SolutionFamily::Linear, TargetKind::Cardioid, 0.920558},
    {CaseLabel::T1f, "T1f", SolutionFamily::Linear, TargetKind::Janowski, 0.151764},
    {CaseLabel::T2a, "T2a", SolutionFamily::Exponential, TargetKind::Rational0, 3.26047},
    {CaseLabel::T2b, "T2b", SolutionFamily::Exponential, TargetKind::Sine, 0.740256},
    {CaseLabel::T2c, "T2c", SolutionFamily::Exponential, TargetKind::Lune, 0.696306},
    {CaseLabel::T2d, "T2d", SolutionFamily::Exponential, TargetKind::Exp, 0.613706},
    {CaseLabel::T2e, "T2e", SolutionFamily::Exponential, TargetKind::Janowski, std::nullopt},
    {CaseLabel::T3a, "T3a", SolutionFamily::Reciprocal, TargetKind::Rational0, 2.96323},
    {CaseLabel::T3b, "T3b", SolutionFamily::Reciprocal, TargetKind::Sine, 0.989098},
    {CaseLabel::T3c, "T3c", SolutionFamily::Reciprocal, TargetKind::Lune, 0.771568},
    {CaseLabel::T3d, "T3d", SolutionFamily::Reciprocal, TargetKind::Janowski, 0.151764},
}};

const CaseInfo& info(CaseLabel label) { return kCases[static_cast<std::size_t>(label)]; }

// 2(1 - log 2) = -2 G(-1)
double left_numerator() { return 2.0 * (1.0 - kLn2); }

// G(1) = sqrt2 - 1 + log 2 - log(1 + sqrt2)
double kernel_at_one() { return kSqrt2 - 1.0 + kLn2 - std::log(1.0 + kSqrt2); }

double right_numerator() { return 2.0 * kernel_at_one(); }

ThresholdResult make_result(double beta1, double beta2, ThresholdSource source) {
  return {beta1, beta2, std::max(beta1, beta2), source};
}

}  // namespace

std::string_view to_string(CaseLabel label) { return info(label).name; }

std::optional<CaseLabel> parse_case_label(std::string_view text) {
  for (const auto& c : kCases) {
    if (text.size() == 3 && std::toupper(static_cast<unsigned char>(text[0])) == 'T' &&
        text[1] == c.name[1] &&
        std::tolower(static_cast<unsigned char>(text[2])) == c.name[2])
      return c.label;
  }
  return std::nullopt;
}

SolutionFamily family_of(CaseLabel label) { return info(label).family; }
TargetKind target_kind_of(CaseLabel label) { return info(label).target; }
std::optional<double> printed_decimal(CaseLabel label) { return info(label).printed; }

std::string_view to_string(ThresholdSource source) {
  return source == ThresholdSource::ClosedForm ? "closed-form" : "numeric";
}

std::string_view to_string(Side side) { return side == Side::Left ? "left" : "right"; }

TheoremCase TheoremCase::make(CaseLabel label, std::optional<JanowskiParams> params) {
  const CaseInfo& ci = info(label);
  if (ci.target == TargetKind::Janowski) {
    if (!params) throw std::invalid_argument(std::string(ci.name) + " needs Janowski A and B");
    return {label, ci.family, TargetFunction::janowski(params->a, params->b)};
  }
  if (params) throw std::invalid_argument(std::string(ci.name) + " takes no A, B parameters");
  return {label, ci.family, TargetFunction(ci.target)};
}

std::string TheoremCase::name() const {
  if (!is_janowski(label)) return std::string(to_string(label));
  return std::string(to_string(label)) + "[" + target.name() + "]";
}

ThresholdResult closed_form_beta(const TheoremCase& c) {
  const double c1 = left_numerator();
  const double c2 = right_numerator();
  const double g1 = kernel_at_one();
  const double sin1 = std::sin(1.0);
  const double a = c.target.a();
  const double b = c.target.b();
  constexpr auto kClosed = ThresholdSource::ClosedForm;

  switch (c.label) {
    case CaseLabel::T1a: return make_result(c1, c2 / (kSqrt2 - 1.0), kClosed);
    case CaseLabel::T1b: return make_result(c1 / (3.0 - 2.0 * kSqrt2), c2, kClosed);
    case CaseLabel::T1c: return make_result(c1 / sin1, c2 / sin1, kClosed);
    case CaseLabel::T1d: return make_result((2.0 + kSqrt2) * (1.0 - kLn2), kSqrt2 * g1, kClosed);
    // right bound is 2 G(1) / (phi_C(1) - 1) = G(1)
    case CaseLabel::T1e: return make_result(3.0 * (1.0 - kLn2), g1, kClosed);
    case CaseLabel::T1f:
      return make_result(c1 * (1.0 - b) / (a - b), c2 * (1.0 + b) / (a - b), kClosed);

    case CaseLabel::T2a:
      return make_result(2.0 * (kLn2 - 1.0) / std::log(2.0 * kSqrt2 - 2.0), c2 / kLn2, kClosed);
    case CaseLabel::T2b:
      return make_result(2.0 * (kLn2 - 1.0) / std::log(1.0 - sin1), c2 / std::log(1.0 + sin1),
                         kClosed);
    case CaseLabel::T2c:
      return make_result(2.0 * (kLn2 - 1.0) / std::log(kSqrt2 - 1.0),
                         c2 / std::log(1.0 + kSqrt2), kClosed);
    case CaseLabel::T2d: return make_result(c1, c2, kClosed);
    case CaseLabel::T2e:
      return make_result(c1 / (std::log(1.0 - b) - std::log(1.0 - a)),
                         c2 / (std::log(1.0 + a) - std::log(1.0 + b)), kClosed);

    case CaseLabel::T3a:
      return make_result(4.0 * (1.0 + kSqrt2) * (1.0 - kLn2), 2.0 * c2, kClosed);
    case CaseLabel::T3b:
      return make_result(c1 * (1.0 - sin1) / sin1, c2 * (1.0 + sin1) / sin1, kClosed);
    case CaseLabel::T3c: return make_result(c1 / kSqrt2, (2.0 + kSqrt2) * g1, kClosed);
    case CaseLabel::T3d:
      return make_result(c1 * (1.0 - a) / (a - b), c2 * (1.0 + a) / (a - b), kClosed);
  }
  return make_result(0.0, 0.0, kClosed);
}

double beta_endpoint(const TheoremCase& c, Side side) {
  const double x = side == Side::Left ? -1.0 : 1.0;
  const Endpoints ends = endpoints(c.target);
  const double p = side == Side::Left ? ends.left : ends.right;
  const double g2 = 2.0 * kernel(x);
  switch (c.family) {
    case SolutionFamily::Linear: return g2 / (p - 1.0);
    case SolutionFamily::Exponential: return g2 / std::log(p);
    case SolutionFamily::Reciprocal: return g2 * p / (p - 1.0);
  }
  return 0.0;
}

namespace {

double bisect_endpoint(const TheoremCase& c, Side side, double tol) {
  const double x = side == Side::Left ? -1.0 : 1.0;
  const Endpoints ends = endpoints(c.target);
  const double target = side == Side::Left ? ends.left : ends.right;
  auto g = [&](double beta) { return dominant_on_axis(c.family, beta, x) - target; };

  // q_beta(-1) has no pole for any beta > 0; only the right side needs the guard.
  double lo = 1e-4;
  if (c.family == SolutionFamily::Reciprocal && side == Side::Right)
    lo = std::max(pole_guard() * (1.0 + 1e-9), 1e-4);
  double hi = 1e3;
  const double g_lo = g(lo);
  const double g_hi = g(hi);
  if (!(std::signbit(g_lo) != std::signbit(g_hi)))
    throw SolverError("no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) +
                      "] for " + c.name() + " " + std::string(to_string(side)));

  const bool rising = g_lo < 0.0;
  for (int iter = 0; iter < 2000; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) return mid;
    const double gm = g(mid);
    if (std::abs(gm) <= tol && hi - lo <= tol * std::max(1.0, mid)) return mid;
    if ((gm < 0.0) == rising)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

ThresholdResult beta_numeric(const TheoremCase& c, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  return make_result(bisect_endpoint(c, Side::Left, tol), bisect_endpoint(c, Side::Right, tol),
                     ThresholdSource::Numeric);
}

double janowski_crossover(SolutionFamily family) {
  if (family == SolutionFamily::Exponential)
    throw std::invalid_argument("no Janowski crossover constant for j = 1");
  return 2.0 * (1.0 - kLn2) / (kSqrt2 - std::log(1.0 + kSqrt2)) - 1.0;
}

Side dominant_side(const TheoremCase& c) {
  const ThresholdResult r = closed_form_beta(c);
  return r.beta1 >= r.beta2 ? Side::Left : Side::Right;
}

}  // namespace subord
