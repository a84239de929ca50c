#include "subord/verifier.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace subord {

VerificationReport verify_subordination(const TheoremCase& c, double beta, std::size_t n,
                                        double band) {
  if (n < 256) throw std::invalid_argument("verification needs at least 256 samples");
  if (!(band > 0.0)) throw std::invalid_argument("boundary band must be positive");
  const DominantSolution q(c.family, beta);
  const RegionOracle region(c.target);

  VerificationReport report{.theorem_case = c,
                            .beta = beta,
                            .n_samples = n,
                            .band = band,
                            .passed = true,
                            .worst_margin = std::numeric_limits<double>::infinity(),
                            .worst_sample = {},
                            .worst_theta = 0.0,
                            .counterexample = std::nullopt,
                            .counterexample_theta = std::nullopt,
                            .boundary_touches = 0,
                            .center_anchored = q(Complex{}) == Complex{1.0, 0.0} &&
                                               c.target(Complex{}) == Complex{1.0, 0.0}};
  if (!report.center_anchored) {
    report.counterexample = q(Complex{});
    report.counterexample_theta = std::numeric_limits<double>::quiet_NaN();
  }

  double most_negative = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    const Complex w = q(circle_point(m, n));
    const MembershipVerdict v = region.classify(w, band);
    const double theta = grid_angle(m, n);
    if (v.margin < report.worst_margin) {
      report.worst_margin = v.margin;
      report.worst_sample = w;
      report.worst_theta = theta;
    }
    if (v.status == Membership::Boundary) ++report.boundary_touches;
    if (v.status == Membership::Outside && v.margin < most_negative) {
      most_negative = v.margin;
      report.counterexample = w;
      report.counterexample_theta = theta;
    }
  }
  report.passed = !report.counterexample.has_value();
  return report;
}

VerificationReport sharpness_falsify(const TheoremCase& c, double eps, std::size_t n,
                                     double band) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0, 1)");
  const double sharp = closed_form_beta(c).beta_sharp;
  return verify_subordination(c, (1.0 - eps) * sharp, n, band);
}

Complex starlike_ratio(Complex z) {
  if (z == Complex{}) return {1.0, 0.0};
  const Complex s = std::sqrt(1.0 + z);
  const Complex q = z / (1.0 + s);  // sqrt(1+z) - 1 without cancellation
  const Complex dq = 0.5 / s;
  return z * dq / q;
}

LemmaCheck lemma_minimum(double r_max, std::size_t n) {
  if (!(r_max > 0.0 && r_max < 1.0)) throw std::invalid_argument("r_max must lie in (0, 1)");
  if (n == 0) throw std::invalid_argument("grid size must be positive");
  LemmaCheck out{true, std::numeric_limits<double>::infinity(), {}, 0};
  for (std::size_t k = 0; k <= n; ++k) {
    const double r = r_max * static_cast<double>(k) / static_cast<double>(n);
    for (std::size_t m = 0; m < n; ++m) {
      const Complex z = std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(m) /
                                          static_cast<double>(n));
      const double re = starlike_ratio(z).real();
      ++out.points;
      if (re < out.min_real_part) {
        out.min_real_part = re;
        out.argmin = z;
      }
      if (k == 0) break;
    }
  }
  out.holds = out.min_real_part > 0.0;
  return out;
}

bool check_lemma_conditions(double r_max, std::size_t n) { return lemma_minimum(r_max, n).holds; }

}  // namespace subord
