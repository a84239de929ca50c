#pragma once

#include <cstddef>
#include <optional>

#include "subord/thresholds.hpp"

namespace subord {

/// Outcome of checking q_beta(D) against P(D) on boundary samples.
struct VerificationReport {
  TheoremCase theorem_case;
  double beta;
  std::size_t n_samples;
  double band;
  bool passed;
  /// Smallest interior clearance over all samples, and where it occurred.
  double worst_margin;
  Complex worst_sample;
  double worst_theta;
  /// The most negative Outside sample, if any.
  std::optional<Complex> counterexample;
  std::optional<double> counterexample_theta;
  std::size_t boundary_touches;
  /// q_beta(0) == 1 == P(0), checked exactly.
  bool center_anchored;
};

/// Samples q_beta(e^{i theta}) on the uniform grid and classifies each sample
/// against P(D). Boundary verdicts are allowed; any Outside sample fails.
/// Throws std::invalid_argument for an inadmissible beta, n < 256 or band <= 0.
VerificationReport verify_subordination(const TheoremCase& c, double beta,
                                        std::size_t n = kDefaultBoundarySamples,
                                        double band = kDefaultBand);

/// verify_subordination at beta = (1 - eps) * beta_sharp.
/// Throws std::invalid_argument unless 0 < eps < 1.
VerificationReport sharpness_falsify(const TheoremCase& c, double eps,
                                     std::size_t n = kDefaultBoundarySamples,
                                     double band = kDefaultBand);

/// Smallest Re(z Q'(z) / Q(z)) with Q(z) = sqrt(1+z) - 1 over the polar grid
/// r = r_max k / n (k = 0..n), theta = 2 pi m / n (m = 0..n-1).
struct LemmaCheck {
  bool holds;
  double min_real_part;
  Complex argmin;
  std::size_t points;
};

/// z Q'(z) / Q(z) for Q(z) = sqrt(1+z) - 1; 1 at z = 0.
Complex starlike_ratio(Complex z);

LemmaCheck lemma_minimum(double r_max, std::size_t n);

/// Throws std::invalid_argument unless 0 < r_max < 1 and n > 0.
bool check_lemma_conditions(double r_max, std::size_t n);

}  // namespace subord
