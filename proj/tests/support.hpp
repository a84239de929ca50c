#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "subord/targets.hpp"

namespace subord::testing {

/// Uniform point in the disk |z| <= radius.
inline Complex random_in_disk(std::mt19937_64& rng, double radius = 1.0) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = radius * std::sqrt(u(rng));
  const double t = 2.0 * std::numbers::pi * u(rng);
  return std::polar(r, t);
}

/// Polar grid of the closed disk: `radii` rings (r = k/radii, k = 1..radii)
/// times `angles` points per ring.
inline std::vector<Complex> polar_grid(int radii, int angles) {
  std::vector<Complex> out;
  for (int k = 1; k <= radii; ++k)
    for (int m = 0; m < angles; ++m)
      out.push_back(std::polar(static_cast<double>(k) / radii,
                               2.0 * std::numbers::pi * m / angles - std::numbers::pi));
  return out;
}

inline std::vector<TargetFunction> all_targets() {
  return {TargetFunction(TargetKind::Sqrt),      TargetFunction::janowski(0.5, -0.5),
          TargetFunction(TargetKind::Exp),       TargetFunction(TargetKind::Rational0),
          TargetFunction(TargetKind::Sine),      TargetFunction(TargetKind::Cardioid),
          TargetFunction(TargetKind::Lune)};
}

inline double rel_diff(Complex a, Complex b) {
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

}  // namespace subord::testing
