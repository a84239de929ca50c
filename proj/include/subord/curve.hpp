#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

namespace subord {

using Complex = std::complex<double>;

/// Angle of sample m on the uniform grid theta_m = -pi + 2 pi m / n.
inline double grid_angle(std::size_t m, std::size_t n) {
  // (2m - n) pi / n is exactly antisymmetric under m -> n - m
  return std::numbers::pi * (2.0 * static_cast<double>(m) - static_cast<double>(n)) /
         static_cast<double>(n);
}

/// e^{i theta_m}, exact at quarter turns and exactly conjugate-symmetric.
inline Complex circle_point(std::size_t m, std::size_t n) {
  if ((4 * m) % n == 0) {
    switch ((4 * m) / n) {
      case 0: return {-1.0, 0.0};
      case 1: return {0.0, -1.0};
      case 2: return {1.0, 0.0};
      case 3: return {0.0, 1.0};
      default: break;
    }
  }
  const double theta = grid_angle(m, n);
  return {std::cos(theta), std::sin(theta)};
}

/// Samples f(e^{i theta_m}) for m = 0..n-1.
template <class Map>
std::vector<Complex> sample_on_circle(const Map& f, std::size_t n) {
  std::vector<Complex> out;
  out.reserve(n);
  for (std::size_t m = 0; m < n; ++m) out.push_back(f(circle_point(m, n)));
  return out;
}

/// Result of locating a point relative to a closed curve.
struct CurveProbe {
  int winding = 0;
  double distance = std::numeric_limits<double>::infinity();
};

namespace detail {

inline double segment_distance(Complex a, Complex b, Complex w) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(w - a);
  double t = ((w.real() - a.real()) * ab.real() + (w.imag() - a.imag()) * ab.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(w - (a + t * ab));
}

// Signed angle swept by the chord a -> b as seen from w.
inline double swept_angle(Complex a, Complex b, Complex w) {
  const Complex u = a - w;
  const Complex v = b - w;
  const double cross = u.real() * v.imag() - u.imag() * v.real();
  const double dot = u.real() * v.real() + u.imag() * v.imag();
  return std::atan2(cross, dot);
}

// w sees the chord under more than pi/2 iff it lies in the chord's diameter disk.
inline bool wide_angle(Complex a, Complex b, Complex w) {
  const Complex u = a - w;
  const Complex v = b - w;
  return u.real() * v.real() + u.imag() * v.imag() < 0.0;
}

template <class Map>
void accumulate_arc(const Map& f, double t0, double t1, Complex a, Complex b, Complex w,
                    int depth, double& angle, double& distance) {
  if (depth > 0 && wide_angle(a, b, w)) {
    const double tm = 0.5 * (t0 + t1);
    const Complex mid = f(Complex{std::cos(tm), std::sin(tm)});
    accumulate_arc(f, t0, tm, a, mid, w, depth - 1, angle, distance);
    accumulate_arc(f, tm, t1, mid, b, w, depth - 1, angle, distance);
    return;
  }
  angle += swept_angle(a, b, w);
  distance = std::min(distance, segment_distance(a, b, w));
}

}  // namespace detail

inline constexpr int kMaxRefineDepth = 48;

/// Winding number of the closed curve theta -> f(e^{i theta}) around w, and the
/// distance from w to it. `samples` must be sample_on_circle(f, n). Chords that
/// subtend more than pi/2 at w are bisected in theta until they no longer do.
template <class Map>
CurveProbe probe_closed_curve(const Map& f, std::span<const Complex> samples, Complex w,
                              int max_depth = kMaxRefineDepth) {
  const std::size_t n = samples.size();
  double angle = 0.0;
  double distance = std::numeric_limits<double>::infinity();
  for (std::size_t m = 0; m < n; ++m) {
    const std::size_t next = (m + 1 == n) ? 0 : m + 1;
    const double t0 = grid_angle(m, n);
    const double t1 = (m + 1 == n) ? std::numbers::pi : grid_angle(m + 1, n);
    detail::accumulate_arc(f, t0, t1, samples[m], samples[next], w, max_depth, angle,
                           distance);
  }
  return {static_cast<int>(std::lround(angle / (2.0 * std::numbers::pi))), distance};
}

/// Winding number of a closed polygon around w (no refinement).
inline int winding_number(std::span<const Complex> polygon, Complex w) {
  double angle = 0.0;
  const std::size_t n = polygon.size();
  for (std::size_t m = 0; m < n; ++m)
    angle += detail::swept_angle(polygon[m], polygon[(m + 1) % n], w);
  return static_cast<int>(std::lround(angle / (2.0 * std::numbers::pi)));
}

}  // namespace subord
