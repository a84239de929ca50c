#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subord/curve.hpp"

namespace subord {

/// The seven Ma-Minda target functions with positive real part.
enum class TargetKind { Sqrt, Janowski, Exp, Rational0, Sine, Cardioid, Lune };

/// k = sqrt(2) + 1, the pole of the rational target.
inline constexpr double kRationalPole = 2.4142135623730950488;

inline constexpr std::size_t kDefaultBoundarySamples = 4096;
inline constexpr double kDefaultBand = 1e-9;

std::string_view to_string(TargetKind kind);
/// Case-insensitive lookup by name ("Sqrt", "janowski", ...).
std::optional<TargetKind> parse_target_kind(std::string_view name);

/// A target function P. Janowski carries (A, B) with -1 < B < A < 1; the other
/// kinds are parameter-free.
class TargetFunction {
 public:
  /// Throws std::invalid_argument for Janowski (use janowski()).
  explicit TargetFunction(TargetKind kind);

  /// Throws std::invalid_argument unless -1 < B < A < 1.
  static TargetFunction janowski(double a, double b);

  TargetKind kind() const { return kind_; }
  double a() const { return a_; }
  double b() const { return b_; }

  Complex operator()(Complex z) const;

  std::string name() const;

 private:
  TargetFunction(TargetKind kind, double a, double b) : kind_(kind), a_(a), b_(b) {}

  TargetKind kind_;
  double a_ = 0.0;
  double b_ = 0.0;
};

/// Real boundary values P(-1) < 1 < P(1).
struct Endpoints {
  double left;
  double right;
};

Complex eval_target(const TargetFunction& target, Complex z);

Endpoints endpoints(const TargetFunction& target);

/// P(e^{i theta_m}) for theta_m = -pi + 2 pi m / n. Requires n >= 4.
std::vector<Complex> boundary_curve(const TargetFunction& target, std::size_t n);

enum class Membership { Inside, Boundary, Outside };

std::string_view to_string(Membership status);

struct MembershipVerdict {
  Membership status;
  /// Signed distance to the boundary (first order for the closed-form
  /// predicates); positive inside.
  double margin;
  double band;
};

/// Disk image of the unit disk under (1 + Az)/(1 + Bz).
struct Disk {
  Complex center;
  double radius;
};

Disk janowski_disk(double a, double b);

/// Classifies w against the open region P(D). Uses closed-form predicates for
/// Sqrt, Janowski and Exp and the winding-number oracle otherwise.
/// Throws std::invalid_argument if band <= 0.
MembershipVerdict contains(const TargetFunction& target, Complex w, double band = kDefaultBand);

/// Closed-form membership; nullopt for kinds without a closed predicate.
std::optional<MembershipVerdict> contains_closed_form(const TargetFunction& target, Complex w,
                                                      double band);

/// Sampled boundary of a target region, kept for repeated membership queries.
class RegionOracle {
 public:
  /// Throws std::invalid_argument if n < 16.
  explicit RegionOracle(TargetFunction target, std::size_t n = kDefaultBoundarySamples);

  const TargetFunction& target() const { return target_; }
  const std::vector<Complex>& boundary() const { return boundary_; }

  /// Winding number and distance to the (adaptively refined) boundary.
  CurveProbe probe(Complex w) const;

  /// Winding-number classification, independent of the closed-form predicates.
  MembershipVerdict classify_by_winding(Complex w, double band) const;

  /// Closed-form predicate where one exists, winding number otherwise.
  MembershipVerdict classify(Complex w, double band) const;

 private:
  TargetFunction target_;
  std::vector<Complex> boundary_;
};

}  // namespace subord
