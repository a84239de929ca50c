#pragma once

#include <complex>
#include <string_view>

#include "subord/curve.hpp"

namespace subord {

/// Which differential subordination 1 + beta z p'(z) / p(z)^j < sqrt(1 + z) the
/// dominant solves. The enumerator value is the exponent j.
enum class SolutionFamily : int { Linear = 0, Exponential = 1, Reciprocal = 2 };

inline int exponent(SolutionFamily family) { return static_cast<int>(family); }

/// Throws std::invalid_argument unless j is 0, 1 or 2.
SolutionFamily family_from_exponent(int j);

std::string_view to_string(SolutionFamily family);

/// G(z) = sqrt(1+z) - log(1 + sqrt(1+z)) + log 2 - 1, principal branches.
Complex kernel(Complex z);

/// G'(z) = 1 / (2 (1 + sqrt(1+z))).
Complex kernel_derivative(Complex z);

/// G on the real segment [-1, 1].
double kernel(double x);

/// 2 G(1): the j = 2 dominant has a pole on [0, 1] when beta <= this value.
double pole_guard();

/// q_beta for one family. Construction enforces beta > 0, and beta > 2 G(1)
/// for the reciprocal family.
class DominantSolution {
 public:
  /// Throws std::invalid_argument for an inadmissible beta.
  DominantSolution(SolutionFamily family, double beta);

  SolutionFamily family() const { return family_; }
  double beta() const { return beta_; }

  Complex operator()(Complex z) const;
  Complex derivative(Complex z) const;

 private:
  SolutionFamily family_;
  double beta_;
};

/// q_beta(x) for real x in [-1, 1], without the pole guard. Valid wherever the
/// closed form is finite (for the reciprocal family, 1 - 2G(x)/beta != 0).
double dominant_on_axis(SolutionFamily family, double beta, double x);

Complex eval_q(const DominantSolution& q, Complex z);

/// |1 + beta z q'(z) / q(z)^j - sqrt(1+z)|; zero at z = 0.
double ode_residual(const DominantSolution& q, Complex z);

}  // namespace subord
