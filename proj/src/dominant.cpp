#include "subord/dominant.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace subord {

SolutionFamily family_from_exponent(int j) {
  if (j < 0 || j > 2) throw std::invalid_argument("solution family exponent must be 0, 1 or 2");
  return static_cast<SolutionFamily>(j);
}

std::string_view to_string(SolutionFamily family) {
  switch (family) {
    case SolutionFamily::Linear: return "j=0";
    case SolutionFamily::Exponential: return "j=1";
    case SolutionFamily::Reciprocal: return "j=2";
  }
  return "?";
}

Complex kernel(Complex z) {
  const Complex s = std::sqrt(1.0 + z);
  return s - std::log(1.0 + s) + (std::numbers::ln2 - 1.0);
}

Complex kernel_derivative(Complex z) { return 0.5 / (1.0 + std::sqrt(1.0 + z)); }

double kernel(double x) {
  const double s = std::sqrt(1.0 + x);
  return s - std::log1p(s) + (std::numbers::ln2 - 1.0);
}

double pole_guard() { return 2.0 * kernel(1.0); }

DominantSolution::DominantSolution(SolutionFamily family, double beta)
    : family_(family), beta_(beta) {
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
  if (family == SolutionFamily::Reciprocal && !(beta > pole_guard()))
    throw std::invalid_argument("reciprocal family needs beta > 2 G(1) (pole on [0, 1])");
}

Complex DominantSolution::operator()(Complex z) const {
  const Complex u = (2.0 / beta_) * kernel(z);
  switch (family_) {
    case SolutionFamily::Linear: return 1.0 + u;
    case SolutionFamily::Exponential: return std::exp(u);
    case SolutionFamily::Reciprocal: return 1.0 / (1.0 - u);
  }
  return {};
}

Complex DominantSolution::derivative(Complex z) const {
  const Complex du = (2.0 / beta_) * kernel_derivative(z);
  switch (family_) {
    case SolutionFamily::Linear: return du;
    case SolutionFamily::Exponential: return (*this)(z) * du;
    case SolutionFamily::Reciprocal: {
      const Complex q = (*this)(z);
      return q * q * du;
    }
  }
  return {};
}

double dominant_on_axis(SolutionFamily family, double beta, double x) {
  const double u = (2.0 / beta) * kernel(x);
  switch (family) {
    case SolutionFamily::Linear: return 1.0 + u;
    case SolutionFamily::Exponential: return std::exp(u);
    case SolutionFamily::Reciprocal: return 1.0 / (1.0 - u);
  }
  return 0.0;
}

Complex eval_q(const DominantSolution& q, Complex z) { return q(z); }

double ode_residual(const DominantSolution& q, Complex z) {
  if (z == Complex{}) return 0.0;
  Complex ratio = q.derivative(z);
  const Complex value = q(z);
  for (int k = 0; k < exponent(q.family()); ++k) ratio /= value;
  return std::abs(1.0 + q.beta() * z * ratio - std::sqrt(1.0 + z));
}

}  // namespace subord
