#include "wellscmp/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>

namespace wellscmp {

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  using boost::math::quadrature::gauss_kronrod;
  return gauss_kronrod<double, 15>::integrate(f, a, b, 15, tol);
}

// c_D = Gamma(D/2) / (sqrt(pi) Gamma((D-1)/2)), through lgamma for large D
static double dvector_normalizer(int D) {
  double lg = std::lgamma(D / 2.0) - std::lgamma((D - 1) / 2.0);
  return std::exp(lg) / std::sqrt(M_PI);
}

double dvector_density(int D, double x) {
  if (x <= -1.0 || x >= 1.0) return 0.0;
  return dvector_normalizer(D) * std::pow(1.0 - x * x, (D - 3) / 2.0);
}

double dvector_moment_numeric(int D, unsigned k) {
  double c = dvector_normalizer(D);
  auto f = [&](double th) {
    return std::pow(std::sin(th), 2.0 * k) * std::pow(std::cos(th), D - 2.0);
  };
  return 2.0 * c * integrate(f, 0.0, M_PI / 2.0, 1e-14);
}

}  // namespace wellscmp
