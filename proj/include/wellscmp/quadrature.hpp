#pragma once

#include <functional>

namespace wellscmp {

/// Adaptive Gauss-Kronrod integral of f over [a, b].
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-12);

/// Density of one coordinate of a uniform unit D-vector,
/// c_D * (1 - x^2)^((D-3)/2) on [-1, 1].
double dvector_density(int D, double x);

/// Numerical 2k-th moment of that density, via the x = sin(theta)
/// substitution so the D = 2 endpoint singularity never appears.
double dvector_moment_numeric(int D, unsigned k);

}  // namespace wellscmp
