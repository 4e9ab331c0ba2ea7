#pragma once

#include "zetafio/error.hpp"

namespace zetafio {

Complex gamma(Complex z);
Complex log_gamma(Complex z);  // principal branch of log of gamma for Re z >= 0.5 via Lanczos, reflected otherwise
Complex upper_incomplete_gamma(Complex s, double x);
Complex hurwitz_zeta(Complex s, double a);
Complex riemann_zeta(Complex s);
Complex riemann_zeta_reflected(Complex s);  // functional-equation route
Complex fourier_abs_power(Complex alpha, double x);
Complex radial_inverse_power_integral(double theta, int n);

// sin(pi z) with exact zeros at the integers
Complex sin_pi(Complex z);

// nonpositive integer n with |z - n| < tol, or +1 when none
int nearest_nonpositive_integer(Complex z, double tol = 1e-14);

}  // namespace zetafio
