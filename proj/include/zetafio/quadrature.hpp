#pragma once

#include <functional>
#include <vector>

#include "zetafio/error.hpp"

namespace zetafio {

struct GaussRule {
    std::vector<double> x;  // on [-1, 1]
    std::vector<double> w;
};

const GaussRule& gauss_legendre(int n);
// Gauss rule for the weight (1 - t^2)^mu on [-1, 1]
GaussRule gauss_symmetric_jacobi(int n, double mu);

using ScalarFn = std::function<Complex(double)>;

struct QuadResult {
    Complex value;
    double error = 0.0;
    int evaluations = 0;
};

// Adaptive Gauss-Kronrod 7/15 on [a, b].
QuadResult integrate_adaptive(const ScalarFn& f, double a, double b, double abs_tol = 1e-15,
                              double rel_tol = 1e-13, int max_depth = 40);

// Fixed n-point Gauss-Legendre on [a, b].
Complex integrate_gauss(const ScalarFn& f, double a, double b, int n);

struct HalfLineResult {
    Complex value;
    double tail_bound = 0.0;  // magnitude of the analytic tail estimate that was added
    double cutoff = 0.0;      // radius where explicit quadrature stopped
    int panels = 0;
};

// Integral of f over [a, inf) on dyadic panels. With frequency == 0 the tail is
// extrapolated geometrically once the panel ratios settle; with frequency != 0,
// f is taken to be e^{i frequency r} g(r) and the tail comes from two
// integrations by parts. Throws NonIntegrableError if the panels do not decay.
HalfLineResult integrate_half_line(const ScalarFn& f, double a, double frequency = 0.0,
                                   double rel_tol = 1e-13, double abs_tol = 1e-16);

}  // namespace zetafio
