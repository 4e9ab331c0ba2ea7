#pragma once

#include <functional>
#include <map>
#include <string>

#include "zetafio/fio.hpp"
#include "zetafio/lattice.hpp"

namespace zetafio {

// ---- independent oracles ----
// Borwein-accelerated eta series for s >= 0, functional equation below.
double zeta_oracle(double s);
// (-1)^k 2 zeta^{(k)}(-alpha) by central differences of zeta_oracle
double circle_derivative_oracle(double alpha, int k, double step = 1e-3);
// sum_{k in dual lattice} exp(-t |k|^2), dual lattice 2 pi B^{-T} Z^N
double theta_oracle(double t, const Eigen::MatrixXd& basis);
Complex wave_oracle_circle(double t);  // i cot(t/2)

// ---- flat torus heat trace ----
struct HeatResult {
    double value = 0.0;
    double tail_bound = 0.0;
    std::size_t lattice_points = 0;
};

HeatResult heat_trace_closed_form(double t, const Eigen::MatrixXd& basis);
// one symbol per lattice vector gamma, phase <x - y - gamma, xi>
std::vector<FioSymbol> heat_symbols(double t, const Eigen::MatrixXd& basis, int sphere_level = 6);
LaurentSeries heat_trace_laurent(double t, const Eigen::MatrixXd& basis, int K = 2, int sphere_level = 6);
Complex heat_trace_via_zeta(double t, const Eigen::MatrixXd& basis, int sphere_level = 6);
Complex heat_trace_kv(double t, const Eigen::MatrixXd& basis, int sphere_level = 6);

// ---- circle fractional Laplacian H^{s+alpha} ----
// gamma = 0 symbol |xi|^{alpha+z}/(2 pi) on X = [0, 2 pi]; the profile fills the unit ball
FioSymbol circle_fractional_symbol(Complex alpha);
// same with the unit ball cut out; used for the residue
FioSymbol circle_cutoff_symbol(Complex alpha);

// sum_{n != 0} of the Fourier transform of |xi|^{beta} at n
Complex circle_lattice_sum(Complex beta);

struct CircleAssembly {
    Complex ball;     // unit ball piece of the gamma = 0 term
    Complex weight;   // its radial weight times the residue
    Complex lattice;  // gamma != 0 terms
    Complex value;
};

CircleAssembly circle_fractional_assembly(Complex alpha, Complex z);
Complex circle_fractional_zeta(Complex alpha, Complex z);
LaurentSeries circle_fractional_laurent(Complex alpha, int K = 8);
Complex circle_fractional_kv(Complex alpha);
Complex circle_fractional_zeta_derivative(Complex alpha, int k, double step = 1e-3);
// gamma = 0 term replaced by its h-mollified radial piece, plus the lattice terms
Complex circle_mollified_zeta(Complex alpha, Complex z, double h);

// ---- shifted operator G = h + H ----
Complex shifted_fractional_zeta(Complex alpha, double h, Complex z);  // 2 zeta_H(-z-alpha; h) - h^{z+alpha}
// Same without the zero mode h^{z+alpha}, which blows up as h -> 0 when Re(alpha) < 0.
// This is the family that mollifies circle_fractional_zeta.
Complex shifted_fractional_zeta_nonzero(Complex alpha, double h, Complex z);

struct ShiftedPipeline {
    LaurentSeries series;
    int terms_used = 0;
    double truncation_bound = 0.0;
};
// zero mode h^{z+alpha} plus sum_k binom(alpha+z, k) h^k zeta(H^{s+alpha-k})(z)
ShiftedPipeline shifted_fractional_laurent(Complex alpha, double h, int K = 6);
Complex shifted_fractional_pipeline(Complex alpha, double h, Complex z);

// ---- named builtins for problem files ----
using SphereBuiltin = std::function<SphereFunction(double scale)>;
using RadialBuiltin = std::function<RadialFunction(double scale, int N)>;
const std::map<std::string, SphereBuiltin>& angular_builtins();
const std::map<std::string, RadialBuiltin>& radial_builtins();
const std::vector<std::string>& model_names();

}  // namespace zetafio
