#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "zetafio/fio.hpp"

namespace zetafio {

struct StationaryPointData {
    Vec point;
    double phase_value = 0.0;
    Eigen::MatrixXd frame;    // N x (N-1) orthonormal tangent basis at point
    Eigen::MatrixXd hessian;  // (N-1) x (N-1) spherical Hessian in that frame
    double det = 1.0;
    int signature = 0;
    double gradient_norm = 0.0;
};

inline constexpr double kDegeneracyFloor = 1e-8;
inline constexpr double kPhaseFloor = 1e-8;

// Gram-Schmidt on the ambient basis with the axis of largest |nu_i| dropped.
Eigen::MatrixXd tangent_frame(Span nu);

// Ambient gradient and Hessian in xi, analytic when the phase provides them.
Vec phase_gradient(const Phase& phase, Span x, Span y, Span xi);
Eigen::MatrixXd phase_hessian(const Phase& phase, Span x, Span y, Span xi);

using SphereWindow = std::function<bool(Span)>;

// Zeros of the spherical gradient of theta(x, y, .), found by projected Newton from
// a level-3 sphere grid. Points outside the window (when given) are dropped.
std::vector<StationaryPointData> find_stationary_points(const Phase& phase, Span x, Span y, int N,
                                                        const SphereWindow& window = {});

Complex h_coefficient(int j, const StationaryPointData& sp, const AmplitudeFunction& a, Span x, Span y);
Complex g_coefficient(int j, Complex d, int l, int N, double theta_hat);

struct SphericalPhaseResult {
    Complex asymptotic;
    Complex brute_force;
    std::vector<StationaryPointData> points;
};

SphericalPhaseResult spherical_phase_integral(const Phase& phase, const AmplitudeFunction& a, Span x, Span y, int N,
                                              double r, int J, int level = 6);

struct HilbertSchmidtResult {
    bool pass = false;
    double min_abs_phase = 0.0;
};

HilbertSchmidtResult hilbert_schmidt_check(const FioSymbol& sym, const std::vector<Vec>& base_grid);

struct WaveTraceResult {
    Complex value;
    double tail_bound = 0.0;
    std::size_t lattice_points = 0;
};

// basis columns generate the lattice; N is its dimension
WaveTraceResult wave_trace_flat_torus(double t, const Eigen::MatrixXd& basis, double radius);

}  // namespace zetafio
