#pragma once

#include <functional>
#include <span>
#include <vector>

#include "zetafio/laurent.hpp"
#include "zetafio/sphere.hpp"

namespace zetafio {

using RadialFunction = std::function<Complex(double r, std::span<const double> nu)>;
using BallFunction = std::function<Complex(std::span<const double> xi)>;
using FrequencyFunction = std::function<double(std::span<const double> nu)>;

inline constexpr double kCriticalTol = 1e-9;
inline constexpr double kPoleGuard = 1e-9;

struct LogHomogeneousTerm {
    Complex degree{0.0};
    int log_order = 0;
    std::vector<SphereFunction> angular_jet;  // A_n = (d/dz)^n a~(0) / n!
    // The homogeneous profile also fills the unit ball (amplitude singular at 0);
    // its (0,1) radial piece is then the lower Mellin transform.
    bool extends_into_ball = false;
};

// r^{d+z} (ln r)^l B(z)(r, nu) on R>=1 x M, where B carries an oscillation in r
// (e.g. e^{i r theta(nu)}); only integrable degrees are allowed.
struct OscillatoryTerm {
    Complex degree{0.0};
    int log_order = 0;
    std::vector<RadialFunction> jet;
    FrequencyFunction frequency;
};

struct GaugedDistribution {
    SphereRule manifold;
    std::vector<LogHomogeneousTerm> terms;
    std::vector<RadialFunction> remainder_jet;
    // alpha_0(z) = r^z R_0 exactly; R_n for n >= 1 are implied
    bool remainder_mellin = false;
    // optional e^{i r omega(nu)} oscillation carried by the remainder, used for tails
    FrequencyFunction remainder_frequency;
    std::vector<BallFunction> unit_ball_jet;
    std::vector<OscillatoryTerm> oscillatory_terms;
    int ball_radial_nodes = 48;

    int dim_m() const { return manifold.dim_ambient - 1; }
};

struct ZetaDiagnostics {
    std::vector<std::size_t> critical;
    std::vector<std::size_t> near_critical;  // within tolerance but not exactly critical
    std::size_t cancelled_ball_terms = 0;
    double max_tail_bound = 0.0;
    double max_cutoff = 0.0;
    int max_panels = 0;
};

// integral over R>=1 x M of f(r, nu) r^dimM dr dnu
Complex outer_region_integral(const GaugedDistribution& dist, const RadialFunction& f,
                              const FrequencyFunction& frequency, ZetaDiagnostics* diag = nullptr);
// integral over the unit ball
Complex unit_ball_integral(const GaugedDistribution& dist, const BallFunction& f);

Complex radial_coefficient(Complex d, int l, int dimM, Complex z);
Complex residue_term(const LogHomogeneousTerm& t, int n, const SphereRule& rule);
bool is_critical(const LogHomogeneousTerm& t, int dimM);
std::vector<std::size_t> critical_indices(const GaugedDistribution& dist);

LaurentSeries zeta_laurent(const GaugedDistribution& dist, int K, ZetaDiagnostics* diag = nullptr);
Complex zeta_eval(const GaugedDistribution& dist, Complex z, ZetaDiagnostics* diag = nullptr);
Complex direct_integral_oracle(const GaugedDistribution& dist, Complex z);

GaugedDistribution finite_part(const GaugedDistribution& dist);
GaugedDistribution m_gauge(const GaugedDistribution& dist);
Complex zeta_determinant(const GaugedDistribution& dist);
Complex zeta_determinant(const LaurentSeries& series);

}  // namespace zetafio
