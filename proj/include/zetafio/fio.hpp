#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "zetafio/distribution.hpp"

namespace zetafio {

using Span = std::span<const double>;

// theta(x, y, xi), real and homogeneous of degree 1 in xi
using PhaseValue = std::function<double(Span x, Span y, Span xi)>;
using PhaseGradient = std::function<Vec(Span x, Span y, Span xi)>;
using PhaseHessian = std::function<Eigen::MatrixXd(Span x, Span y, Span xi)>;
using AmplitudeFunction = std::function<Complex(Span x, Span y, Span xi)>;

struct Phase {
    PhaseValue value;
    PhaseGradient gradient;  // in xi; optional
    PhaseHessian hessian;    // in xi; optional
};

Phase linear_phase(const std::function<Vec(Span x, Span y)>& direction);
// <x - y, xi>
Phase pseudodifferential_phase();

struct BasePoint {
    Vec x;
    double weight = 1.0;
};

// a_iota(z)(x, y, xi) = |xi|^{d+z} (ln|xi|)^l a~(z)(x, y, xi/|xi|); the jet holds the
// z-Taylor coefficients of a~ evaluated on the unit sphere.
struct AmplitudeTerm {
    Complex degree{0.0};
    int log_order = 0;
    std::vector<AmplitudeFunction> jet;
    // the homogeneous profile is also the amplitude inside the unit ball
    bool extends_into_ball = false;
};

struct FioSymbol {
    int base_dim = 1;
    int freq_dim = 1;
    std::vector<BasePoint> base;
    Phase phase;
    std::vector<AmplitudeTerm> terms;
    std::vector<AmplitudeFunction> remainder_jet;  // on |xi| >= 1
    std::vector<AmplitudeFunction> ball_jet;       // full amplitude on |xi| < 1, excluding extending terms
    int sphere_level = 4;
    int ball_radial_nodes = 48;
};

// Throws DomainError when the phase fails the degree-1 homogeneity probe.
void check_symbol(const FioSymbol& sym);

bool diagonal_phase_vanishes(const FioSymbol& sym, const SphereRule& rule);

GaugedDistribution trace_distribution(const FioSymbol& sym);
LaurentSeries zeta_laurent_fio(const FioSymbol& sym, int K, ZetaDiagnostics* diag = nullptr);
Complex zeta_eval_fio(const FioSymbol& sym, Complex z, ZetaDiagnostics* diag = nullptr);

Complex residue_trace(const FioSymbol& sym);
Complex kv_density(const FioSymbol& sym, Span x);
Complex kv_trace(const FioSymbol& sym);
// terms are indexed 1..n in list order; the first N0 are treated as the singular part
Complex kv_trace_vanishing_phase(const FioSymbol& sym, int N0);

Complex mollified_radial_coefficient(Complex d, int l, int dimM, Complex z, double h);
// zeta with the (0,1) radial piece of every extending term replaced by its h-mollified version
Complex zeta_eval_mollified(const FioSymbol& sym, Complex z, double h);

struct MollifiedFamily {
    std::vector<double> h;
    std::vector<Complex> values;
};

struct MollificationResult {
    Complex target;
    std::vector<std::vector<Complex>> table;  // table[c] is the c-th Richardson column
    std::vector<double> orders;               // order used to build column c+1
};

MollificationResult mollification_limit(const MollifiedFamily& family);

// l sum_{j<=l} |zeta_H(l-j-d-z; h) - zeta_H(l-j-d-z; 1+h)|
double mollification_proxy(Complex d, int l, Complex z, double h);

}  // namespace zetafio
