#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zetafio/distribution.hpp"
#include "zetafio/fio.hpp"

namespace zetafio {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

inline constexpr int kCriterionCount = 15;
inline constexpr std::uint64_t kDefaultSeed = 20240611;

// Runs one acceptance criterion (1..15). Exceptions from the library are caught
// and reported as a failure.
CriterionResult run_criterion(int id, std::uint64_t seed = kDefaultSeed);
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = kDefaultSeed);

// Random distributions used by the property criteria. Noncritical degrees keep
// |dimM + 1 + d| >= 1 so no pole sits near the evaluation circle.
struct RandomDistributionOptions {
    bool allow_critical = true;
    bool force_critical = false;  // at least one critical term with a nonzero residue
    bool allow_complex_degree = true;
    bool remainder_mellin = false;
    int max_terms = 3;
    int max_log_order = 2;
    int jet_length = 3;
};

GaugedDistribution random_distribution(std::uint64_t seed, const RandomDistributionOptions& opt = {});

// One-dimensional vanishing-phase symbols with known expansions at infinity:
// (1+r)^{-1/2}, 1/(1+r^2) and (1+r)^{-1/2} ln(1+r). Each comes with the smallest
// admissible N0 and the exact regularized value.
struct VanishingPhaseFamily {
    std::string name;
    FioSymbol symbol;
    int min_n0 = 0;
    double exact = 0.0;
};

std::vector<VanishingPhaseFamily> vanishing_phase_families();

// int_1^inf r^{dimM+d} (ln r)^l dr by substitution r = e^t and panelled Gauss-Legendre
double radial_quadrature_oracle(double d, int l, int dimM);

}  // namespace zetafio
