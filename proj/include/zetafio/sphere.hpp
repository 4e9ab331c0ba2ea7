#pragma once

#include <Eigen/Dense>
#include <functional>
#include <span>
#include <vector>

#include "zetafio/error.hpp"

namespace zetafio {

using Vec = std::vector<double>;
using SphereFunction = std::function<Complex(std::span<const double>)>;

struct SphereRule {
    int dim_ambient = 1;
    int level = 1;
    std::vector<Vec> nodes;
    std::vector<double> weights;
};

SphereRule build_rule(int N, int level);
double sphere_volume(int N);  // vol(S^{N-1})

Complex sphere_integral(const SphereFunction& f, const SphereRule& rule);

struct PullbackResult {
    Complex lhs;
    Complex rhs;
};

// a is homogeneous of degree d on R^N \ {0}
PullbackResult gl_pullback_check(const std::function<Complex(std::span<const double>)>& a, Complex d,
                                 const Eigen::MatrixXd& T, Complex z, int k, const SphereRule& rule);

}  // namespace zetafio
