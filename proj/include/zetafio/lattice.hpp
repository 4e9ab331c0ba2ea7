#pragma once

#include <Eigen/Dense>
#include <vector>

namespace zetafio {

struct LatticeSpec {
    Eigen::MatrixXd basis;  // columns generate the lattice
    double truncation_radius = 0.0;
};

struct LatticeEnumeration {
    std::vector<Eigen::VectorXd> points;  // sorted by norm, then lexicographically
    double volume_estimate = 0.0;         // vol(B_R) / |det basis|
};

// All lattice points with norm <= radius.
LatticeEnumeration enumerate_lattice(const Eigen::MatrixXd& basis, double radius);

double ball_volume(int N, double radius);

}  // namespace zetafio
