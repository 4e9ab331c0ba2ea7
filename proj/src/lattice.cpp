#include "zetafio/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "zetafio/error.hpp"

namespace zetafio {

double ball_volume(int N, double radius) {
    return std::pow(std::numbers::pi, N / 2.0) / std::tgamma(N / 2.0 + 1.0) * std::pow(radius, N);
}

LatticeEnumeration enumerate_lattice(const Eigen::MatrixXd& B, double radius) {
    const auto N = B.rows();
    if (B.cols() != N || N < 1) throw DomainError("lattice basis must be square");
    double det = B.determinant();
    if (std::abs(det) < 1e-300) throw DomainError("lattice basis is singular");
    Eigen::MatrixXd inv = B.inverse();
    // |k_i| <= radius * |row_i(B^{-1})|
    std::vector<long> bound(N);
    for (Eigen::Index i = 0; i < N; ++i) bound[i] = static_cast<long>(std::floor(radius * inv.row(i).norm() + 1e-12));

    LatticeEnumeration out;
    Eigen::VectorXd k = Eigen::VectorXd::Zero(N);
    std::vector<long> idx(N);
    for (Eigen::Index i = 0; i < N; ++i) idx[i] = -bound[i];
    const double r2 = radius * radius * (1.0 + 1e-12);
    while (true) {
        for (Eigen::Index i = 0; i < N; ++i) k[i] = static_cast<double>(idx[i]);
        Eigen::VectorXd g = B * k;
        if (g.squaredNorm() <= r2) out.points.push_back(g);
        Eigen::Index c = 0;
        while (c < N && ++idx[c] > bound[c]) {
            idx[c] = -bound[c];
            ++c;
        }
        if (c == N) break;
    }
    std::sort(out.points.begin(), out.points.end(), [](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
        double na = a.squaredNorm(), nb = b.squaredNorm();
        if (na != nb) return na < nb;
        return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
    });
    out.volume_estimate = ball_volume(static_cast<int>(N), radius) / std::abs(det);
    return out;
}

}  // namespace zetafio
