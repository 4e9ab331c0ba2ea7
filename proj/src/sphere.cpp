#include "zetafio/sphere.hpp"

#include <cmath>
#include <numbers>

#include "zetafio/parallel.hpp"
#include "zetafio/quadrature.hpp"
#include "zetafio/specfun.hpp"

namespace zetafio {

namespace {

constexpr double kPi = std::numbers::pi;

void append_circle(int count, SphereRule& r) {
    for (int i = 0; i < count; ++i) {
        double phi = 2.0 * kPi * i / count;
        r.nodes.push_back({std::cos(phi), std::sin(phi)});
        r.weights.push_back(2.0 * kPi / count);
    }
}

SphereRule build_recursive(int N, int level) {
    SphereRule r;
    r.dim_ambient = N;
    r.level = level;
    if (N == 1) {
        r.nodes = {{1.0}, {-1.0}};
        r.weights = {1.0, 1.0};
        return r;
    }
    if (N == 2) {
        append_circle(8 << level, r);
        return r;
    }
    SphereRule sub = build_recursive(N - 1, level);
    int polar = 4 << level;
    // Gauss rule in t = cos(phi) for the weight (1 - t^2)^{(N-3)/2}
    GaussRule g = N == 3 ? gauss_legendre(polar) : gauss_symmetric_jacobi(polar, 0.5 * (N - 3));
    for (int i = 0; i < polar; ++i) {
        double t = g.x[i];
        double s = std::sqrt(std::max(0.0, 1.0 - t * t));
        double w = g.w[i];
        for (std::size_t j = 0; j < sub.nodes.size(); ++j) {
            Vec v(N);
            for (int c = 0; c < N - 1; ++c) v[c] = s * sub.nodes[j][c];
            v[N - 1] = t;
            r.nodes.push_back(std::move(v));
            r.weights.push_back(w * sub.weights[j]);
        }
    }
    return r;
}

}  // namespace

SphereRule build_rule(int N, int level) {
    if (N < 1) throw DomainError("sphere dimension must be >= 1");
    if (level < 0) throw DomainError("sphere level must be >= 0");
    return build_recursive(N, level);
}

double sphere_volume(int N) {
    return 2.0 * std::pow(kPi, 0.5 * N) / std::tgamma(0.5 * N);
}

Complex sphere_integral(const SphereFunction& f, const SphereRule& rule) {
    auto vals = parallel_map(rule.nodes.size(), [&](std::size_t i) {
        return rule.weights[i] * check_finite(f(rule.nodes[i]), "sphere integrand");
    });
    return pairwise_sum(vals);
}

PullbackResult gl_pullback_check(const std::function<Complex(std::span<const double>)>& a, Complex d,
                                 const Eigen::MatrixXd& T, Complex z, int k, const SphereRule& rule) {
    const int n = rule.dim_ambient;
    if (T.rows() != n || T.cols() != n) throw DomainError("pullback matrix has wrong shape");
    Eigen::FullPivLU<Eigen::MatrixXd> lu(T);
    if (!lu.isInvertible()) throw DomainError("pullback matrix is singular");
    Eigen::MatrixXd Tinv = lu.inverse();
    double det = std::abs(T.determinant());

    auto lhs = sphere_integral(
        [&](std::span<const double> xi) {
            Eigen::VectorXd v = T * Eigen::Map<const Eigen::VectorXd>(xi.data(), n);
            double nv = v.norm();
            double lg = std::log(nv);
            return a(std::span<const double>(v.data(), n)) * std::pow(nv, z) * std::pow(lg, k);
        },
        rule);
    auto rhs = sphere_integral(
        [&](std::span<const double> xi) {
            Eigen::VectorXd v = Tinv * Eigen::Map<const Eigen::VectorXd>(xi.data(), n);
            double nv = v.norm();
            double lg = std::log(nv);
            return a(xi) * std::pow(nv, -static_cast<double>(n) - d - z) * std::pow(lg, k);
        },
        rule);
    double sign = (k % 2) ? -1.0 : 1.0;
    return {lhs, sign * rhs / det};
}

}  // namespace zetafio
