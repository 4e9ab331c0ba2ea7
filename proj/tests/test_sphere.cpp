#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "zetafio/sphere.hpp"

using namespace zetafio;
constexpr double pi = std::numbers::pi;

TEST_CASE("rule invariants") {
    for (int N = 1; N <= 5; ++N) {
        for (int L : {1, 2, 3}) {
            auto r = build_rule(N, L);
            double s = 0.0;
            for (double w : r.weights) {
                CHECK(w > 0.0);
                s += w;
            }
            CHECK(std::abs(s - sphere_volume(N)) < 1e-12 * sphere_volume(N));
            for (const auto& v : r.nodes) {
                double n2 = 0.0;
                for (double c : v) n2 += c * c;
                CHECK(std::abs(std::sqrt(n2) - 1.0) < 1e-14);
            }
        }
    }
}

TEST_CASE("build_rule examples") {
    auto r1 = build_rule(1, 4);
    REQUIRE(r1.nodes.size() == 2);
    CHECK(r1.nodes[0][0] == 1.0);
    CHECK(r1.nodes[1][0] == -1.0);
    CHECK(r1.weights[0] == 1.0);
    CHECK(r1.weights[1] == 1.0);

    auto r2 = build_rule(2, 1);
    CHECK(r2.nodes.size() == 16);
    CHECK(std::abs(sphere_integral([](auto) { return Complex(1.0); }, r2) - 2 * pi) < 1e-13);

    auto r3 = build_rule(3, 2);
    auto m = sphere_integral([](auto x) { return Complex(x[2] * x[2]); }, r3);
    CHECK(std::abs(m - 4 * pi / 3) < 1e-12);
}

TEST_CASE("sphere_integral examples") {
    auto r0 = build_rule(1, 1);
    CHECK(sphere_integral([](auto x) { return Complex(1.0 / std::abs(x[0])); }, r0) == Complex(2.0));
    auto r2 = build_rule(2, 3);
    CHECK(std::abs(sphere_integral([](auto x) { return Complex(x[0]); }, r2)) < 1e-14);
    CHECK_THROWS_AS(sphere_integral([](auto) { return Complex(NAN); }, r2), DomainError);
}

TEST_CASE("exact moments on S^2 and S^3") {
    // int_{S^{N-1}} x_1^2 x_2^2 = vol / (N (N+2))
    for (int N : {3, 4}) {
        auto r = build_rule(N, 2);
        auto v = sphere_integral([](auto x) { return Complex(x[0] * x[0] * x[1] * x[1]); }, r);
        CHECK(std::abs(v - sphere_volume(N) / (N * (N + 2.0))) < 1e-12);
    }
}

TEST_CASE("quadrature convergence is monotone on smooth integrands") {
    std::vector<SphereFunction> fs = {
        [](auto x) { return Complex(std::exp(3.0 * x[0] + 0.3 * x[1])); },
        [](auto x) { return Complex(1.0 / (1.3 + x[0] - 0.2 * x[x.size() - 1])); },
        [](auto x) { return std::exp(Complex(0.0, 25.0 * x[1])); },
    };
    for (int N : {2, 3}) {
        for (const auto& f : fs) {
            double prev = 1e300;
            for (int L : {2, 4}) {
                double d = std::abs(sphere_integral(f, build_rule(N, L)) - sphere_integral(f, build_rule(N, L + 2)));
                // differences at the rounding floor carry no ordering information
                CHECK((d <= prev || d < 1e-13));
                prev = d;
            }
        }
    }
}

TEST_CASE("gl_pullback_check examples") {
    auto r2 = build_rule(2, 6);
    auto one = [](std::span<const double>) { return Complex(1.0); };
    auto a = gl_pullback_check(one, 0.0, 2.0 * Eigen::MatrixXd::Identity(2, 2), 0.0, 0, r2);
    CHECK(std::abs(a.lhs - 2 * pi) < 1e-12);
    CHECK(std::abs(a.rhs - 2 * pi) < 1e-12);
    auto b = gl_pullback_check(one, 0.0, Eigen::MatrixXd::Identity(2, 2), 0.0, 0, r2);
    CHECK(std::abs(b.lhs - b.rhs) < 1e-13);
    Eigen::MatrixXd T(2, 2);
    T << 2, 0, 0, 1;
    auto c = gl_pullback_check([](auto x) { return Complex(x[0] * x[0]); }, 2.0, T, 0.0, 0, r2);
    CHECK(std::abs(c.lhs - c.rhs) < 1e-8);
    CHECK(std::abs(c.lhs - 4 * pi) < 1e-10);
    CHECK_THROWS_AS(gl_pullback_check(one, 0.0, Eigen::MatrixXd::Zero(2, 2), 0.0, 0, r2), DomainError);
}

TEST_CASE("gl_pullback_check random") {
    std::mt19937_64 rng(2024);
    std::normal_distribution<double> g;
    std::uniform_int_distribution<int> kk(0, 2);
    auto r2 = build_rule(2, 6);
    auto r3 = build_rule(3, 4);
    int done = 0;
    while (done < 50) {
        int N = done % 2 ? 3 : 2;
        Eigen::MatrixXd T = Eigen::MatrixXd::Identity(N, N);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) T(i, j) += 0.4 * g(rng);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(T);
        auto sv = svd.singularValues();
        if (sv(0) / sv(N - 1) >= 10.0) continue;
        Eigen::VectorXd w(N);
        for (int i = 0; i < N; ++i) w(i) = 0.5 * g(rng);
        double d = -1.0 + g(rng);
        Complex z(0.3 * g(rng), 0.3 * g(rng));
        int k = kk(rng);
        auto a = [w, d, N](std::span<const double> x) {
            Eigen::Map<const Eigen::VectorXd> v(x.data(), N);
            double n = v.norm();
            return Complex(std::exp(w.dot(v) / n) * std::pow(n, d));
        };
        auto res = gl_pullback_check(a, d, T, z, k, N == 2 ? r2 : r3);
        CHECK(std::abs(res.lhs - res.rhs) <= 1e-6 * std::abs(res.lhs));
        ++done;
    }
}
