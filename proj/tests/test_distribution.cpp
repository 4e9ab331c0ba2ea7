#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "zetafio/distribution.hpp"
#include "zetafio/quadrature.hpp"

using namespace zetafio;
constexpr double pi = std::numbers::pi;

namespace {

SphereFunction constant(Complex c) {
    return [c](std::span<const double>) { return c; };
}

// int_1^inf rho^{dimM+d} (ln rho)^l  via rho = e^t, plain Gauss-Legendre on [0, T]
double radial_oracle(double d, int l, int dimM) {
    double a = dimM + d + 1.0;
    double T = 60.0 / -a;
    double s = 0.0;
    int pieces = 400;
    for (int p = 0; p < pieces; ++p) {
        double lo = T * p / pieces, hi = T * (p + 1) / pieces;
        s += integrate_gauss([&](double t) { return Complex(std::exp(a * t) * std::pow(t, l)); }, lo, hi, 20).real();
    }
    return s;
}

GaugedDistribution single_term(double d, int l, int N, Complex integral) {
    GaugedDistribution g;
    g.manifold = build_rule(N, 2);
    double vol = sphere_volume(N);
    g.terms.push_back({d, l, {constant(integral / vol)}, false});
    return g;
}

}  // namespace

TEST_CASE("radial_coefficient examples") {
    CHECK(std::abs(radial_coefficient(-2.0, 0, 0, 0.0) - 1.0) < 1e-15);
    CHECK(std::abs(radial_coefficient(-3.0, 1, 0, 0.0) - 0.25) < 1e-15);
    CHECK(std::abs(radial_coefficient(-4.0, 0, 2, 0.0) - 1.0) < 1e-15);
    CHECK(std::abs(radial_oracle(-3.0, 1, 0) - 0.25) < 1e-12);
    CHECK(std::abs(radial_oracle(-4.0, 0, 2) - 1.0) < 1e-12);
    try {
        radial_coefficient(-1.0, 2, 0, 0.0);
        FAIL("expected pole");
    } catch (const PoleError& e) {
        CHECK(e.order() == 3);
    }
}

TEST_CASE("residue_term examples") {
    LogHomogeneousTerm t{-2.0, 0, {constant(1.0)}, false};
    auto r2 = build_rule(2, 2);
    CHECK(residue_term(t, 1, r2) == Complex(0.0));
    CHECK(std::abs(residue_term(t, 0, r2) - 2 * pi) < 1e-13);
    // circle H^{-1}: A_0 = |xi|^{-1}/(2 pi), integrated over X = [0, 2 pi]
    LogHomogeneousTerm c{-1.0, 0, {[](auto x) { return Complex(2 * pi / (2 * pi * std::abs(x[0]))); }}, false};
    CHECK(residue_term(c, 0, build_rule(1, 1)) == Complex(2.0));
    LogHomogeneousTerm e{-1.0, 0, {}, false};
    CHECK_THROWS_AS(residue_term(e, 0, r2), DomainError);
}

TEST_CASE("zeta_laurent examples") {
    auto g = single_term(-2.0, 0, 2, 3.5);
    auto s = zeta_laurent(g, 4);
    CHECK(s.min_order() == -1);
    CHECK(std::abs(s.coeff(-1) + 3.5) < 1e-12);
    for (int k = 0; k <= 4; ++k) CHECK(std::abs(s.coeff(k)) < 1e-14);

    GaugedDistribution r;
    r.manifold = build_rule(2, 2);
    r.remainder_jet = {[](double rr, auto) { return Complex(std::exp(-rr) / (2 * pi * rr)); }};
    auto sr = zeta_laurent(r, 3);
    CHECK(sr.min_order() == 0);
    CHECK(std::abs(sr.coeff(0) - std::exp(-1.0)) < 1e-13);
    CHECK(std::abs(sr.coeff(1)) < 1e-15);

    CHECK_THROWS_AS(zeta_laurent(g, -1), DomainError);
}

TEST_CASE("non-integrable remainder is reported") {
    GaugedDistribution r;
    r.manifold = build_rule(1, 1);
    r.remainder_jet = {[](double rr, auto) { return Complex(1.0 / rr); }};
    CHECK_THROWS_AS(zeta_laurent(r, 0), NonIntegrableError);
}

TEST_CASE("zeta_eval examples") {
    auto g = single_term(-2.0, 0, 1, 1.0);
    CHECK(std::abs(zeta_eval(g, 0.0) - 1.0) < 1e-15);
    CHECK(std::abs(zeta_eval(g, -0.5) - 2.0 / 3.0) < 1e-15);
    CHECK_THROWS_AS(zeta_eval(g, 1.0), NearPoleError);
}

TEST_CASE("direct_integral_oracle examples") {
    auto g = single_term(-2.0, 0, 1, 1.0);
    CHECK(std::abs(direct_integral_oracle(g, -2.0) - 1.0 / 3.0) < 1e-12);
    CHECK(std::abs(zeta_eval(g, -2.0) - 1.0 / 3.0) < 1e-15);

    GaugedDistribution r;
    r.manifold = build_rule(1, 1);
    r.remainder_jet = {[](double rr, auto) { return Complex(0.5 * std::exp(-rr)); }};
    CHECK(std::abs(direct_integral_oracle(r, -3.0) - std::exp(-1.0)) < 1e-13);

    auto h = single_term(-3.0, 1, 1, 2.0);
    CHECK(std::abs(direct_integral_oracle(h, -1.0) - 2.0 / 9.0) < 1e-11);
    CHECK(std::abs(zeta_eval(h, -1.0) - 2.0 / 9.0) < 1e-14);

    CHECK_THROWS_AS(direct_integral_oracle(g, 1.5), DomainError);
}

TEST_CASE("finite_part and m_gauge") {
    auto g = single_term(-3.0, 0, 2, 1.0);
    auto fp = finite_part(g);
    CHECK(fp.terms.size() == 1);

    GaugedDistribution c = single_term(-2.0, 0, 2, 1.0);
    c.terms.push_back({-3.0, 0, {constant(0.7)}, false});
    auto fc = finite_part(c);
    CHECK(fc.terms.size() == 1);
    CHECK(zeta_laurent(fc, 2).min_order() >= 0);

    // A_1 != 0; principal part survives gauge change
    GaugedDistribution j;
    j.manifold = build_rule(2, 2);
    j.terms.push_back({-2.0, 1, {constant(0.3), [](auto x) { return Complex(1.0 + x[0] * x[0]); }}, false});
    auto sj = zeta_laurent(j, 3), sm = zeta_laurent(m_gauge(j), 3);
    CHECK(std::abs(sj.coeff(-2) - sm.coeff(-2)) < 1e-12);
    CHECK(m_gauge(j).terms[0].angular_jet.size() == 1);

    // critical term with zero residue but nonzero A_1: the pole disappears in M-gauge
    GaugedDistribution z;
    z.manifold = build_rule(2, 3);
    z.terms.push_back({-2.0, 0, {[](auto x) { return Complex(x[0]); }, constant(1.0)}, false});
    auto sz = zeta_laurent(z, 2);
    CHECK(std::abs(sz.coeff(0) + 2 * pi) < 1e-12);  // A_1 feeds the constant term
    auto szm = zeta_laurent(m_gauge(z), 2);
    CHECK(std::abs(szm.coeff(-1)) < 1e-12);

    // idempotence
    auto once = zeta_laurent(m_gauge(j), 4), twice = zeta_laurent(m_gauge(m_gauge(j)), 4);
    for (int k = -2; k <= 4; ++k) CHECK(once.coeff(k) == twice.coeff(k));
}

TEST_CASE("zeta_determinant") {
    GaugedDistribution r;
    r.manifold = build_rule(1, 1);
    r.remainder_jet = {[](double rr, auto) { return Complex(std::exp(-rr)); }};
    CHECK(std::abs(zeta_determinant(r) - 1.0) < 1e-15);

    r.remainder_jet.push_back([](double rr, auto) { return Complex(0.25 * std::exp(-rr) * std::exp(1.0)); });
    CHECK(std::abs(zeta_determinant(r) - std::exp(0.5)) < 1e-12);

    CHECK_THROWS_AS(zeta_determinant(single_term(-1.0, 0, 1, 1.0)), PoleError);
}

TEST_CASE("radial coefficient agrees with quadrature on random samples") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> ul(0, 3), um(0, 3);
    std::uniform_real_distribution<double> ud(0.3, 3.0);
    for (int i = 0; i < 40; ++i) {
        int l = ul(rng), dimM = um(rng);
        double d = -dimM - 1.0 - ud(rng);
        double exact = radial_oracle(d, l, dimM);
        CHECK(std::abs(radial_coefficient(d, l, dimM, 0.0) - exact) < 1e-8 * std::abs(exact));
    }
}

TEST_CASE("odd angular parts have vanishing residues") {
    auto r3 = build_rule(3, 3);
    LogHomogeneousTerm t{-3.0, 0, {[](auto x) { return Complex(x[0] * x[1] * x[1] + std::sin(x[2])); }}, false};
    CHECK(std::abs(residue_term(t, 0, r3)) < 1e-12);
}
