#include <cmath>
#include <numbers>

#include "doctest.h"
#include "zetafio/fio.hpp"
#include "zetafio/models.hpp"
#include "zetafio/specfun.hpp"

using namespace zetafio;
constexpr double pi = std::numbers::pi;

namespace {

AmplitudeFunction constant(Complex c) {
    return [c](Span, Span, Span) { return c; };
}

double norm(Span xi) {
    double s = 0.0;
    for (double c : xi) s += c * c;
    return std::sqrt(s);
}

AmplitudeFunction radial(std::function<double(double)> f) {
    return [f](Span, Span, Span xi) { return Complex(f(norm(xi))); };
}

FioSymbol vanishing_phase_symbol(int N, double weight = 1.0) {
    FioSymbol s;
    s.base_dim = 1;
    s.freq_dim = N;
    s.base = {BasePoint{Vec{0.0}, weight}};
    s.phase = pseudodifferential_phase();
    return s;
}

FioSymbol gaussian_symbol(int N) {
    FioSymbol s = vanishing_phase_symbol(N);
    auto g = radial([](double r) { return std::exp(-r * r); });
    s.remainder_jet = {g};
    s.ball_jet = {g};
    return s;
}

}  // namespace

TEST_CASE("trace_distribution of the circle H^{-1} symbol has one critical term of mass 2") {
    auto dist = trace_distribution(circle_cutoff_symbol(-1.0));
    REQUIRE(dist.terms.size() == 1);
    CHECK(is_critical(dist.terms[0], dist.dim_m()));
    CHECK(std::abs(residue_term(dist.terms[0], 0, dist.manifold) - 2.0) < 1e-14);
}

TEST_CASE("heat gamma = 0 symbol is remainder only") {
    Eigen::MatrixXd B(1, 1);
    B(0, 0) = 2 * pi;
    auto syms = heat_symbols(1.0, B);
    auto dist = trace_distribution(syms.front());
    CHECK(dist.terms.empty());
    CHECK(dist.oscillatory_terms.empty());
    CHECK(!dist.remainder_jet.empty());
}

TEST_CASE("translated heat term is an integrable oscillatory remainder") {
    // int_R e^{i gamma xi} e^{-t xi^2} d xi / (2 pi), times vol
    const double t = 1.0, gamma = 2 * pi;
    Eigen::MatrixXd B(1, 1);
    B(0, 0) = gamma;
    auto syms = heat_symbols(t, B);
    REQUIRE(syms.size() >= 3);
    auto s = zeta_laurent_fio(syms[1], 2);
    double expect = gamma / (2 * pi) * std::sqrt(pi / t) * std::exp(-gamma * gamma / (4 * t));
    CHECK(s.min_order() >= 0);
    CHECK(std::abs(s.coeff(0) - expect) < 1e-12);
}

TEST_CASE("zeta_laurent_fio: circle H^{-1} residue coefficient") {
    auto s = zeta_laurent_fio(circle_cutoff_symbol(-1.0), 3);
    CHECK(std::abs(s.coeff(-1) + 2.0) < 1e-13);
}

TEST_CASE("zeta_laurent_fio: Schwartz amplitude gives a constant series") {
    auto s = zeta_laurent_fio(gaussian_symbol(2), 3).normalized();
    CHECK(s.min_order() >= 0);
    CHECK(std::abs(s.coeff(0) - pi) < 1e-10);
    for (int k = 1; k <= 3; ++k) CHECK(std::abs(s.coeff(k)) < 1e-12);
}

TEST_CASE("residue_trace") {
    CHECK(std::abs(residue_trace(circle_cutoff_symbol(-1.0)) + 2.0) < 1e-12);
    CHECK(std::abs(residue_trace(gaussian_symbol(1))) == 0.0);

    // odd critical angular part in N = 2
    FioSymbol odd = vanishing_phase_symbol(2);
    odd.terms.push_back({-2.0, 0, {[](Span, Span, Span xi) { return Complex(xi[0] / norm(xi)); }}, false});
    CHECK(std::abs(residue_trace(odd)) < 1e-12);

    FioSymbol logs = circle_cutoff_symbol(-1.0);
    logs.terms[0].log_order = 1;
    CHECK_THROWS_AS(residue_trace(logs), DomainError);
}

TEST_CASE("residue_trace ignores the gauge beyond order zero") {
    FioSymbol a = circle_cutoff_symbol(-1.0);
    FioSymbol b = a;
    b.terms[0].jet.push_back(constant(0.37));
    b.terms[0].jet.push_back(constant(Complex(-1.2, 0.4)));
    CHECK(std::abs(residue_trace(a) - residue_trace(b)) < 1e-9);
}

TEST_CASE("kv_density examples") {
    Vec x{0.0};
    // Schwartz: the full integral
    CHECK(std::abs(kv_density(gaussian_symbol(1), x) - std::sqrt(pi)) < 1e-12);

    // single term d = -1/2, N = 1: weight -1/(N + d) times int over S^0
    FioSymbol one = vanishing_phase_symbol(1);
    one.terms.push_back({-0.5, 0, {constant(1.0)}, false});
    CHECK(std::abs(kv_density(one, x) + 4.0) < 1e-13);

    // |xi|^alpha everywhere: ball piece and weight cancel
    for (double alpha : {-0.75, -0.5, -0.25}) {
        FioSymbol s = vanishing_phase_symbol(1);
        s.terms.push_back({alpha, 0, {constant(1.0)}, true});
        CHECK(std::abs(kv_density(s, x)) < 1e-13);
    }

    CHECK_THROWS_AS(kv_density(circle_cutoff_symbol(-1.0), x), DomainError);
}

TEST_CASE("kv_trace examples") {
    // e^{-|xi|} on R with unit base weight
    FioSymbol e = vanishing_phase_symbol(1);
    e.remainder_jet = e.ball_jet = {radial([](double r) { return std::exp(-r); })};
    CHECK(std::abs(kv_trace(e) - 2.0) < 1e-12);

    // X a three-point set, amplitude (AB - BA)_{xx} e^{-|xi|^2}
    Eigen::Matrix3d A, B;
    A << 1, 2, 0, -1, 0.5, 3, 2, 1, -2;
    B << 0, 1, 4, 2, -1, 0.5, 1, 1, 1;
    Eigen::Matrix3d C = A * B - B * A;
    FioSymbol comm = vanishing_phase_symbol(2);
    comm.base.clear();
    for (int i = 0; i < 3; ++i) comm.base.push_back({Vec{double(i)}, 1.0});
    auto a = [C](Span x, Span, Span xi) {
        int i = static_cast<int>(std::lround(x[0]));
        return Complex(C(i, i) * std::exp(-xi[0] * xi[0] - xi[1] * xi[1]));
    };
    comm.remainder_jet = comm.ball_jet = {a};
    CHECK(std::abs(kv_trace(comm)) < 1e-8);
}

TEST_CASE("kv_trace equals the constant term when I_0 is empty") {
    std::vector<FioSymbol> suite;
    suite.push_back(gaussian_symbol(1));
    suite.push_back(gaussian_symbol(2));
    for (double alpha : {-0.5, 0.5, 1.5}) suite.push_back(circle_fractional_symbol(alpha));
    FioSymbol mixed = vanishing_phase_symbol(2, 0.5);
    mixed.terms.push_back({-3.0, 1, {[](Span, Span, Span xi) { return Complex(1.0 + xi[0] * xi[0]); }}, false});
    mixed.terms.push_back({-1.5, 0, {constant(2.0), constant(0.5)}, false});
    mixed.remainder_jet = {radial([](double r) { return std::exp(-r) * r; })};
    mixed.ball_jet = {radial([](double r) { return std::cos(r); })};
    suite.push_back(mixed);
    for (const auto& s : suite) {
        Complex kv = kv_trace(s);
        auto series = zeta_laurent_fio(s, 2).normalized();
        REQUIRE(series.min_order() >= 0);
        Complex c0 = series.coeff(0);
        CHECK(std::abs(kv - c0) <= 1e-9 * std::max(1.0, std::abs(c0)));
    }
}

TEST_CASE("kv_trace_vanishing_phase") {
    // single term d = -2 filling R: vanishes after regularization
    FioSymbol single = vanishing_phase_symbol(1);
    single.terms.push_back({-2.0, 0, {constant(1.0)}, true});
    CHECK(std::abs(kv_trace_vanishing_phase(single, 0)) < 1e-10);
    CHECK(std::abs(kv_trace_vanishing_phase(single, 1)) < 1e-13);

    // e^{-r} plus r^{-2} outside the ball: direct quadrature of everything is 2 + 2
    FioSymbol mix = vanishing_phase_symbol(1);
    mix.terms.push_back({-2.0, 0, {constant(1.0)}, false});
    mix.remainder_jet = mix.ball_jet = {radial([](double r) { return std::exp(-r); })};
    CHECK(std::abs(kv_trace_vanishing_phase(mix, 0) - 4.0) < 1e-10);
    CHECK(std::abs(kv_trace_vanishing_phase(mix, 1) - 4.0) < 1e-12);

    // 1/(1 + r^2) with its expansion at infinity
    FioSymbol lor = vanishing_phase_symbol(1);
    for (int k = 0; k < 4; ++k) lor.terms.push_back({-2.0 - 2 * k, 0, {constant(k % 2 ? -1.0 : 1.0)}, false});
    lor.remainder_jet = {radial([](double r) {
        // exact tail sum_{k>=4} (-1)^k r^{-2-2k}
        double q = 1.0 / (r * r);
        return std::pow(q, 5) / (1.0 + q);
    })};
    lor.ball_jet = {radial([](double r) { return 1.0 / (1.0 + r * r); })};
    for (int N0 = 0; N0 <= 2; ++N0)
        CHECK(std::abs(kv_trace_vanishing_phase(lor, N0 + 2) - kv_trace_vanishing_phase(lor, N0)) < 1e-8);
    CHECK(std::abs(kv_trace_vanishing_phase(lor, 0) - pi) < 1e-10);

    FioSymbol moving = circle_cutoff_symbol(-2.0);
    moving.phase = linear_phase([](Span, Span) { return Vec{1.0}; });
    CHECK_THROWS_AS(kv_trace_vanishing_phase(moving, 0), DomainError);
}

TEST_CASE("mollified_radial_coefficient examples") {
    CHECK(std::abs(mollified_radial_coefficient(-1.0, 0, 0, 0.0, 0.5) - std::log(3.0)) < 1e-13);
    CHECK(std::abs(mollified_radial_coefficient(0.0, 0, 0, 0.0, 1.0) - 1.0) < 1e-14);
    // 1/2 - ln 2 / 2 + ... = (1 - ln 2)/2 - ... by parts: [-ln(u)/u - 1/u]_1^2
    double expect = (1.0 - std::log(2.0)) / 2.0;
    CHECK(std::abs(mollified_radial_coefficient(-2.0, 1, 0, 0.0, 1.0) - expect) < 1e-13);
    CHECK(std::abs(expect - 0.153426409720027345) < 1e-15);
    CHECK_THROWS_AS(mollified_radial_coefficient(-1.0, 0, 0, 0.0, 0.0), DomainError);
}

TEST_CASE("mollified_radial_coefficient converges at rate h in the integrable case") {
    // int_0^1 (h + r)^{1/2} -> 2/3
    double prev = 0.0;
    for (double h : {1e-2, 5e-3, 2.5e-3}) {
        double err = std::abs(mollified_radial_coefficient(0.5, 0, 0, 0.0, h) - 2.0 / 3.0);
        if (prev > 0.0) {
            double rate = std::log2(prev / err);
            CHECK(rate > 0.9);
            CHECK(rate < 1.1);
        }
        prev = err;
    }
}

TEST_CASE("mollification_limit: constant family") {
    MollifiedFamily f{{0.2, 0.1, 0.05, 0.025}, {Complex(1.5, -0.5), Complex(1.5, -0.5), Complex(1.5, -0.5),
                                                 Complex(1.5, -0.5)}};
    CHECK(mollification_limit(f).target == Complex(1.5, -0.5));
}

TEST_CASE("mollification_limit: shifted fractional Laplacian tends to 2 zeta(-alpha)") {
    for (double alpha : {-0.5, 0.5}) {
        MollifiedFamily f;
        for (double h : {0.2, 0.1, 0.05, 0.025}) {
            f.h.push_back(h);
            f.values.push_back(shifted_fractional_zeta_nonzero(alpha, h, 0.0));
        }
        auto r = mollification_limit(f);
        CHECK(std::abs(r.target - 2.0 * zeta_oracle(-alpha)) < 1e-4);
        REQUIRE(r.table.size() >= 2);
        CHECK(r.table[0].size() == 4);
        CHECK(r.orders.front() == doctest::Approx(1.0).epsilon(1e-12));  // zeta_H(.; 1 + h) is smooth in h
    }
}

TEST_CASE("mollification_limit: residue of the shifted H^{-1} family") {
    MollifiedFamily f;
    for (double h : {0.2, 0.1, 0.05, 0.025}) {
        f.h.push_back(h);
        f.values.push_back(shifted_fractional_laurent(-1.0, h, 2).series.coeff(-1));
    }
    CHECK(std::abs(mollification_limit(f).target + 2.0) < 1e-10);
}

TEST_CASE("mollification_limit rejects bad input") {
    MollifiedFamily osc{{0.2, 0.1, 0.05, 0.025}, {1.0, -1.0, 1.0, -1.0}};
    CHECK_THROWS_AS(mollification_limit(osc), ExtrapolationError);
    MollifiedFamily shortf{{0.2, 0.1, 0.05}, {1.0, 1.0, 1.0}};
    CHECK_THROWS_AS(mollification_limit(shortf), ExtrapolationError);
    MollifiedFamily uneven{{0.2, 0.1, 0.07, 0.01}, {1.0, 1.1, 1.2, 1.3}};
    CHECK_THROWS_AS(mollification_limit(uneven), ExtrapolationError);
}

TEST_CASE("circle mollified zeta approaches the fractional zeta") {
    // slow algebraic convergence; each halving of h should shrink the error by a fixed factor
    for (double alpha : {-0.5, 0.5}) {
        Complex target = circle_fractional_zeta(alpha, 0.0);
        double prev = 0.0;
        for (double h : {0.02, 0.01, 0.005, 0.0025}) {
            double e = std::abs(circle_mollified_zeta(alpha, 0.0, h) - target);
            if (prev > 0.0) {
                CHECK(e / prev > 0.45);
                CHECK(e / prev < 0.8);
            }
            prev = e;
        }
    }
}

TEST_CASE("mollification_proxy stays bounded as h shrinks") {
    double a = mollification_proxy(-0.5, 1, 0.0, 0.1);
    double b = mollification_proxy(-0.5, 1, 0.0, 0.01);
    CHECK(std::isfinite(a));
    CHECK(std::isfinite(b));
    CHECK(mollification_proxy(-0.5, 0, 0.0, 0.1) == 0.0);
}

TEST_CASE("symbol checks") {
    FioSymbol bad = gaussian_symbol(1);
    bad.phase.value = [](Span, Span, Span xi) { return xi[0] * xi[0]; };
    CHECK_THROWS_AS(check_symbol(bad), DomainError);

    // moving diagonal phase with a non-integrable term
    FioSymbol moving = circle_cutoff_symbol(-0.5);
    moving.phase = linear_phase([](Span, Span) { return Vec{1.0}; });
    CHECK_THROWS_AS(trace_distribution(moving), RequiresStatphaseError);

    // but an integrable one is routed to an oscillatory term: int_{|xi|>1} e^{i xi} |xi|^{-2} / (2 pi) * 2 pi
    FioSymbol ok = circle_cutoff_symbol(-2.0);
    ok.phase = moving.phase;
    auto d = trace_distribution(ok);
    CHECK(d.oscillatory_terms.size() == 1);
    // 2 int_1^inf cos(r)/r^2 dr = 2 (cos 1 - pi/2 + Si(1))
    Complex v = zeta_eval_fio(ok, 0.0);
    double si1 = 0.0, term = 1.0;
    for (int k = 0; k < 12; ++k) {
        si1 += term / (2 * k + 1);
        term *= -1.0 / ((2 * k + 2) * (2 * k + 3));
    }
    CHECK(std::abs(v.real() - 2.0 * (std::cos(1.0) - pi / 2 + si1)) < 1e-10);
    CHECK(std::abs(v.imag()) < 1e-10);
}
