#include "zetafio/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>

#include "zetafio/models.hpp"
#include "zetafio/parallel.hpp"
#include "zetafio/quadrature.hpp"
#include "zetafio/specfun.hpp"
#include "zetafio/statphase.hpp"

namespace zetafio {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

double rel_err(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
Complex random_complex(Rng& rng, double scale) { return {uniform(rng, -scale, scale), uniform(rng, -scale, scale)}; }

// c0 + sum_i c_i nu_i + q nu_0^2
SphereFunction random_angular(Rng& rng, int N, double scale) {
    Complex c0 = random_complex(rng, scale), q = random_complex(rng, scale);
    std::vector<Complex> c(N);
    for (auto& v : c) v = random_complex(rng, scale);
    return [c0, q, c](std::span<const double> nu) {
        Complex s = c0 + q * nu[0] * nu[0];
        for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * nu[i];
        return s;
    };
}

RadialFunction random_remainder(Rng& rng, double scale) {
    Complex a = random_complex(rng, scale), b = random_complex(rng, scale);
    double decay = uniform(rng, 0.7, 1.5);
    return [a, b, decay](double r, std::span<const double> nu) { return (a + b * nu[0]) * std::exp(-decay * r); };
}

BallFunction random_ball(Rng& rng, double scale) {
    Complex a = random_complex(rng, scale), b = random_complex(rng, scale);
    return [a, b](std::span<const double> xi) {
        double r2 = 0.0;
        for (double c : xi) r2 += c * c;
        return a * std::cos(std::sqrt(r2)) + b * xi[0];
    };
}

// replaces every jet entry of order >= 1 with fresh random data
GaugedDistribution regauge(const GaugedDistribution& d, Rng& rng) {
    GaugedDistribution g = d;
    const int N = d.manifold.dim_ambient;
    for (auto& t : g.terms)
        for (std::size_t n = 1; n < t.angular_jet.size(); ++n) t.angular_jet[n] = random_angular(rng, N, 1.0);
    if (!g.remainder_mellin)
        for (std::size_t n = 1; n < g.remainder_jet.size(); ++n) g.remainder_jet[n] = random_remainder(rng, 1.0);
    for (std::size_t n = 1; n < g.unit_ball_jet.size(); ++n) g.unit_ball_jet[n] = random_ball(rng, 1.0);
    return g;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

CriterionResult make(int id, const char* name, bool pass, std::string detail) {
    CriterionResult r;
    r.id = id;
    r.name = name;
    r.pass = pass;
    r.detail = std::move(detail);
    return r;
}

// ---- individual criteria ----

CriterionResult c01_circle_residue(std::uint64_t) {
    Timer t;
    Complex r = residue_trace(circle_cutoff_symbol(-1.0));
    double s = t.seconds();
    double err = std::abs(r + 2.0);
    return make(1, "circle residue", err < 1e-12 && s < 0.1,
                fmt("residue %.15g%+.3gi, |err| %.2e, %.4f s", r.real(), r.imag(), err, s));
}

CriterionResult c02_fractional_values(std::uint64_t) {
    double worst = 0.0, slowest = 0.0;
    for (double alpha : {-0.75, -0.5, -0.25, 0.5, 1.0, 2.0}) {
        Timer t;
        Complex v = circle_fractional_zeta(alpha, 0.0);
        slowest = std::max(slowest, t.seconds());
        double oracle = 2.0 * zeta_oracle(-alpha);
        // 2 zeta(-2) = 0: fall back to the absolute error
        double e = oracle == 0.0 ? std::abs(v) : rel_err(v, oracle);
        worst = std::max(worst, e);
    }
    return make(2, "fractional Laplacian values", worst < 1e-8 && slowest < 1.0,
                fmt("max rel err %.2e, slowest alpha %.4f s", worst, slowest));
}

CriterionResult c03_derivatives(std::uint64_t) {
    double worst = 0.0;
    for (double alpha : {-0.5, -0.25})
        for (int k : {1, 2})
            worst = std::max(worst, std::abs(circle_fractional_zeta_derivative(alpha, k) -
                                             circle_derivative_oracle(alpha, k)));
    return make(3, "derivative identity", worst < 1e-5, fmt("max abs err %.2e", worst));
}

CriterionResult c04_heat(std::uint64_t) {
    Timer t;
    double worst = 0.0;
    for (int N : {1, 2})
        for (double tt : {0.5, 1.0, 2.0}) {
            Eigen::MatrixXd B = 2.0 * kPi * Eigen::MatrixXd::Identity(N, N);
            double cf = heat_trace_closed_form(tt, B).value;
            double th = theta_oracle(tt, B);
            Complex z = heat_trace_via_zeta(tt, B);
            worst = std::max({worst, rel_err(z, cf), rel_err(z, th), rel_err(cf, th)});
        }
    double s = t.seconds();
    return make(4, "heat trace", worst < 1e-6 && s < 5.0, fmt("max pairwise rel err %.2e, %.2f s total", worst, s));
}

CriterionResult c05_wave(std::uint64_t) {
    Eigen::MatrixXd B(1, 1);
    B(0, 0) = 2.0 * kPi;
    const double R = 400.0;
    double worst = 0.0;
    for (double t : {1.0, 2.0, kPi / 2})
        worst = std::max(worst, std::abs(wave_trace_flat_torus(t, B, R).value - wave_oracle_circle(t)));
    std::vector<double> probe;
    for (int k = 2; k <= 4; ++k) {
        double eps = std::pow(10.0, -k);
        probe.push_back(std::abs(-eps * wave_trace_flat_torus(2.0 * kPi - eps, B, R).value - Complex(0.0, 2.0)));
    }
    bool monotone = probe[1] < probe[0] && probe[2] < probe[1];
    bool pass = worst < 1e-6 && probe.back() < 1e-6 && monotone;
    return make(5, "wave trace N=1", pass,
                fmt("max |err| %.2e; pole probe |(t-2pi)W - 2i| = %.2e, %.2e, %.2e", worst, probe[0], probe[1],
                    probe[2]));
}

CriterionResult c06_radial(std::uint64_t seed) {
    Rng rng(seed ^ 0x6);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        int dimM = uniform_int(rng, 0, 3), l = uniform_int(rng, 0, 3);
        double d = -dimM - 1.0 - uniform(rng, 0.05, 4.0);
        double oracle = radial_quadrature_oracle(d, l, dimM);
        worst = std::max(worst, rel_err(radial_coefficient(d, l, dimM, 0.0), oracle));
    }
    return make(6, "radial coefficient", worst < 1e-8, fmt("100 samples, max rel err %.2e", worst));
}

CriterionResult c07_gauge(std::uint64_t seed) {
    Rng rng(seed ^ 0x7);
    RandomDistributionOptions opt;
    opt.force_critical = true;
    int oilc_mismatch = 0, moved = 0;
    double ilc_worst = 0.0, fp_worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        GaugedDistribution a = random_distribution(rng(), opt);
        GaugedDistribution b = regauge(a, rng);
        LaurentSeries sa = zeta_laurent(a, 2), sb = zeta_laurent(b, 2);
        LeadingData la = extract_leading(sa), lb = extract_leading(sb);
        // the perturbation must actually move the series, or the comparison says nothing
        for (int k = std::min(sa.min_order(), sb.min_order()); k <= 2; ++k)
            if (std::abs(sa.coeff(k) - sb.coeff(k)) > 1e-6) {
                ++moved;
                break;
            }
        if (la.oilc != lb.oilc) ++oilc_mismatch;
        ilc_worst = std::max(ilc_worst, std::abs(la.ilc - lb.ilc));
        Complex fa = zeta_laurent(finite_part(a), 1).coeff(0), fb = zeta_laurent(finite_part(b), 1).coeff(0);
        fp_worst = std::max(fp_worst, std::abs(fa - fb));
    }
    bool pass = oilc_mismatch == 0 && ilc_worst < 1e-9 && fp_worst < 1e-9;
    return make(7, "gauge independence", pass,
                fmt("50 pairs (%d with a changed series): oilc mismatches %d, max |d ilc| %.2e, max |d fp const| %.2e",
                    moved, oilc_mismatch, ilc_worst, fp_worst));
}

CriterionResult c08_m_gauge(std::uint64_t seed) {
    Rng rng(seed ^ 0x8);
    double worst = 0.0, before = 0.0;
    for (int i = 0; i < 20; ++i) {
        const int N = 1 + i % 3;
        const int dimM = N - 1;
        GaugedDistribution g;
        g.manifold = build_rule(N, 3);
        // zero-mean angular parts: odd, or a centred quadratic
        Complex a = random_complex(rng, 1.0), b = random_complex(rng, 1.0);
        SphereFunction zero_mean = [a, b, N](std::span<const double> nu) {
            Complex s = a * nu[0];
            if (N >= 2) s += b * (nu[0] * nu[0] - 1.0 / N);
            return s;
        };
        int l = uniform_int(rng, 0, 2);
        g.terms.push_back({-(dimM + 1.0), l, {zero_mean, random_angular(rng, N, 1.0), random_angular(rng, N, 1.0)}, false});
        g.terms.push_back({-(dimM + 1.0) + uniform(rng, 1.0, 2.0), 0, {random_angular(rng, N, 1.0)}, false});
        g.remainder_jet = {random_remainder(rng, 1.0)};
        auto orig = zeta_laurent(g, 1);
        auto m = zeta_laurent(m_gauge(g), 1);
        for (int k = m.min_order(); k < 0; ++k) worst = std::max(worst, std::abs(m.coeff(k)));
        for (int k = orig.min_order(); k < 0; ++k) before = std::max(before, std::abs(orig.coeff(k)));
    }
    return make(8, "M-gauge pole removal", worst < 1e-10,
                fmt("20 cases, max principal coeff %.2e after M-gauge (%.2e before)", worst, before));
}

CriterionResult c09_laurent_eval(std::uint64_t seed) {
    Rng rng(seed ^ 0x9);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        RandomDistributionOptions opt;
        opt.remainder_mellin = i % 2 == 1;
        GaugedDistribution g = random_distribution(rng(), opt);
        auto s = zeta_laurent(g, 10);
        Complex z = std::polar(0.1, uniform(rng, 0.0, 2.0 * kPi));
        worst = std::max(worst, rel_err(s.evaluate(z), zeta_eval(g, z)));
    }
    return make(9, "Laurent/eval consistency", worst < 1e-6, fmt("20 distributions at |z| = 0.1, max rel err %.2e", worst));
}

CriterionResult c10_continuation(std::uint64_t seed) {
    Rng rng(seed ^ 0xA);
    double worst = 0.0;
    for (int i = 0; i < 5; ++i) {
        RandomDistributionOptions opt;
        opt.remainder_mellin = i % 2 == 0;
        GaugedDistribution g = random_distribution(rng(), opt);
        double top = -1e300;
        for (const auto& t : g.terms) top = std::max(top, t.degree.real());
        // inside the region where every radial integral converges
        double edge = g.terms.empty() ? 0.0 : -(g.dim_m() + 1.0 + top);
        Complex z(std::min(edge, 0.0) - uniform(rng, 0.3, 1.0), uniform(rng, -0.5, 0.5));
        worst = std::max(worst, rel_err(zeta_eval(g, z), direct_integral_oracle(g, z)));
    }
    return make(10, "continuation cross-check", worst < 1e-7, fmt("5 points, max rel err %.2e", worst));
}

CriterionResult c11_mollification(std::uint64_t) {
    double worst = 0.0;
    std::string rows;
    for (double alpha : {-0.5, 0.5}) {
        MollifiedFamily f;
        for (double h : {0.2, 0.1, 0.05, 0.025}) {
            f.h.push_back(h);
            f.values.push_back(shifted_fractional_zeta_nonzero(alpha, h, 0.0));
        }
        auto r = mollification_limit(f);
        double e = std::abs(r.target - circle_fractional_zeta(alpha, 0.0));
        worst = std::max(worst, e);
        rows += fmt(" alpha=%g: %.2e (order %.2g)", alpha, e, r.orders.empty() ? 0.0 : r.orders.front());
    }
    return make(11, "mollification", worst < 1e-4, "abs err" + rows);
}

CriterionResult c12_pullback(std::uint64_t seed) {
    Rng rng(seed ^ 0xC);
    std::normal_distribution<double> g;
    const SphereRule r2 = build_rule(2, 6), r3 = build_rule(3, 6);
    double worst = 0.0;
    int done = 0;
    while (done < 50) {
        const int N = done % 2 ? 3 : 2;
        Eigen::MatrixXd T = Eigen::MatrixXd::Identity(N, N);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) T(i, j) += 0.4 * g(rng);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(T);
        auto sv = svd.singularValues();
        if (sv(0) / sv(N - 1) >= 10.0) continue;
        Eigen::VectorXd w(N);
        for (int i = 0; i < N; ++i) w(i) = 0.5 * g(rng);
        // degree -N integrand
        auto a = [w, N](std::span<const double> x) {
            Eigen::Map<const Eigen::VectorXd> v(x.data(), N);
            double n = v.norm();
            return Complex(std::exp(w.dot(v) / n) * std::pow(n, -N));
        };
        auto res = gl_pullback_check(a, -static_cast<double>(N), T, 0.0, 0, N == 2 ? r2 : r3);
        worst = std::max(worst, rel_err(res.rhs, res.lhs));
        ++done;
    }
    return make(12, "coordinate invariance of the residue", worst < 1e-6,
                fmt("50 transforms, max rel err %.2e", worst));
}

CriterionResult c13_statphase(std::uint64_t) {
    const Vec origin{0.0};
    AmplitudeFunction one = [](Span, Span, Span) { return Complex(1.0); };
    Phase p2 = linear_phase([](Span, Span) { return Vec{0.0, 1.0}; });
    Phase p3 = linear_phase([](Span, Span) { return Vec{0.0, 0.0, 1.0}; });
    auto err2 = [&](double r) {
        auto res = spherical_phase_integral(p2, one, origin, origin, 2, r, 0);
        return std::abs(res.asymptotic - 2.0 * kPi * std::cyl_bessel_j(0.0, r));
    };
    double j50 = 2.0 * kPi * std::cyl_bessel_j(0.0, 50.0);
    double gap = err2(50.0) / std::abs(j50);

    // the raw error oscillates with the phase; combine r and r + pi/2 to get its envelope
    std::vector<double> lr, le;
    for (double r : {20.0, 40.0, 80.0, 160.0}) {
        double a = err2(r), b = err2(r + kPi / 2);
        lr.push_back(std::log(r));
        le.push_back(std::log(std::sqrt(a * a + b * b)));
    }
    double mx = 0, my = 0;
    for (int i = 0; i < 4; ++i) {
        mx += lr[i] / 4;
        my += le[i] / 4;
    }
    double sxx = 0, sxy = 0;
    for (int i = 0; i < 4; ++i) {
        sxx += (lr[i] - mx) * (lr[i] - mx);
        sxy += (lr[i] - mx) * (le[i] - my);
    }
    double slope = sxy / sxx;

    double e3 = 0.0;
    for (double r : {20.0, 40.0, 80.0, 160.0}) {
        auto res = spherical_phase_integral(p3, one, origin, origin, 3, r, 0);
        e3 = std::max(e3, std::abs(res.asymptotic - 4.0 * kPi * std::sin(r) / r));
    }

    Phase p1 = linear_phase([](Span, Span) { return Vec{0.7}; });
    AmplitudeFunction a1 = [](Span, Span, Span xi) { return Complex(2.0 + xi[0], 0.5); };
    const double r1 = 7.3;
    Complex exact = std::exp(Complex(0.0, r1 * 0.7)) * Complex(3.0, 0.5) + std::exp(Complex(0.0, -r1 * 0.7)) * Complex(1.0, 0.5);
    double e1 = std::abs(spherical_phase_integral(p1, a1, origin, origin, 1, r1, 0).asymptotic - exact);

    bool pass = gap < 0.02 && std::abs(slope + 1.5) <= 0.3 && e3 < 1e-8 && e1 < 1e-14;
    return make(13, "stationary phase", pass,
                fmt("N=2 gap at r=50 %.2e, slope %.3f; N=3 max err %.2e; N=1 err %.2e", gap, slope, e3, e1));
}

CriterionResult c14_vanishing_phase(std::uint64_t) {
    double worst = 0.0, off = 0.0;
    for (const auto& f : vanishing_phase_families()) {
        const int n = static_cast<int>(f.symbol.terms.size());
        for (int N0 = f.min_n0; N0 + 2 <= n; ++N0) {
            Complex a = kv_trace_vanishing_phase(f.symbol, N0), b = kv_trace_vanishing_phase(f.symbol, N0 + 2);
            worst = std::max(worst, std::abs(a - b));
            off = std::max(off, std::abs(a - f.exact));
        }
    }
    return make(14, "vanishing-phase KV N0-independence", worst < 1e-8,
                fmt("3 families, max |change| %.2e (max distance to exact value %.2e)", worst, off));
}

CriterionResult c15_kv(std::uint64_t) {
    double worst = 0.0;
    int members = 0;
    auto check = [&](Complex kv, Complex c0) {
        worst = std::max(worst, std::abs(kv - c0) / std::max(std::abs(c0), 1.0));
        ++members;
    };
    auto const_term = [](const FioSymbol& s) { return zeta_laurent_fio(s, 1).coeff(0); };
    for (int N : {1, 2}) {
        Eigen::MatrixXd B = 2.0 * kPi * Eigen::MatrixXd::Identity(N, N);
        auto syms = heat_symbols(1.0, B, 4);
        std::size_t take = N == 1 ? syms.size() : std::min<std::size_t>(syms.size(), 5);
        for (std::size_t i = 0; i < take; ++i) check(kv_trace(syms[i]), const_term(syms[i]));
    }
    for (double alpha : {-0.75, -0.5, -0.25, 0.5, 1.0, 2.0})
        check(circle_fractional_kv(alpha), circle_fractional_laurent(alpha, 2).coeff(0));
    for (const auto& f : vanishing_phase_families()) check(kv_trace(f.symbol), const_term(f.symbol));
    return make(15, "Kontsevich-Vishik consistency", worst < 1e-9,
                fmt("%d members, max rel err %.2e", members, worst));
}

using CriterionFn = CriterionResult (*)(std::uint64_t);
constexpr CriterionFn kCriteria[kCriterionCount] = {
    c01_circle_residue, c02_fractional_values, c03_derivatives, c04_heat,          c05_wave,
    c06_radial,         c07_gauge,             c08_m_gauge,     c09_laurent_eval,  c10_continuation,
    c11_mollification,  c12_pullback,          c13_statphase,   c14_vanishing_phase, c15_kv,
};

const char* kNames[kCriterionCount] = {
    "circle residue", "fractional Laplacian values", "derivative identity", "heat trace", "wave trace N=1",
    "radial coefficient", "gauge independence", "M-gauge pole removal", "Laurent/eval consistency",
    "continuation cross-check", "mollification", "coordinate invariance of the residue", "stationary phase",
    "vanishing-phase KV N0-independence", "Kontsevich-Vishik consistency",
};

double binom(double a, int k) {
    double b = 1.0;
    for (int i = 0; i < k; ++i) b *= (a - i) / (i + 1);
    return b;
}

AmplitudeFunction radial_amplitude(std::function<double(double)> f) {
    return [f](Span, Span, Span xi) { return Complex(f(std::abs(xi[0]))); };
}

FioSymbol line_symbol() {
    FioSymbol s;
    s.base_dim = 1;
    s.freq_dim = 1;
    s.base = {BasePoint{Vec{0.0}, 1.0}};
    s.phase = pseudodifferential_phase();
    return s;
}

}  // namespace

double radial_quadrature_oracle(double d, int l, int dimM) {
    const double a = dimM + d + 1.0;
    if (!(a < 0.0)) throw DomainError("radial oracle needs dimM + d + 1 < 0");
    const double T = 60.0 / -a;
    const int pieces = 400;
    std::vector<Complex> parts;
    for (int p = 0; p < pieces; ++p) {
        double lo = T * p / pieces, hi = T * (p + 1) / pieces;
        parts.push_back(integrate_gauss([&](double t) { return Complex(std::exp(a * t) * std::pow(t, l)); }, lo, hi, 20));
    }
    return pairwise_sum(parts).real();
}

GaugedDistribution random_distribution(std::uint64_t seed, const RandomDistributionOptions& opt) {
    Rng rng(seed);
    const int N = uniform_int(rng, 1, 3);
    const int dimM = N - 1;
    GaugedDistribution g;
    g.manifold = build_rule(N, 3);
    const int nterms = uniform_int(rng, opt.force_critical ? 1 : 0, opt.max_terms);
    for (int i = 0; i < nterms; ++i) {
        LogHomogeneousTerm t;
        bool critical = (opt.force_critical && i == 0) || (opt.allow_critical && uniform(rng, 0.0, 1.0) < 0.4);
        if (critical) {
            t.degree = -(dimM + 1.0);
        } else {
            double shift = uniform(rng, 1.0, 2.5) * (uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0);
            double im = opt.allow_complex_degree ? uniform(rng, -0.5, 0.5) : 0.0;
            t.degree = Complex(-(dimM + 1.0) + shift, im);
        }
        t.log_order = uniform_int(rng, 0, opt.max_log_order);
        for (int n = 0; n < opt.jet_length; ++n) t.angular_jet.push_back(random_angular(rng, N, 1.0));
        if (critical && opt.force_critical && i == 0) {
            // keep the residue well away from zero
            Complex c = std::polar(uniform(rng, 0.5, 2.0), uniform(rng, 0.0, 2.0 * kPi));
            t.angular_jet[0] = [c](std::span<const double> nu) { return c * (1.0 + 0.3 * nu[0]); };
        }
        g.terms.push_back(std::move(t));
    }
    g.remainder_mellin = opt.remainder_mellin;
    const int rlen = opt.remainder_mellin ? 1 : opt.jet_length;
    for (int n = 0; n < rlen; ++n) g.remainder_jet.push_back(random_remainder(rng, 1.0));
    for (int n = 0; n < opt.jet_length; ++n) g.unit_ball_jet.push_back(random_ball(rng, 1.0));
    return g;
}

std::vector<VanishingPhaseFamily> vanishing_phase_families() {
    std::vector<VanishingPhaseFamily> out;
    const int K = 6;
    // stable tails: for r >= 4 sum the expansion directly instead of subtracting
    {
        VanishingPhaseFamily f{"(1+r)^(-1/2)", line_symbol(), 1, -4.0};
        std::vector<double> c(K + 60);
        for (int k = 0; k < K + 60; ++k) c[k] = binom(-0.5, k);
        for (int k = 0; k < K; ++k)
            f.symbol.terms.push_back({-0.5 - k, 0, {[v = c[k]](Span, Span, Span) { return Complex(v); }}, false});
        f.symbol.remainder_jet = {radial_amplitude([c, K](double r) {
            double v = 0.0;
            if (r >= 4.0) {
                for (int k = K; k < K + 60; ++k) v += c[k] * std::pow(r, -0.5 - k);
                return v;
            }
            v = std::pow(1.0 + r, -0.5);
            for (int k = 0; k < K; ++k) v -= c[k] * std::pow(r, -0.5 - k);
            return v;
        })};
        f.symbol.ball_jet = {radial_amplitude([](double r) { return std::pow(1.0 + r, -0.5); })};
        out.push_back(std::move(f));
    }
    {
        VanishingPhaseFamily f{"1/(1+r^2)", line_symbol(), 0, kPi};
        const int M = 4;
        for (int k = 0; k < M; ++k)
            f.symbol.terms.push_back(
                {-2.0 - 2.0 * k, 0, {[s = k % 2 ? -1.0 : 1.0](Span, Span, Span) { return Complex(s); }}, false});
        f.symbol.remainder_jet = {radial_amplitude([](double r) {
            double q = 1.0 / (r * r);
            return std::pow(q, 5) / (1.0 + q);
        })};
        f.symbol.ball_jet = {radial_amplitude([](double r) { return 1.0 / (1.0 + r * r); })};
        out.push_back(std::move(f));
    }
    {
        // r^{-1/2}(1 + 1/r)^{-1/2} (ln r + ln(1 + 1/r)): log terms b_n r^{-1/2-n} ln r and plain terms e_n r^{-1/2-n}
        VanishingPhaseFamily f{"(1+r)^(-1/2) ln(1+r)", line_symbol(), 1, 8.0};
        const int L = K + 60;
        std::vector<double> b(L), e(L, 0.0);
        for (int n = 0; n < L; ++n) {
            b[n] = binom(-0.5, n);
            for (int m = 1; m <= n; ++m) e[n] += binom(-0.5, n - m) * (m % 2 ? 1.0 : -1.0) / m;
        }
        for (int n = 0; n < K; ++n) {
            f.symbol.terms.push_back({-0.5 - n, 1, {[v = b[n]](Span, Span, Span) { return Complex(v); }}, false});
            if (n > 0)
                f.symbol.terms.push_back({-0.5 - n, 0, {[v = e[n]](Span, Span, Span) { return Complex(v); }}, false});
        }
        f.symbol.remainder_jet = {radial_amplitude([b, e, K, L](double r) {
            double lr = std::log(r), v = 0.0;
            if (r >= 4.0) {
                for (int n = K; n < L; ++n) v += (b[n] * lr + e[n]) * std::pow(r, -0.5 - n);
                return v;
            }
            v = std::pow(1.0 + r, -0.5) * std::log1p(r);
            for (int n = 0; n < K; ++n) v -= (b[n] * lr + e[n]) * std::pow(r, -0.5 - n);
            return v;
        })};
        f.symbol.ball_jet = {radial_amplitude([](double r) { return std::pow(1.0 + r, -0.5) * std::log1p(r); })};
        out.push_back(std::move(f));
    }
    return out;
}

CriterionResult run_criterion(int id, std::uint64_t seed) {
    if (id < 1 || id > kCriterionCount) throw DomainError("criterion id must be in 1..15");
    Timer t;
    CriterionResult r;
    try {
        r = kCriteria[id - 1](seed);
    } catch (const std::exception& e) {
        r = make(id, kNames[id - 1], false, std::string("exception: ") + e.what());
    }
    r.seconds = t.seconds();
    return r;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, seed));
    return out;
}

}  // namespace zetafio
