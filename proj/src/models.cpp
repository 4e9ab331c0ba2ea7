#include "zetafio/models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "zetafio/parallel.hpp"
#include "zetafio/specfun.hpp"

namespace zetafio {

namespace {

constexpr double kPi = std::numbers::pi;

// sin(pi x) with exact zeros at the integers
double sinpi_real(double x) {
    double r = x - 2.0 * std::round(x / 2.0);  // r in [-1, 1]
    if (r == 0.0 || std::abs(r) == 1.0) return 0.0;
    return std::sin(kPi * r);
}

double eta_borwein(double s) {
    const int n = 40;
    std::vector<double> d(n + 1);
    double term = 1.0, acc = 1.0;
    d[0] = acc;
    for (int i = 1; i <= n; ++i) {
        term *= 4.0 * (n + i - 1.0) * (n - i + 1.0) / ((2.0 * i) * (2.0 * i - 1.0));
        acc += term;
        d[i] = acc;
    }
    double sum = 0.0;
    for (int k = 0; k < n; ++k) sum += (k % 2 ? -1.0 : 1.0) * (d[k] - d[n]) / std::pow(k + 1.0, s);
    return -sum / d[n];
}

double heat_radius(double t) { return std::sqrt(4.0 * t * 41.5); }

Complex binomial(Complex w, int k) {
    Complex b = 1.0;
    for (int i = 0; i < k; ++i) b *= (w - static_cast<double>(i)) / static_cast<double>(i + 1);
    return b;
}

// binom(alpha + z, k) as a polynomial in z
LaurentSeries binomial_series(Complex alpha, int k, int K) {
    LaurentSeries b = LaurentSeries::constant(1.0, K);
    for (int i = 0; i < k; ++i) {
        std::vector<Complex> c(K + 1, 0.0);
        c[0] = (alpha - static_cast<double>(i)) / static_cast<double>(i + 1);
        if (K >= 1) c[1] = 1.0 / static_cast<double>(i + 1);
        b = series_mul(b, LaurentSeries(0.0, 0, c));
    }
    return b;
}

Complex taylor_on_circle(const std::function<Complex(Complex)>& f, int k, double rho, int M) {
    Complex s = 0.0;
    for (int j = 0; j < M; ++j) {
        double phi = 2.0 * kPi * j / M;
        s += f(std::polar(rho, phi)) * std::polar(1.0, -k * phi);
    }
    return s / (static_cast<double>(M) * std::pow(rho, k));
}

}  // namespace

double zeta_oracle(double s) {
    if (s == 1.0) throw PoleError("zeta pole at s = 1", 1, 1.0);
    if (s >= 0.0) return eta_borwein(s) / (1.0 - std::pow(2.0, 1.0 - s));
    return std::pow(2.0, s) * std::pow(kPi, s - 1.0) * sinpi_real(s / 2.0) * std::tgamma(1.0 - s) * zeta_oracle(1.0 - s);
}

double circle_derivative_oracle(double alpha, int k, double h) {
    auto f = [&](double z) { return 2.0 * zeta_oracle(-z - alpha); };
    if (k == 1) return (f(h) - f(-h)) / (2.0 * h);
    if (k == 2) return (f(h) - 2.0 * f(0.0) + f(-h)) / (h * h);
    throw DomainError("derivative order must be 1 or 2");
}

double theta_oracle(double t, const Eigen::MatrixXd& B) {
    Eigen::MatrixXd dual = 2.0 * kPi * B.inverse().transpose();
    auto lat = enumerate_lattice(dual, std::sqrt(41.5 / t));
    std::vector<double> v;
    for (const auto& k : lat.points) v.push_back(std::exp(-t * k.squaredNorm()));
    return pairwise_sum(v);
}

Complex wave_oracle_circle(double t) { return Complex(0.0, std::cos(t / 2.0) / std::sin(t / 2.0)); }

HeatResult heat_trace_closed_form(double t, const Eigen::MatrixXd& B) {
    if (!(t > 0.0)) throw DomainError("t must be positive");
    const int N = static_cast<int>(B.rows());
    const double R = heat_radius(t);
    auto lat = enumerate_lattice(B, R);
    std::vector<double> v;
    for (const auto& g : lat.points) v.push_back(std::exp(-g.squaredNorm() / (4.0 * t)));
    const double vol = std::abs(B.determinant());
    const double pref = vol / std::pow(4.0 * kPi * t, N / 2.0);
    HeatResult out;
    out.value = pref * pairwise_sum(v);
    out.lattice_points = lat.points.size();
    // shell count times the Gaussian at the cutoff
    out.tail_bound = pref * sphere_volume(N) * std::pow(R, N - 1) / vol * std::exp(-R * R / (4.0 * t)) * (2.0 * t / R);
    return out;
}

std::vector<FioSymbol> heat_symbols(double t, const Eigen::MatrixXd& B, int level) {
    if (!(t > 0.0)) throw DomainError("t must be positive");
    const int N = static_cast<int>(B.rows());
    const double vol = std::abs(B.determinant());
    const double norm = std::pow(2.0 * kPi, -N);
    AmplitudeFunction a = [t, norm](Span, Span, Span xi) {
        double r2 = 0.0;
        for (double c : xi) r2 += c * c;
        return Complex(norm * std::exp(-t * r2));
    };
    std::vector<FioSymbol> out;
    for (const auto& g : enumerate_lattice(B, heat_radius(t)).points) {
        Vec gamma(g.data(), g.data() + g.size());
        FioSymbol s;
        s.base_dim = N;
        s.freq_dim = N;
        s.base = {BasePoint{Vec(N, 0.0), vol}};
        s.phase = linear_phase([gamma](Span x, Span y) {
            Vec v(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) v[i] = x[i] - y[i] - gamma[i];
            return v;
        });
        s.remainder_jet = {a};
        s.ball_jet = {a};
        s.sphere_level = level;
        out.push_back(std::move(s));
    }
    return out;
}

LaurentSeries heat_trace_laurent(double t, const Eigen::MatrixXd& B, int K, int level) {
    LaurentSeries total = LaurentSeries::constant(0.0, K);
    for (const auto& s : heat_symbols(t, B, level)) total = series_add(total, zeta_laurent_fio(s, K));
    return total;
}

Complex heat_trace_via_zeta(double t, const Eigen::MatrixXd& B, int level) {
    return extract_leading(heat_trace_laurent(t, B, 0, level), 0.0).const_term;
}

Complex heat_trace_kv(double t, const Eigen::MatrixXd& B, int level) {
    std::vector<Complex> v;
    for (const auto& s : heat_symbols(t, B, level)) v.push_back(kv_trace(s));
    return pairwise_sum(v);
}

namespace {
FioSymbol circle_symbol(Complex alpha, bool fills_ball) {
    FioSymbol s;
    s.base_dim = 1;
    s.freq_dim = 1;
    s.base = {BasePoint{Vec{0.0}, 2.0 * kPi}};
    s.phase = pseudodifferential_phase();
    AmplitudeTerm t;
    t.degree = alpha;
    t.jet = {[](Span, Span, Span) { return Complex(1.0 / (2.0 * kPi)); }};
    t.extends_into_ball = fills_ball;
    s.terms = {t};
    return s;
}
}  // namespace

FioSymbol circle_fractional_symbol(Complex alpha) { return circle_symbol(alpha, true); }
FioSymbol circle_cutoff_symbol(Complex alpha) { return circle_symbol(alpha, false); }

Complex circle_lattice_sum(Complex beta) {
    if (beta == Complex(0.0)) return -1.0;  // sin zero against the zeta pole
    Complex s = beta + 1.0;
    // pair +-n; tail via homogeneity and Hurwitz zeta. Growing terms go straight to the closed form.
    const int M = s.real() > 0.5 ? 16 : 0;
    Complex c1 = fourier_abs_power(beta, 1.0);
    std::vector<Complex> v;
    for (int n = 1; n <= M; ++n) v.push_back(2.0 * fourier_abs_power(beta, n));
    v.push_back(2.0 * c1 * hurwitz_zeta(s, M + 1.0));
    return pairwise_sum(v);
}

CircleAssembly circle_fractional_assembly(Complex alpha, Complex z) {
    CircleAssembly out;
    const Complex beta = alpha + z;
    FioSymbol sym = circle_fractional_symbol(alpha);
    GaugedDistribution dist = trace_distribution(sym);
    Complex res = residue_term(dist.terms[0], 0, dist.manifold);
    out.weight = radial_coefficient(alpha, 0, 0, z) * res;
    out.ball = res / (1.0 + beta);  // int_0^1 r^{beta} dr
    out.lattice = circle_lattice_sum(beta);
    // the gamma = 0 term contributes ball + weight = 0; zeta_eval_fio drops it the same way
    out.value = zeta_eval_fio(sym, z) + out.lattice;
    return out;
}

Complex circle_fractional_zeta(Complex alpha, Complex z) { return circle_fractional_assembly(alpha, z).value; }

LaurentSeries circle_fractional_laurent(Complex alpha, int K) {
    LaurentSeries sym_part = zeta_laurent_fio(circle_fractional_symbol(alpha), K);
    const Complex p = -1.0 - alpha;  // pole of the lattice sum in z
    const bool pole_at_zero = std::abs(p) < 1e-12;
    double dist = 1.0;
    for (int k = 0; k < 200; ++k) {
        double d = std::abs(-1.0 - 2.0 * k - alpha);
        if (d > 1e-12) dist = std::min(dist, d);
    }
    const double rho = std::min(0.5, dist / 2.0);
    const int M = 64;
    std::vector<Complex> c;
    if (pole_at_zero) {
        auto g = [&](Complex z) { return z * circle_lattice_sum(alpha + z); };
        for (int k = 0; k <= K + 1; ++k) c.push_back(taylor_on_circle(g, k, rho, M));
        return series_add(sym_part, LaurentSeries(0.0, -1, c));
    }
    auto f = [&](Complex z) { return circle_lattice_sum(alpha + z); };
    for (int k = 0; k <= K; ++k) c.push_back(taylor_on_circle(f, k, rho, M));
    return series_add(sym_part, LaurentSeries(0.0, 0, c));
}

Complex circle_fractional_kv(Complex alpha) {
    return kv_trace(circle_fractional_symbol(alpha)) + circle_lattice_sum(alpha);
}

Complex circle_fractional_zeta_derivative(Complex alpha, int k, double h) {
    LaurentSeries s = circle_fractional_laurent(alpha, 10);
    if (s.min_order() < 0 && std::abs(s.coeff(-1)) > 0.0) throw PoleError("pole at z = 0", 1, s.coeff(-1));
    auto f = [&](double z) { return s.evaluate(z); };
    if (k == 1) return (f(h) - f(-h)) / (2.0 * h);
    if (k == 2) return (f(h) - 2.0 * f(0.0) + f(-h)) / (h * h);
    throw DomainError("derivative order must be 1 or 2");
}

Complex circle_mollified_zeta(Complex alpha, Complex z, double h) {
    return zeta_eval_mollified(circle_fractional_symbol(alpha), z, h) + circle_lattice_sum(alpha + z);
}

Complex shifted_fractional_zeta(Complex alpha, double h, Complex z) {
    if (!(h > 0.0 && h <= 1.0)) throw DomainError("h must lie in (0, 1]");
    return 2.0 * hurwitz_zeta(-z - alpha, h) - std::pow(Complex(h), z + alpha);
}

Complex shifted_fractional_zeta_nonzero(Complex alpha, double h, Complex z) {
    return shifted_fractional_zeta(alpha, h, z) - std::pow(Complex(h), z + alpha);
}

namespace {
double shifted_term_bound(Complex beta, double h, int k) {
    double e = k - beta.real();
    double zb = e > 1.5 ? 1.0 + std::pow(2.0, -e) * 4.0 : 4.0;
    return 2.0 * std::abs(binomial(beta, k)) * std::pow(h, k) * zb;
}
int shifted_kmax(Complex beta, double h, double* bound) {
    int k = 0;
    for (; k < 400; ++k) {
        if (k > beta.real() + 2.0 && shifted_term_bound(beta, h, k) < 1e-17) break;
    }
    if (bound) *bound = shifted_term_bound(beta, h, k) / (1.0 - h);
    return k;
}
}  // namespace

ShiftedPipeline shifted_fractional_laurent(Complex alpha, double h, int K) {
    if (!(h > 0.0 && h < 1.0)) throw DomainError("binomial route needs h in (0, 1)");
    ShiftedPipeline out;
    const int kmax = shifted_kmax(alpha, h, &out.truncation_bound);
    // zero mode h^{alpha + z}
    std::vector<Complex> zm(K + 1);
    double lh = std::log(h), f = 1.0;
    for (int n = 0; n <= K; ++n) {
        if (n > 0) f *= lh / n;
        zm[n] = std::pow(Complex(h), alpha) * f;
    }
    LaurentSeries total(0.0, 0, zm);
    for (int k = 0; k < kmax; ++k) {
        LaurentSeries term = series_mul(binomial_series(alpha, k, K + 1), circle_fractional_laurent(alpha - static_cast<double>(k), K + 1));
        total = series_add(total, term.scaled(std::pow(h, k)));
    }
    out.series = total.truncated(K);
    out.terms_used = kmax;
    return out;
}

Complex shifted_fractional_pipeline(Complex alpha, double h, Complex z) {
    if (!(h > 0.0 && h < 1.0)) throw DomainError("binomial route needs h in (0, 1)");
    const Complex beta = alpha + z;
    const int kmax = shifted_kmax(beta, h, nullptr);
    std::vector<Complex> v{std::pow(Complex(h), beta)};
    for (int k = 0; k < kmax; ++k)
        v.push_back(binomial(beta, k) * std::pow(h, k) * circle_fractional_zeta(alpha - static_cast<double>(k), z));
    return pairwise_sum(v);
}

const std::map<std::string, SphereBuiltin>& angular_builtins() {
    static const std::map<std::string, SphereBuiltin> m = {
        {"constant", [](double c) { return SphereFunction([c](Span) { return Complex(c); }); }},
        {"first_coordinate", [](double c) { return SphereFunction([c](Span nu) { return Complex(c * nu[0]); }); }},
        {"first_coordinate_squared",
         [](double c) { return SphereFunction([c](Span nu) { return Complex(c * nu[0] * nu[0]); }); }},
        {"inverse_abs_first",
         [](double c) { return SphereFunction([c](Span nu) { return Complex(c / std::abs(nu[0])); }); }},
    };
    return m;
}

const std::map<std::string, RadialBuiltin>& radial_builtins() {
    static const std::map<std::string, RadialBuiltin> m = {
        // integrates to c e^{-1} over r >= 1 against r^{dimM} dr dnu
        {"exp_decay",
         [](double c, int N) {
             double vol = sphere_volume(N);
             return RadialFunction([c, N, vol](double r, Span) { return Complex(c * std::exp(-r) * std::pow(r, 1 - N) / vol); });
         }},
        {"gaussian", [](double c, int) { return RadialFunction([c](double r, Span) { return Complex(c * std::exp(-r * r)); }); }},
    };
    return m;
}

const std::vector<std::string>& model_names() {
    static const std::vector<std::string> names = {"heat", "fractional_laplacian_circle", "shifted_fractional",
                                                   "wave_flat_torus", "psdo_identity_phase"};
    return names;
}

}  // namespace zetafio
