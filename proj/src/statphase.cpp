#include "zetafio/statphase.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "zetafio/lattice.hpp"
#include "zetafio/parallel.hpp"
#include "zetafio/specfun.hpp"

namespace zetafio {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = 0.57721566490153286061;

Eigen::VectorXd to_eigen(Span v) {
    Eigen::VectorXd e(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) e[static_cast<Eigen::Index>(i)] = v[i];
    return e;
}

Vec to_vec(const Eigen::VectorXd& e) { return Vec(e.data(), e.data() + e.size()); }

// exp map on the sphere at nu along tangent vector w
Eigen::VectorXd sphere_exp(const Eigen::VectorXd& nu, const Eigen::VectorXd& w) {
    double t = w.norm();
    if (t == 0.0) return nu;
    Eigen::VectorXd p = std::cos(t) * nu + (std::sin(t) / t) * w;
    return p / p.norm();
}

struct SphericalDerivs {
    Eigen::VectorXd grad;  // tangent components
    Eigen::MatrixXd hess;
    double value;
};

SphericalDerivs spherical_derivs(const Phase& phase, Span x, Span y, const Eigen::VectorXd& nu,
                                 const Eigen::MatrixXd& E) {
    Vec p = to_vec(nu);
    Eigen::VectorXd g = to_eigen(phase_gradient(phase, x, y, p));
    Eigen::MatrixXd H = phase_hessian(phase, x, y, p);
    double radial = g.dot(nu);
    SphericalDerivs d;
    d.value = phase.value(x, y, p);
    d.grad = E.transpose() * g;
    d.hess = E.transpose() * H * E - radial * Eigen::MatrixXd::Identity(E.cols(), E.cols());
    return d;
}

double digamma_int(int m1) {
    // psi(m1) for a positive integer
    double s = -kEulerGamma;
    for (int k = 1; k < m1; ++k) s += 1.0 / k;
    return s;
}

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

// l-th Taylor coefficient at 0 by the trapezoid rule on |z| = rho
Complex taylor_coefficient(const std::function<Complex(Complex)>& f, int l, double rho, int M = 32) {
    Complex s = 0.0;
    for (int k = 0; k < M; ++k) {
        double phi = 2.0 * kPi * k / M;
        Complex w = std::polar(1.0, phi);
        s += f(rho * w) * std::polar(1.0, -l * phi);
    }
    return s / (static_cast<double>(M) * std::pow(rho, l));
}

bool is_nonpositive_integer(Complex q, int* m) {
    double r = std::round(q.real());
    if (std::abs(q.imag()) < 1e-12 && std::abs(q.real() - r) < 1e-12 && r <= 0.0) {
        if (m) *m = static_cast<int>(-r);
        return true;
    }
    return false;
}

}  // namespace

Eigen::MatrixXd tangent_frame(Span nu_s) {
    const auto N = static_cast<Eigen::Index>(nu_s.size());
    Eigen::VectorXd nu = to_eigen(nu_s);
    Eigen::Index drop = 0;
    nu.cwiseAbs().maxCoeff(&drop);
    Eigen::MatrixXd E(N, N - 1);
    Eigen::Index c = 0;
    for (Eigen::Index k = 0; k < N; ++k) {
        if (k == drop) continue;
        Eigen::VectorXd v = Eigen::VectorXd::Unit(N, k);
        v -= v.dot(nu) * nu;
        for (Eigen::Index j = 0; j < c; ++j) v -= v.dot(E.col(j)) * E.col(j);
        E.col(c++) = v / v.norm();
    }
    return E;
}

Vec phase_gradient(const Phase& phase, Span x, Span y, Span xi) {
    if (phase.gradient) return phase.gradient(x, y, xi);
    const double h = 1e-3;
    Vec g(xi.size()), p(xi.begin(), xi.end());
    for (std::size_t i = 0; i < xi.size(); ++i) {
        auto at = [&](double s) {
            p[i] = xi[i] + s;
            double v = phase.value(x, y, p);
            p[i] = xi[i];
            return v;
        };
        g[i] = (-at(2 * h) + 8 * at(h) - 8 * at(-h) + at(-2 * h)) / (12 * h);
    }
    return g;
}

Eigen::MatrixXd phase_hessian(const Phase& phase, Span x, Span y, Span xi) {
    if (phase.hessian) return phase.hessian(x, y, xi);
    const double h = 1e-4;
    const auto N = static_cast<Eigen::Index>(xi.size());
    Eigen::MatrixXd H(N, N);
    Vec p(xi.begin(), xi.end());
    auto at = [&](Eigen::Index a, double sa, Eigen::Index b, double sb) {
        p[a] += sa;
        p[b] += sb;
        double v = phase.value(x, y, p);
        p[a] = xi[a];
        p[b] = xi[b];
        return v;
    };
    double f0 = phase.value(x, y, xi);
    for (Eigen::Index a = 0; a < N; ++a) {
        H(a, a) = (at(a, h, a, 0.0) - 2 * f0 + at(a, -h, a, 0.0)) / (h * h);
        for (Eigen::Index b = a + 1; b < N; ++b) {
            H(a, b) = (at(a, h, b, h) - at(a, h, b, -h) - at(a, -h, b, h) + at(a, -h, b, -h)) / (4 * h * h);
            H(b, a) = H(a, b);
        }
    }
    return H;
}

std::vector<StationaryPointData> find_stationary_points(const Phase& phase, Span x, Span y, int N,
                                                        const SphereWindow& window) {
    std::vector<StationaryPointData> out;
    if (N == 1) {
        for (double s : {-1.0, 1.0}) {
            Vec p{s};
            if (window && !window(p)) continue;
            StationaryPointData d;
            d.point = p;
            d.phase_value = phase.value(x, y, p);
            d.frame = Eigen::MatrixXd(1, 0);
            d.hessian = Eigen::MatrixXd(0, 0);
            out.push_back(d);
        }
        return out;
    }

    SphereRule grid = build_rule(N, 3);
    struct Candidate {
        bool converged = false;
        Eigen::VectorXd nu;
        double residual = 0.0;
    };
    std::vector<Candidate> cand(grid.nodes.size());
    parallel_map(grid.nodes.size(), [&](std::size_t i) {
        Eigen::VectorXd nu = to_eigen(grid.nodes[i]);
        double res = 0.0;
        for (int it = 0; it < 60; ++it) {
            Eigen::MatrixXd E = tangent_frame(to_vec(nu));
            SphericalDerivs d = spherical_derivs(phase, x, y, nu, E);
            res = d.grad.norm();
            double scale = std::max(1.0, to_eigen(phase_gradient(phase, x, y, to_vec(nu))).norm());
            if (res < 1e-13 * scale) break;
            Eigen::VectorXd u = d.hess.fullPivLu().solve(-d.grad);
            if (!u.allFinite()) break;
            if (u.norm() > 0.5) u *= 0.5 / u.norm();
            nu = sphere_exp(nu, E * u);
            if (u.norm() < 1e-15) break;
        }
        Eigen::MatrixXd E = tangent_frame(to_vec(nu));
        res = spherical_derivs(phase, x, y, nu, E).grad.norm();
        cand[i] = {res < 1e-10, nu, res};
        return Complex(0.0);
    });

    double best = 1e300;
    std::vector<Eigen::VectorXd> found;
    for (const auto& c : cand) {
        best = std::min(best, c.residual);
        if (!c.converged) continue;
        bool dup = false;
        for (const auto& f : found) dup = dup || (f - c.nu).norm() < 1e-6;
        if (!dup) found.push_back(c.nu);
    }
    if (found.empty())
        throw MorseError("Newton did not converge from any start; smallest spherical gradient " + std::to_string(best));

    for (const auto& nu : found) {
        Vec p = to_vec(nu);
        if (window && !window(p)) continue;
        StationaryPointData d;
        d.point = p;
        d.frame = tangent_frame(p);
        SphericalDerivs sd = spherical_derivs(phase, x, y, nu, d.frame);
        d.phase_value = sd.value;
        d.hessian = 0.5 * (sd.hess + sd.hess.transpose());
        d.gradient_norm = sd.grad.norm();
        d.det = d.hessian.determinant();
        if (std::abs(d.det) <= kDegeneracyFloor) throw MorseError("degenerate spherical Hessian at a stationary point");
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(d.hessian);
        for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) d.signature += es.eigenvalues()[k] > 0 ? 1 : -1;
        out.push_back(std::move(d));
    }
    std::sort(out.begin(), out.end(), [](const StationaryPointData& a, const StationaryPointData& b) {
        return std::lexicographical_compare(a.point.begin(), a.point.end(), b.point.begin(), b.point.end());
    });
    return out;
}

Complex h_coefficient(int j, const StationaryPointData& sp, const AmplitudeFunction& a, Span x, Span y) {
    if (j < 0) throw DomainError("j must be nonnegative");
    if (std::abs(sp.det) <= kDegeneracyFloor) throw MorseError("degenerate spherical Hessian");
    const auto n = sp.hessian.rows();
    Complex pref = std::pow(2.0 * kPi, n / 2.0) / std::sqrt(std::abs(sp.det)) *
                   std::polar(1.0, kPi * sp.signature / 4.0) / (factorial(j) * std::pow(Complex(0.0, 2.0), j));
    if (j == 0) return pref * a(x, y, sp.point);
    if (n == 0) return 0.0;

    const Eigen::MatrixXd Minv = sp.hessian.inverse();
    const Eigen::VectorXd nu = to_eigen(sp.point);
    const double steps[] = {0.0, 1e-4, 2e-3, 1e-2, 2e-2};
    const double h = steps[std::min(j, 4)];
    // amplitude in normal coordinates around the stationary point
    auto f = [&](const Eigen::VectorXd& u) { return a(x, y, to_vec(sphere_exp(nu, sp.frame * u))); };
    std::function<Complex(int, const Eigen::VectorXd&)> D = [&](int k, const Eigen::VectorXd& u) -> Complex {
        if (k == 0) return f(u);
        Complex s = 0.0;
        for (Eigen::Index p = 0; p < n; ++p) {
            Eigen::VectorXd ep = Eigen::VectorXd::Unit(n, p) * h;
            s += Minv(p, p) * (D(k - 1, u + ep) - 2.0 * D(k - 1, u) + D(k - 1, u - ep)) / (h * h);
            for (Eigen::Index q = p + 1; q < n; ++q) {
                Eigen::VectorXd eq = Eigen::VectorXd::Unit(n, q) * h;
                Complex m = (D(k - 1, u + ep + eq) - D(k - 1, u + ep - eq) - D(k - 1, u - ep + eq) +
                             D(k - 1, u - ep - eq)) /
                            (4 * h * h);
                s += (Minv(p, q) + Minv(q, p)) * m;
            }
        }
        return s;
    };
    return pref * D(j, Eigen::VectorXd::Zero(n));
}

Complex g_coefficient(int j, Complex d, int l, int N, double theta_hat) {
    if (l < 0 || j < 0) throw DomainError("orders must be nonnegative");
    Complex q = d + (N + 1) / 2.0 - static_cast<double>(j);
    int m = 0;
    if (N == 1 && is_nonpositive_integer(q, &m)) {
        if (theta_hat == 0.0) throw DomainError("logarithmic branch needs a nonzero phase value");
        // finite part of Gamma(z - m) (-i theta + 0)^{m - z}
        Complex L(std::log(std::abs(theta_hat)), -kPi / 2.0 * (theta_hat > 0 ? 1.0 : -1.0));
        if (l == 0) return std::pow(Complex(0.0, theta_hat), m) / factorial(m) * (digamma_int(m + 1) - L);
        auto zg = [&](Complex z) { return z * gamma(z - static_cast<double>(m)) * std::exp((static_cast<double>(m) - z) * L); };
        return factorial(l) * taylor_coefficient(zg, l + 1, 0.5, 64);
    }
    if (is_nonpositive_integer(q + 1.0, nullptr))
        throw UnimplementedBranchError("q in -N_0 is only implemented for N = 1");

    double dist = 1.0;
    for (int k = 0; k <= 60; ++k) dist = std::min(dist, std::abs(q + 1.0 + static_cast<double>(k)));
    const double rho = std::min(0.1, dist / 2.0);
    auto F = [&](double eps) {
        Complex base(theta_hat, eps);
        return [=](Complex z) {
            Complex w = q + 1.0 + z;
            return gamma(w) * std::exp(w * Complex(0.0, kPi / 2.0)) * std::exp(-w * std::log(base));
        };
    };
    const double eps = 1e-8;
    auto value = [&](double e) {
        auto f = F(e);
        return l == 0 ? f(0.0) : factorial(l) * taylor_coefficient(f, l, rho);
    };
    // +i0 by one Richardson halving of the regularization
    return 2.0 * value(eps / 2) - value(eps);
}

SphericalPhaseResult spherical_phase_integral(const Phase& phase, const AmplitudeFunction& a, Span x, Span y, int N,
                                              double r, int J, int level) {
    if (!(r > 0.0)) throw DomainError("r must be positive");
    if (J < 0 || J > 3) throw DomainError("truncation order J must be in 0..3");
    SphericalPhaseResult out;
    SphereRule rule = build_rule(N, level);
    out.brute_force = sphere_integral(
        [&](Span nu) { return std::exp(Complex(0.0, r * phase.value(x, y, nu))) * a(x, y, nu); }, rule);
    out.points = find_stationary_points(phase, x, y, N);
    if (N == 1) {
        out.asymptotic = out.brute_force;
        return out;
    }
    const double n = N - 1;
    std::vector<Complex> parts;
    for (const auto& sp : out.points) {
        Complex s = 0.0;
        for (int j = 0; j <= J; ++j)
            s += (j % 2 ? -1.0 : 1.0) * h_coefficient(j, sp, a, x, y) * std::pow(r, -n / 2.0 - j);
        parts.push_back(std::exp(Complex(0.0, r * sp.phase_value)) * s);
    }
    out.asymptotic = pairwise_sum(parts);
    return out;
}

HilbertSchmidtResult hilbert_schmidt_check(const FioSymbol& sym, const std::vector<Vec>& grid) {
    HilbertSchmidtResult out;
    out.min_abs_phase = 1e300;
    SphereRule probe = build_rule(sym.freq_dim, 3);
    for (const auto& x : grid) {
        bool zero = true;
        for (const auto& nu : probe.nodes) zero = zero && std::abs(sym.phase.value(x, x, nu)) <= 1e-12;
        if (zero) {
            out.min_abs_phase = 0.0;
            continue;
        }
        for (const auto& sp : find_stationary_points(sym.phase, x, x, sym.freq_dim))
            out.min_abs_phase = std::min(out.min_abs_phase, std::abs(sp.phase_value));
    }
    out.pass = out.min_abs_phase > kPhaseFloor;
    return out;
}

WaveTraceResult wave_trace_flat_torus(double t, const Eigen::MatrixXd& basis, double radius) {
    const int N = static_cast<int>(basis.rows());
    if (std::abs(t) < 1e-6) throw PoleError("wave trace pole at t = 0", N, 0.0);
    const double vol = std::abs(basis.determinant());
    const Complex pref = factorial(N - 1) * vol / std::pow(Complex(0.0, -2.0 * kPi), N);
    const double n = (N - 1) / 2.0;
    const Complex ang = std::pow(kPi / 2.0, n) * std::polar(1.0, -kPi * (N - 1) / 4.0);

    LatticeEnumeration lat = enumerate_lattice(basis, radius);
    WaveTraceResult out;
    out.lattice_points = lat.points.size();
    std::vector<Complex> parts{sphere_volume(N) / std::pow(t, N)};
    for (const auto& g : lat.points) {
        double L = g.norm();
        if (L < 1e-12) continue;
        if (std::abs(std::abs(t) - L) < 1e-6) {
            int count = 0;
            for (const auto& h : lat.points) count += std::abs(h.norm() - L) < 1e-9;
            throw PoleError("wave trace pole at a closed geodesic length " + std::to_string(L), N,
                            pref * static_cast<double>(count) * ang * std::pow(L, -n));
        }
        parts.push_back(ang * std::pow(L, -n) * (std::pow(t + L, -N) + std::pow(t - L, -N)));
    }
    if (N == 1) {
        // sum_{m > M} 4t / (t^2 - c^2 m^2) via Hurwitz zeta
        const double c = std::abs(basis(0, 0));
        const int M = static_cast<int>(std::floor(radius / c + 1e-12));
        if (std::abs(t) >= c * (M + 1)) throw DomainError("lattice radius too small for this t");
        Complex tail = 0.0;
        double ratio = (t / c) * (t / c), pk = 1.0, last = 0.0;
        for (int k = 0; k < 200; ++k) {
            double term = -(4.0 * t / (c * c)) * pk * hurwitz_zeta(2.0 + 2.0 * k, M + 1.0).real();
            tail += term;
            last = std::abs(term);
            if (last < 1e-17 * std::max(1.0, std::abs(tail))) break;
            pk *= ratio;
        }
        parts.push_back(tail);
        out.tail_bound = std::abs(pref) * last;
    } else {
        double p = (N + 1) / 2.0;
        out.tail_bound = std::abs(pref) * 2.0 * std::abs(ang) * sphere_volume(N) / vol * std::pow(radius, 1.0 - p) /
                         (p - 1.0);
    }
    out.value = pref * pairwise_sum(parts);
    return out;
}

}  // namespace zetafio
