#include "zetafio/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <queue>
#include <algorithm>
#include <string>

namespace zetafio {

const GaussRule& gauss_legendre(int n) {
    static std::mutex mu;
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    GaussRule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it2 = 0; it2 < 100; ++it2) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1.0, p1 = x;
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // recompute derivative at the converged node
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        if (n == 1) dp = 1.0;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.x[i] = -x;
        r.x[n - 1 - i] = x;
        r.w[i] = w;
        r.w[n - 1 - i] = w;
    }
    if (n % 2 == 1) r.x[n / 2] = 0.0;
    return cache.emplace(n, std::move(r)).first->second;
}

GaussRule gauss_symmetric_jacobi(int n, double mu) {
    // Golub-Welsch on the monic three-term recurrence
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        double b = k * (k + 2.0 * mu) / (4.0 * (k + mu) * (k + mu) - 1.0);
        J(k, k - 1) = J(k - 1, k) = std::sqrt(b);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    double mass = std::sqrt(std::numbers::pi) * std::tgamma(mu + 1.0) / std::tgamma(mu + 1.5);
    GaussRule r;
    for (int i = 0; i < n; ++i) {
        r.x.push_back(es.eigenvalues()(i));
        double v = es.eigenvectors()(0, i);
        r.w.push_back(mass * v * v);
    }
    return r;
}

Complex integrate_gauss(const ScalarFn& f, double a, double b, int n) {
    const auto& g = gauss_legendre(n);
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    Complex s = 0.0;
    for (int i = 0; i < n; ++i) s += g.w[i] * f(c + h * g.x[i]);
    return s * h;
}

namespace {

constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b;
    Complex value;
    double error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const ScalarFn& f, double a, double b) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    Complex fc = f(c);
    Complex k = fc * kWgk[7];
    Complex g = fc * kWg[3];
    for (int i = 0; i < 7; ++i) {
        double dx = h * kXgk[i];
        Complex s = f(c - dx) + f(c + dx);
        k += kWgk[i] * s;
        if (i % 2 == 1) g += kWg[i / 2] * s;
    }
    return {a, b, k * h, std::abs((k - g) * h)};
}

}  // namespace

QuadResult integrate_adaptive(const ScalarFn& f, double a, double b, double abs_tol, double rel_tol,
                              int max_depth) {
    std::priority_queue<Segment> heap;
    Segment first = gk15(f, a, b);
    heap.push(first);
    Complex total = first.value;
    double err = first.error;
    int evals = 15;
    const int max_segments = 1 << std::min(max_depth, 12);
    while (err > std::max(abs_tol, rel_tol * std::abs(total)) && static_cast<int>(heap.size()) < max_segments) {
        Segment s = heap.top();
        heap.pop();
        double m = 0.5 * (s.a + s.b);
        if (m <= s.a || m >= s.b) {
            heap.push(s);
            break;
        }
        Segment l = gk15(f, s.a, m), r = gk15(f, m, s.b);
        evals += 30;
        total += l.value + r.value - s.value;
        err += l.error + r.error - s.error;
        heap.push(l);
        heap.push(r);
    }
    // re-sum to avoid drift from the running updates
    Complex sum = 0.0;
    double e = 0.0;
    std::vector<Segment> segs;
    while (!heap.empty()) {
        segs.push_back(heap.top());
        heap.pop();
    }
    std::sort(segs.begin(), segs.end(), [](const Segment& x, const Segment& y) { return x.a < y.a; });
    for (auto& s : segs) {
        sum += s.value;
        e += s.error;
    }
    return {sum, e, evals};
}

namespace {

// Wynn epsilon on partial sums; exact for finite sums of geometric sequences
Complex wynn_epsilon(const std::vector<Complex>& s) {
    std::vector<Complex> prev(s.size(), Complex(0.0)), cur = s;
    Complex best = s.back();
    for (std::size_t col = 1; cur.size() > 1; ++col) {
        std::vector<Complex> next(cur.size() - 1);
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            Complex diff = cur[i + 1] - cur[i];
            if (std::abs(diff) == 0.0) return (col % 2) ? cur[i + 1] : best;
            next[i] = prev[i + 1] + 1.0 / diff;
        }
        prev = std::move(cur);
        cur = std::move(next);
        if (col % 2 == 0) best = cur.back();
    }
    return best;
}

HalfLineResult half_line_oscillatory(const ScalarFn& f, double a, double w, double rel_tol, double abs_tol) {
    // f = e^{i w r} g(r); panels no wider than a few periods, tail from two integrations by parts
    HalfLineResult out;
    const double period = 2.0 * std::numbers::pi / std::abs(w);
    const int max_panels = 200000;
    auto g = [&](double r) { return f(r) * std::exp(Complex(0.0, -w * r)); };
    Complex sum = 0.0;
    double lo = a;
    for (int k = 0; k < max_panels; ++k) {
        double hi = lo + std::min(lo, 16.0 * period);
        sum += integrate_adaptive(f, lo, hi, abs_tol * 0.1, rel_tol).value;
        out.panels = k + 1;
        out.cutoff = hi;
        double step = 1e-3 * std::min(hi, period);
        Complex g0 = g(hi), gp = g(hi + step), gm = g(hi - step);
        Complex d1 = (gp - gm) / (2.0 * step);
        Complex d2 = (gp - 2.0 * g0 + gm) / (step * step);
        Complex iw(0.0, w);
        Complex tail = std::exp(Complex(0.0, w * hi)) * (-g0 / iw + d1 / (iw * iw));
        double neglected = std::abs(d2) / std::pow(std::abs(w), 3);
        double target = abs_tol + rel_tol * std::abs(sum);
        if (k >= 1 && neglected <= target) {
            out.value = sum + tail;
            out.tail_bound = std::abs(tail) + neglected;
            return out;
        }
        lo = hi;
    }
    throw NonIntegrableError("oscillatory radial integral did not reach its tail tolerance");
}

}  // namespace

HalfLineResult integrate_half_line(const ScalarFn& f, double a, double frequency, double rel_tol,
                                   double abs_tol) {
    if (!(a > 0.0)) throw DomainError("half-line integration needs a positive lower limit");
    if (std::abs(frequency) > 1e-8) return half_line_oscillatory(f, a, frequency, rel_tol, abs_tol);
    const int max_panels = 80;
    HalfLineResult out;
    std::vector<Complex> panels, partial, accel;
    Complex sum = 0.0;
    double lo = a;
    for (int k = 0; k < max_panels; ++k) {
        double hi = 2.0 * lo;
        Complex c = integrate_adaptive(f, lo, hi, abs_tol * 0.1, rel_tol).value;
        panels.push_back(c);
        sum += c;
        out.panels = k + 1;
        out.cutoff = hi;
        double target = abs_tol + rel_tol * std::abs(sum);
        if (k >= 3 && std::abs(c) <= 1e-3 * target && std::abs(panels[k - 1]) <= 1e-2 * target) {
            out.value = sum;
            out.tail_bound = std::abs(c);
            return out;
        }
        partial.push_back(sum);
        if (k >= 6 && std::abs(c) < (1.0 - 1e-3) * std::abs(panels[k - 1])) {
            // algebraic decay: accelerate the last few partial sums
            std::vector<Complex> window(partial.end() - std::min<std::size_t>(partial.size(), 12), partial.end());
            accel.push_back(wynn_epsilon(window));
            std::size_t m = accel.size();
            if (m >= 3 && std::isfinite(std::abs(accel[m - 1])) && std::abs(accel[m - 1] - accel[m - 2]) <= target &&
                std::abs(accel[m - 2] - accel[m - 3]) <= 10.0 * target) {
                out.value = accel[m - 1];
                out.tail_bound = std::abs(accel[m - 1] - sum);
                return out;
            }
        }
        if (k >= 4 && std::abs(panels[k - 1]) > 0.0 && std::abs(panels[k - 2]) > 0.0) {
            Complex q1 = c / panels[k - 1];
            Complex q0 = panels[k - 1] / panels[k - 2];
            double spread = std::abs(q1 - q0);
            if (std::abs(q1) >= 1.0 - 1e-6 && spread < 1e-6 && k >= 10)
                throw NonIntegrableError("radial integrand does not decay: panel ratio " +
                                         std::to_string(std::abs(q1)));
            if (std::abs(q1) < 1.0 - 1e-6 && spread <= 1e-12 * std::abs(q1)) {
                Complex tail = c * q1 / (1.0 - q1);
                out.value = sum + tail;
                out.tail_bound = std::abs(tail);
                return out;
            }
        }
        lo = hi;
    }
    Complex last = panels.back();
    if (std::abs(last) > 1e-8 * std::max(std::abs(sum), 1e-300))
        throw NonIntegrableError("radial integral failed to converge within panel budget");
    Complex tail = 0.0;
    Complex prev = panels[panels.size() - 2];
    if (std::abs(prev) > 0.0) {
        Complex q = last / prev;
        if (std::abs(q) < 1.0) tail = last * q / (1.0 - q);
    }
    out.value = sum + tail;
    out.tail_bound = std::abs(last) + std::abs(tail);
    return out;
}

}  // namespace zetafio
