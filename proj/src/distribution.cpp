#include "zetafio/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zetafio/parallel.hpp"
#include "zetafio/quadrature.hpp"

namespace zetafio {

namespace {

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

double binomial(int n, int k) {
    double b = 1.0;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

Complex critical_shift(const LogHomogeneousTerm& t, int dimM) {
    return static_cast<double>(dimM) + 1.0 + t.degree;
}

void note_tail(ZetaDiagnostics* diag, const HalfLineResult& r) {
    if (!diag) return;
    diag->max_tail_bound = std::max(diag->max_tail_bound, r.tail_bound);
    diag->max_cutoff = std::max(diag->max_cutoff, r.cutoff);
    diag->max_panels = std::max(diag->max_panels, r.panels);
}

Complex outer_integral(const GaugedDistribution& dist, const RadialFunction& f, ZetaDiagnostics* diag) {
    return outer_region_integral(dist, f, dist.remainder_frequency, diag);
}

Complex ball_integral(const GaugedDistribution& dist, const BallFunction& f) { return unit_ball_integral(dist, f); }

struct Moments {
    std::vector<std::vector<Complex>> res;  // res[iota][n] = int_M A_n
    std::vector<Complex> tau;               // outer remainder moments
    std::vector<Complex> ball;              // unit ball moments
};

Complex remainder_moment(const GaugedDistribution& dist, int n, ZetaDiagnostics* diag) {
    if (dist.remainder_mellin) {
        if (dist.remainder_jet.empty()) return 0.0;
        const auto& r0 = dist.remainder_jet[0];
        double inv = 1.0 / factorial(n);
        return outer_integral(
            dist,
            [&](double r, std::span<const double> nu) { return r0(r, nu) * std::pow(std::log(r), n) * inv; },
            diag);
    }
    if (n >= static_cast<int>(dist.remainder_jet.size())) return 0.0;
    return outer_integral(dist, dist.remainder_jet[n], diag);
}

Moments compute_moments(const GaugedDistribution& dist, int K, ZetaDiagnostics* diag) {
    Moments m;
    for (const auto& t : dist.terms) {
        std::vector<Complex> r(K + t.log_order + 2, Complex(0.0));
        for (std::size_t n = 0; n < t.angular_jet.size() && n < r.size(); ++n)
            r[n] = sphere_integral(t.angular_jet[n], dist.manifold);
        m.res.push_back(std::move(r));
    }
    m.tau.assign(K + 1, Complex(0.0));
    for (int n = 0; n <= K; ++n) m.tau[n] = remainder_moment(dist, n, diag);
    m.ball.assign(K + 1, Complex(0.0));
    for (int n = 0; n <= K && n < static_cast<int>(dist.unit_ball_jet.size()); ++n)
        m.ball[n] = ball_integral(dist, dist.unit_ball_jet[n]);
    return m;
}

// Laurent expansion at 0 of (-1)^{l+1} l! (a + z)^{-(l+1)}
LaurentSeries weight_series(Complex a, int l, int K, bool critical) {
    double lead = ((l + 1) % 2 ? -1.0 : 1.0) * factorial(l);
    if (critical) return LaurentSeries::monomial(lead, -(l + 1), K);
    std::vector<Complex> c(K + 1);
    for (int j = 0; j <= K; ++j)
        c[j] = lead * (j % 2 ? -1.0 : 1.0) * binomial(l + j, j) * std::pow(a, -(l + 1 + j));
    return LaurentSeries(0.0, 0, std::move(c));
}

void classify(const GaugedDistribution& dist, ZetaDiagnostics* diag) {
    if (!diag) return;
    for (std::size_t i = 0; i < dist.terms.size(); ++i) {
        Complex a = critical_shift(dist.terms[i], dist.dim_m());
        if (std::abs(a) < kCriticalTol) {
            diag->critical.push_back(i);
            if (a != Complex(0.0)) diag->near_critical.push_back(i);
        }
    }
}

// coefficient of z^m in int r^{d+z} (ln r)^l B(z)
Complex oscillatory_moment(const GaugedDistribution& dist, const OscillatoryTerm& t, int m, ZetaDiagnostics* diag) {
    if (m < 0) return 0.0;
    return outer_region_integral(
        dist,
        [&](double r, std::span<const double> nu) {
            double lr = std::log(r);
            Complex v = 0.0;
            for (int n = 0; n <= m && n < static_cast<int>(t.jet.size()); ++n) {
                int k = m - n;
                v += t.jet[n](r, nu) * std::pow(lr, k) / factorial(k);
            }
            return v * std::pow(r, t.degree) * std::pow(lr, t.log_order);
        },
        t.frequency, diag);
}

}  // namespace

Complex outer_region_integral(const GaugedDistribution& dist, const RadialFunction& f,
                              const FrequencyFunction& frequency, ZetaDiagnostics* diag) {
    const auto& rule = dist.manifold;
    const int dimM = dist.dim_m();
    std::vector<HalfLineResult> info(rule.nodes.size());
    auto vals = parallel_map(rule.nodes.size(), [&](std::size_t i) {
        std::span<const double> nu(rule.nodes[i]);
        double freq = frequency ? frequency(nu) : 0.0;
        info[i] = integrate_half_line([&](double r) { return f(r, nu) * std::pow(r, dimM); }, 1.0, freq);
        return rule.weights[i] * check_finite(info[i].value, "radial remainder integral");
    });
    for (auto& r : info) note_tail(diag, r);
    return pairwise_sum(vals);
}

Complex unit_ball_integral(const GaugedDistribution& dist, const BallFunction& f) {
    const auto& rule = dist.manifold;
    const int dimM = dist.dim_m();
    const int N = rule.dim_ambient;
    const auto& g = gauss_legendre(dist.ball_radial_nodes);
    auto vals = parallel_map(rule.nodes.size(), [&](std::size_t i) {
        Vec xi(N);
        Complex s = 0.0;
        for (std::size_t q = 0; q < g.x.size(); ++q) {
            double r = 0.5 * (g.x[q] + 1.0);
            for (int c = 0; c < N; ++c) xi[c] = r * rule.nodes[i][c];
            s += 0.5 * g.w[q] * std::pow(r, dimM) * f(xi);
        }
        return rule.weights[i] * check_finite(s, "unit ball integrand");
    });
    return pairwise_sum(vals);
}

Complex radial_coefficient(Complex d, int l, int dimM, Complex z) {
    if (l < 0) throw DomainError("log order must be nonnegative");
    Complex a = static_cast<double>(dimM) + d + z + 1.0;
    if (a == Complex(0.0))
        throw PoleError("radial coefficient pole of order " + std::to_string(l + 1), l + 1,
                        l == 0 ? Complex(-1.0) : Complex(0.0));
    double lead = ((l + 1) % 2 ? -1.0 : 1.0) * factorial(l);
    return lead * std::pow(a, -(l + 1));
}

Complex residue_term(const LogHomogeneousTerm& t, int n, const SphereRule& rule) {
    if (n < 0) throw DomainError("jet index must be nonnegative");
    if (n >= static_cast<int>(t.angular_jet.size())) {
        if (t.angular_jet.empty()) throw DomainError("insufficient gauge order: empty jet");
        // jets are polynomials in z; orders past the supplied list vanish
        return 0.0;
    }
    return factorial(n) * sphere_integral(t.angular_jet[n], rule);
}

bool is_critical(const LogHomogeneousTerm& t, int dimM) {
    return std::abs(critical_shift(t, dimM)) < kCriticalTol;
}

std::vector<std::size_t> critical_indices(const GaugedDistribution& dist) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dist.terms.size(); ++i)
        if (is_critical(dist.terms[i], dist.dim_m())) out.push_back(i);
    return out;
}

LaurentSeries zeta_laurent(const GaugedDistribution& dist, int K, ZetaDiagnostics* diag) {
    if (K < 0) throw DomainError("truncation order must be nonnegative");
    classify(dist, diag);
    Moments m = compute_moments(dist, K, diag);
    std::vector<Complex> regular(K + 1);
    for (int n = 0; n <= K; ++n) {
        regular[n] = m.tau[n] + m.ball[n];
        for (const auto& t : dist.oscillatory_terms) regular[n] += oscillatory_moment(dist, t, n, diag);
    }
    LaurentSeries total(0.0, 0, std::move(regular));
    for (std::size_t i = 0; i < dist.terms.size(); ++i) {
        const auto& t = dist.terms[i];
        if (t.extends_into_ball) {
            // lower and upper Mellin pieces cancel identically
            if (diag) ++diag->cancelled_ball_terms;
            continue;
        }
        Complex a = critical_shift(t, dist.dim_m());
        bool crit = std::abs(a) < kCriticalTol;
        LaurentSeries w = weight_series(a, t.log_order, K, crit);
        LaurentSeries r(0.0, 0, m.res[i]);
        total = series_add(total, series_mul(w, r));
    }
    return total;
}

Complex zeta_eval(const GaugedDistribution& dist, Complex z, ZetaDiagnostics* diag) {
    const int dimM = dist.dim_m();
    classify(dist, diag);
    std::vector<Complex> parts;
    for (std::size_t i = 0; i < dist.terms.size(); ++i) {
        const auto& t = dist.terms[i];
        if (t.extends_into_ball) {
            if (diag) ++diag->cancelled_ball_terms;
            continue;
        }
        Complex a = critical_shift(t, dimM) + z;
        if (std::abs(a) < kPoleGuard) throw NearPoleError("zeta_eval: z is at a pole of term " + std::to_string(i));
        Complex res = 0.0, zn = 1.0;
        for (const auto& A : t.angular_jet) {
            res += zn * sphere_integral(A, dist.manifold);
            zn *= z;
        }
        parts.push_back(radial_coefficient(t.degree, t.log_order, dimM, z) * res);
    }
    if (dist.remainder_mellin) {
        if (!dist.remainder_jet.empty()) {
            const auto& r0 = dist.remainder_jet[0];
            parts.push_back(outer_integral(
                dist, [&](double r, std::span<const double> nu) { return r0(r, nu) * std::pow(r, z); }, diag));
        }
    } else {
        Complex zn = 1.0;
        for (const auto& R : dist.remainder_jet) {
            parts.push_back(zn * outer_integral(dist, R, diag));
            zn *= z;
        }
    }
    for (const auto& t : dist.oscillatory_terms) {
        if (!(z.real() < -dimM - 1.0 - t.degree.real()))
            throw DomainError("zeta_eval: oscillatory term is not integrable at this z");
        parts.push_back(outer_region_integral(
            dist,
            [&](double r, std::span<const double> nu) {
                Complex b = 0.0, zk = 1.0;
                for (const auto& B : t.jet) {
                    b += zk * B(r, nu);
                    zk *= z;
                }
                return b * std::pow(r, t.degree + z) * std::pow(std::log(r), t.log_order);
            },
            t.frequency, diag));
    }
    Complex zn = 1.0;
    for (const auto& U : dist.unit_ball_jet) {
        parts.push_back(zn * ball_integral(dist, U));
        zn *= z;
    }
    return pairwise_sum(parts);
}

Complex direct_integral_oracle(const GaugedDistribution& dist, Complex z) {
    const int dimM = dist.dim_m();
    double sup = -1e300;
    for (const auto& t : dist.terms) {
        if (t.extends_into_ball) throw DomainError("direct oracle: term singular inside the unit ball");
        sup = std::max(sup, t.degree.real());
    }
    if (!dist.terms.empty() && !(z.real() < -dimM - 1.0 - sup))
        throw DomainError("direct oracle: z outside the absolute convergence region");
    std::vector<Complex> zpow{1.0};
    std::size_t jet = 0;
    for (const auto& t : dist.terms) jet = std::max(jet, t.angular_jet.size());
    jet = std::max(jet, dist.remainder_jet.size());
    for (const auto& t : dist.oscillatory_terms) jet = std::max(jet, t.jet.size());
    for (std::size_t n = 1; n < jet; ++n) zpow.push_back(zpow.back() * z);

    RadialFunction full = [&](double r, std::span<const double> nu) {
        Complex v = 0.0;
        if (dist.remainder_mellin) {
            if (!dist.remainder_jet.empty()) v += dist.remainder_jet[0](r, nu) * std::pow(r, z);
        } else {
            for (std::size_t n = 0; n < dist.remainder_jet.size(); ++n) v += zpow[n] * dist.remainder_jet[n](r, nu);
        }
        double lr = std::log(r);
        for (const auto& t : dist.terms) {
            Complex ang = 0.0;
            for (std::size_t n = 0; n < t.angular_jet.size(); ++n) ang += zpow[n] * t.angular_jet[n](nu);
            v += std::pow(r, t.degree + z) * std::pow(lr, t.log_order) * ang;
        }
        return v;
    };
    Complex total = outer_integral(dist, full, nullptr);
    for (const auto& t : dist.oscillatory_terms) {
        if (!(z.real() < -dimM - 1.0 - t.degree.real()))
            throw DomainError("direct oracle: z outside the absolute convergence region");
        total += outer_region_integral(
            dist,
            [&](double r, std::span<const double> nu) {
                Complex b = 0.0;
                for (std::size_t n = 0; n < t.jet.size(); ++n) b += zpow[n] * t.jet[n](r, nu);
                return b * std::pow(r, t.degree + z) * std::pow(std::log(r), t.log_order);
            },
            t.frequency, nullptr);
    }
    Complex zn = 1.0;
    for (const auto& U : dist.unit_ball_jet) {
        total += zn * ball_integral(dist, U);
        zn *= z;
    }
    return total;
}

GaugedDistribution finite_part(const GaugedDistribution& dist) {
    GaugedDistribution out = dist;
    out.terms.clear();
    for (const auto& t : dist.terms)
        if (!is_critical(t, dist.dim_m())) out.terms.push_back(t);
    return out;
}

GaugedDistribution m_gauge(const GaugedDistribution& dist) {
    GaugedDistribution out = dist;
    for (auto& t : out.terms)
        if (t.angular_jet.size() > 1) t.angular_jet.resize(1);
    if (!out.remainder_jet.empty()) out.remainder_jet.resize(1);
    out.remainder_mellin = true;
    return out;
}

Complex zeta_determinant(const LaurentSeries& s) {
    double scale = 0.0;
    for (auto c : s.coeffs()) scale = std::max(scale, std::abs(c));
    for (int k = s.min_order(); k < 0; ++k)
        if (std::abs(s.coeff(k)) > kNormalizeEps * std::max(scale, 1.0))
            throw PoleError("zeta not holomorphic at zero", -k, s.coeff(-1));
    if (s.trunc_order() < 1) throw DomainError("zeta_determinant needs the order-1 coefficient");
    return std::exp(s.coeff(1));
}

Complex zeta_determinant(const GaugedDistribution& dist) { return zeta_determinant(zeta_laurent(dist, 1)); }

}  // namespace zetafio
