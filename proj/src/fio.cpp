#include "zetafio/fio.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "zetafio/parallel.hpp"
#include "zetafio/quadrature.hpp"
#include "zetafio/specfun.hpp"

namespace zetafio {

namespace {

constexpr double kPhaseZeroTol = 1e-12;

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

using SymPtr = std::shared_ptr<const FioSymbol>;

double diag_phase(const FioSymbol& s, Span x, Span xi) { return s.phase.value(x, x, xi); }

// Whether theta(x, x, nu) is the same function of nu at every base point.
bool diagonal_phase_uniform(const FioSymbol& sym, const SphereRule& rule) {
    const auto& x0 = sym.base.front().x;
    for (const auto& b : sym.base)
        for (const auto& nu : rule.nodes)
            if (std::abs(diag_phase(sym, b.x, nu) - diag_phase(sym, x0, nu)) > kPhaseZeroTol) return false;
    return true;
}

// sum over base points of w_x * f(x)
Complex base_sum(const FioSymbol& s, const std::function<Complex(const BasePoint&)>& f) {
    std::vector<Complex> v;
    v.reserve(s.base.size());
    for (const auto& b : s.base) v.push_back(b.weight * f(b));
    return pairwise_sum(v);
}

Complex lower_mellin(Complex a, int l) {
    // int_0^1 r^{a-1} (ln r)^l dr, written as the exact negative of the radial weight
    double lead = ((l + 1) % 2 ? -1.0 : 1.0) * factorial(l);
    return -(lead * std::pow(a, -(l + 1)));
}

FioSymbol at_point(const FioSymbol& sym, Span x) {
    FioSymbol s = sym;
    s.base = {BasePoint{Vec(x.begin(), x.end()), 1.0}};
    return s;
}

void require_no_critical(const GaugedDistribution& dist, const char* who) {
    for (const auto& t : dist.terms)
        if (is_critical(t, dist.dim_m()))
            throw DomainError(std::string(who) + ": critical term present (I_0 is not empty)");
}

}  // namespace

Phase linear_phase(const std::function<Vec(Span, Span)>& direction) {
    Phase p;
    p.value = [direction](Span x, Span y, Span xi) {
        Vec v = direction(x, y);
        double s = 0.0;
        for (std::size_t i = 0; i < xi.size(); ++i) s += v[i] * xi[i];
        return s;
    };
    p.gradient = [direction](Span x, Span y, Span) { return direction(x, y); };
    p.hessian = [](Span, Span, Span xi) {
        return Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(xi.size()), static_cast<Eigen::Index>(xi.size())).eval();
    };
    return p;
}

Phase pseudodifferential_phase() {
    return linear_phase([](Span x, Span y) {
        Vec v(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) v[i] = x[i] - y[i];
        return v;
    });
}

void check_symbol(const FioSymbol& sym) {
    if (sym.base.empty()) throw DomainError("symbol has no base points");
    if (!sym.phase.value) throw DomainError("symbol has no phase");
    if (sym.freq_dim < 1) throw DomainError("frequency dimension must be positive");
    SphereRule rule = build_rule(sym.freq_dim, 1);
    std::size_t nb = std::min<std::size_t>(sym.base.size(), 3);
    for (std::size_t b = 0; b < nb; ++b) {
        const auto& x = sym.base[b].x;
        for (std::size_t i = 0; i < rule.nodes.size(); i += std::max<std::size_t>(1, rule.nodes.size() / 8)) {
            const auto& nu = rule.nodes[i];
            double t1 = sym.phase.value(x, x, nu);
            for (double lam : {2.0, 3.7}) {
                Vec xi(nu);
                for (auto& c : xi) c *= lam;
                double tl = sym.phase.value(x, x, xi);
                if (std::abs(tl - lam * t1) > 1e-10 * lam * std::abs(t1) + 1e-14 * lam)
                    throw DomainError("phase is not homogeneous of degree 1 in xi");
            }
        }
    }
    for (const auto& t : sym.terms)
        if (t.jet.empty()) throw DomainError("amplitude term with an empty jet");
}

bool diagonal_phase_vanishes(const FioSymbol& sym, const SphereRule& rule) {
    for (const auto& b : sym.base)
        for (const auto& nu : rule.nodes)
            if (std::abs(diag_phase(sym, b.x, nu)) > kPhaseZeroTol) return false;
    return true;
}

GaugedDistribution trace_distribution(const FioSymbol& sym_in) {
    check_symbol(sym_in);
    SymPtr sym = std::make_shared<const FioSymbol>(sym_in);
    const int N = sym->freq_dim;
    GaugedDistribution dist;
    dist.manifold = build_rule(N, sym->sphere_level);
    dist.ball_radial_nodes = sym->ball_radial_nodes;
    const bool vanishing = diagonal_phase_vanishes(*sym, dist.manifold);
    FrequencyFunction freq;
    if (!vanishing && diagonal_phase_uniform(*sym, dist.manifold)) {
        freq = [sym](Span nu) { return diag_phase(*sym, sym->base.front().x, nu); };
    }

    for (std::size_t i = 0; i < sym->terms.size(); ++i) {
        const auto& t = sym->terms[i];
        if (vanishing) {
            LogHomogeneousTerm lt;
            lt.degree = t.degree;
            lt.log_order = t.log_order;
            lt.extends_into_ball = t.extends_into_ball;
            for (std::size_t n = 0; n < t.jet.size(); ++n) {
                lt.angular_jet.push_back([sym, i, n](Span nu) {
                    const auto& f = sym->terms[i].jet[n];
                    return base_sum(*sym, [&](const BasePoint& b) { return f(b.x, b.x, nu); });
                });
            }
            dist.terms.push_back(std::move(lt));
            continue;
        }
        if (t.extends_into_ball || !(t.degree.real() < -N))
            throw RequiresStatphaseError("term " + std::to_string(i) +
                                         " has a non-vanishing diagonal phase and is not integrable at infinity");
        OscillatoryTerm ot;
        ot.degree = t.degree;
        ot.log_order = t.log_order;
        ot.frequency = freq;
        for (std::size_t n = 0; n < t.jet.size(); ++n) {
            ot.jet.push_back([sym, i, n](double r, Span nu) {
                const auto& f = sym->terms[i].jet[n];
                return base_sum(*sym, [&](const BasePoint& b) {
                    return std::exp(Complex(0.0, r * diag_phase(*sym, b.x, nu))) * f(b.x, b.x, nu);
                });
            });
        }
        dist.oscillatory_terms.push_back(std::move(ot));
    }

    for (std::size_t n = 0; n < sym->remainder_jet.size(); ++n) {
        dist.remainder_jet.push_back([sym, n](double r, Span nu) {
            Vec xi(nu.begin(), nu.end());
            for (auto& c : xi) c *= r;
            const auto& f = sym->remainder_jet[n];
            return base_sum(*sym, [&](const BasePoint& b) {
                return std::exp(Complex(0.0, r * diag_phase(*sym, b.x, nu))) * f(b.x, b.x, xi);
            });
        });
    }
    dist.remainder_frequency = freq;
    for (std::size_t n = 0; n < sym->ball_jet.size(); ++n) {
        dist.unit_ball_jet.push_back([sym, n](Span xi) {
            const auto& f = sym->ball_jet[n];
            return base_sum(*sym, [&](const BasePoint& b) {
                return std::exp(Complex(0.0, diag_phase(*sym, b.x, xi))) * f(b.x, b.x, xi);
            });
        });
    }
    return dist;
}

LaurentSeries zeta_laurent_fio(const FioSymbol& sym, int K, ZetaDiagnostics* diag) {
    return zeta_laurent(trace_distribution(sym), K, diag);
}

Complex zeta_eval_fio(const FioSymbol& sym, Complex z, ZetaDiagnostics* diag) {
    return zeta_eval(trace_distribution(sym), z, diag);
}

Complex residue_trace(const FioSymbol& sym) {
    for (const auto& t : sym.terms)
        if (t.log_order != 0)
            throw DomainError("residue_trace needs a poly-homogeneous amplitude; use extract_leading on the series");
    GaugedDistribution dist = trace_distribution(sym);
    std::vector<Complex> parts;
    for (const auto& t : dist.terms) {
        // extending terms have no pole: their lower and upper Mellin pieces cancel
        if (t.extends_into_ball || !is_critical(t, dist.dim_m())) continue;
        parts.push_back(residue_term(t, 0, dist.manifold));
    }
    return -pairwise_sum(parts);
}

Complex kv_density(const FioSymbol& sym, Span x) {
    GaugedDistribution dist = trace_distribution(at_point(sym, x));
    require_no_critical(dist, "kv_density");
    const int dimM = dist.dim_m();
    std::vector<Complex> parts;
    if (!dist.unit_ball_jet.empty()) parts.push_back(unit_ball_integral(dist, dist.unit_ball_jet[0]));
    if (!dist.remainder_jet.empty())
        parts.push_back(outer_region_integral(dist, dist.remainder_jet[0], dist.remainder_frequency));
    for (const auto& t : dist.oscillatory_terms) {
        const auto& B = t.jet[0];
        parts.push_back(outer_region_integral(
            dist,
            [&](double r, Span nu) { return B(r, nu) * std::pow(r, t.degree) * std::pow(std::log(r), t.log_order); },
            t.frequency));
    }
    for (const auto& t : dist.terms) {
        Complex res = residue_term(t, 0, dist.manifold);
        Complex a = static_cast<double>(dimM) + 1.0 + t.degree;
        if (t.extends_into_ball) parts.push_back(lower_mellin(a, t.log_order) * res);
        parts.push_back(radial_coefficient(t.degree, t.log_order, dimM, 0.0) * res);
    }
    return pairwise_sum(parts);
}

Complex kv_trace(const FioSymbol& sym) {
    check_symbol(sym);
    std::vector<Complex> v;
    for (const auto& b : sym.base) v.push_back(b.weight * kv_density(sym, b.x));
    return pairwise_sum(v);
}

Complex kv_trace_vanishing_phase(const FioSymbol& sym, int N0) {
    GaugedDistribution dist = trace_distribution(sym);
    if (!diagonal_phase_vanishes(sym, dist.manifold)) throw DomainError("phase does not vanish on the diagonal");
    const int N = sym.freq_dim;
    const int dimM = dist.dim_m();
    const int n = static_cast<int>(dist.terms.size());
    if (N0 < 0 || N0 > n) throw DomainError("N0 out of range");
    for (int i = N0; i < n; ++i)
        if (!(dist.terms[i].degree.real() < -N))
            throw DomainError("terms past N0 must have Re(d) < -N");
    require_no_critical(dist, "kv_trace_vanishing_phase");

    std::vector<Complex> parts;
    if (!dist.unit_ball_jet.empty()) parts.push_back(unit_ball_integral(dist, dist.unit_ball_jet[0]));
    std::vector<Complex> res(n);
    for (int i = 0; i < n; ++i) res[i] = residue_term(dist.terms[i], 0, dist.manifold);
    for (int i = 0; i < n; ++i) {
        const auto& t = dist.terms[i];
        Complex a = static_cast<double>(dimM) + 1.0 + t.degree;
        if (t.extends_into_ball) parts.push_back(lower_mellin(a, t.log_order) * res[i]);
        if (i < N0) parts.push_back(radial_coefficient(t.degree, t.log_order, dimM, 0.0) * res[i]);
    }
    // a_0 plus the unsubtracted terms, integrated numerically on |xi| >= 1
    RadialFunction outer = [&](double r, Span nu) {
        Complex v = dist.remainder_jet.empty() ? Complex(0.0) : dist.remainder_jet[0](r, nu);
        double lr = std::log(r);
        for (int i = N0; i < n; ++i) {
            const auto& t = dist.terms[i];
            v += std::pow(r, t.degree) * std::pow(lr, t.log_order) * t.angular_jet[0](nu);
        }
        return v;
    };
    parts.push_back(outer_region_integral(dist, outer, FrequencyFunction{}));
    return pairwise_sum(parts);
}

Complex mollified_radial_coefficient(Complex d, int l, int dimM, Complex z, double h) {
    if (!(h > 0.0)) throw DomainError("mollification parameter must be positive");
    if (l < 0) throw DomainError("log order must be nonnegative");
    Complex a = static_cast<double>(dimM) + d + z;
    auto f = [&](double r) {
        double u = h + r;
        return std::pow(Complex(u), a) * std::pow(std::log(u), l);
    };
    return integrate_adaptive(f, 0.0, 1.0, 1e-15, 1e-14).value;
}

Complex zeta_eval_mollified(const FioSymbol& sym, Complex z, double h) {
    GaugedDistribution dist = trace_distribution(sym);
    std::vector<Complex> parts{zeta_eval(dist, z)};
    const int dimM = dist.dim_m();
    for (const auto& t : dist.terms) {
        if (!t.extends_into_ball) continue;
        Complex res = 0.0, zn = 1.0;
        for (const auto& A : t.angular_jet) {
            res += zn * sphere_integral(A, dist.manifold);
            zn *= z;
        }
        Complex c = radial_coefficient(t.degree, t.log_order, dimM, z);
        parts.push_back((mollified_radial_coefficient(t.degree, t.log_order, dimM, z, h) + c) * res);
    }
    return pairwise_sum(parts);
}

MollificationResult mollification_limit(const MollifiedFamily& fam) {
    const std::size_t n = fam.h.size();
    if (n < 4 || fam.values.size() != n) throw ExtrapolationError("need at least four (h, value) pairs");
    for (std::size_t k = 0; k < n; ++k)
        if (!(fam.h[k] > 0.0) || (k > 0 && !(fam.h[k] < fam.h[k - 1])))
            throw ExtrapolationError("h must be positive and strictly decreasing");
    const double q = fam.h[1] / fam.h[0];
    for (std::size_t k = 1; k + 1 < n; ++k)
        if (std::abs(fam.h[k + 1] / fam.h[k] - q) > 1e-9 * q)
            throw ExtrapolationError("h must decrease geometrically");

    MollificationResult out;
    out.table.push_back(fam.values);
    double scale = 0.0;
    for (auto v : fam.values) scale = std::max(scale, std::abs(v));
    bool constant = true;
    for (auto v : fam.values) constant = constant && std::abs(v - fam.values[0]) <= 1e-15 * std::max(scale, 1e-300);
    if (constant) {
        out.target = fam.values.back();
        return out;
    }

    // The leading order p0 is read off the first column and snapped to a nearby
    // multiple of 1/2; later columns assume the error expands in powers of h^{p0}.
    const auto& col0 = out.table[0];
    double d1 = std::abs(col0[n - 2] - col0[n - 3]);
    double d2 = std::abs(col0[n - 1] - col0[n - 2]);
    if (d2 <= 1e-14 * scale) {
        out.target = col0.back();
        return out;
    }
    for (std::size_t k = 2; k < n; ++k)
        if (!(std::abs(col0[k] - col0[k - 1]) < std::abs(col0[k - 1] - col0[k - 2])))
            throw ExtrapolationError("mollified values do not settle as h decreases");
    double p0 = std::log(d1 / d2) / std::log(1.0 / q);
    if (!std::isfinite(p0) || p0 <= 0.0) throw ExtrapolationError("Richardson order estimate is not positive");
    double snap = std::round(2.0 * p0) / 2.0;
    if (snap > 0.0 && std::abs(p0 - snap) < 0.15) p0 = snap;

    double p = p0;
    while (out.table.back().size() > 1) {
        const auto& col = out.table.back();
        double f = std::pow(q, -p) - 1.0;
        std::vector<Complex> next;
        for (std::size_t k = 1; k < col.size(); ++k) next.push_back(col[k] + (col[k] - col[k - 1]) / f);
        out.orders.push_back(p);
        out.table.push_back(std::move(next));
        p += p0;
    }
    out.target = out.table.back().back();
    return out;
}

double mollification_proxy(Complex d, int l, Complex z, double h) {
    double s = 0.0;
    for (int j = 0; j <= l; ++j) {
        Complex arg = static_cast<double>(l - j) - d - z;
        if (std::abs(arg - 1.0) < 1e-12)
            s += std::abs(std::pow(Complex(h), -arg));  // both Hurwitz values share the pole
        else
            s += std::abs(hurwitz_zeta(arg, h) - hurwitz_zeta(arg, 1.0 + h));
    }
    return l * s;
}

}  // namespace zetafio
