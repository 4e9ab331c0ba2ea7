#include "zetafio/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace zetafio {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,      -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6,  1.5056327351493116e-7};
constexpr double kLanczosG = 7.0;

// B_{2j} for j = 0..11
constexpr std::array<double, 12> kBernoulli = {
    1.0,           1.0 / 6,          -1.0 / 30,        1.0 / 42,          -1.0 / 30,
    5.0 / 66,      -691.0 / 2730,    7.0 / 6,          -3617.0 / 510,     43867.0 / 798,
    -174611.0 / 330, 854513.0 / 138};

double sin_pi_real(double x) {
    double r = std::remainder(x, 2.0);  // in [-1, 1]
    if (r == std::round(r)) return 0.0;
    if (r == 0.5) return 1.0;
    if (r == -0.5) return -1.0;
    return std::sin(kPi * r);
}

double cos_pi_real(double x) {
    double r = std::remainder(x, 2.0);
    if (std::abs(r) == 0.5) return 0.0;
    if (r == 0.0) return 1.0;
    if (std::abs(r) == 1.0) return -1.0;
    return std::cos(kPi * r);
}

Complex cos_pi(Complex z) {
    double x = z.real(), y = z.imag();
    return {cos_pi_real(x) * std::cosh(kPi * y), -sin_pi_real(x) * std::sinh(kPi * y)};
}

// log Gamma for Re z >= 0.5 (Lanczos)
Complex log_gamma_right(Complex z) {
    Complex zm = z - 1.0;
    Complex a = kLanczos[0];
    for (int k = 1; k < 9; ++k) a += kLanczos[k] / (zm + static_cast<double>(k));
    Complex t = zm + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * kPi) + (zm + 0.5) * std::log(t) - t + std::log(a);
}

Complex reciprocal_gamma(Complex z) {
    if (nearest_nonpositive_integer(z, 0.0) <= 0) return 0.0;
    return 1.0 / gamma(z);
}

Complex hurwitz_euler_maclaurin(Complex s, double a) {
    int K = std::max(15, static_cast<int>(std::ceil(std::abs(s.imag()))));
    Complex sum = 0.0;
    for (int k = K - 1; k >= 0; --k) sum += std::pow(k + a, -s);
    double n = K + a;
    Complex npow = std::pow(n, -s);
    sum += n * npow / (s - 1.0) + 0.5 * npow;
    Complex poch = s;
    Complex term = npow / n;
    double fact = 2.0;  // (2j)!
    for (int j = 1; j <= 10; ++j) {
        sum += kBernoulli[j] / fact * poch * term;
        poch *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
        term /= n * n;
        fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    }
    return sum;
}

// Hurwitz's formula through the periodic zeta function, for Re s well below 0.
Complex hurwitz_periodic(Complex sig, double a) {
    int m = static_cast<int>(std::ceil(a)) - 1;
    double ap = a - m;
    Complex s = 1.0 - sig;
    double rs = s.real();
    long terms = static_cast<long>(std::pow(1e-17 * (rs - 1.0), -1.0 / (rs - 1.0))) + 2;
    terms = std::clamp<long>(terms, 64, 2000000);
    Complex f1 = 0.0, f2 = 0.0;
    for (long n = terms; n >= 1; --n) {
        double ph = 2.0 * kPi * std::remainder(n * ap, 1.0);
        Complex p = std::pow(static_cast<double>(n), -s);
        f1 += std::polar(1.0, ph) * p;
        f2 += std::polar(1.0, -ph) * p;
    }
    Complex v = gamma(s) * std::pow(2.0 * kPi, -s) *
                (std::exp(-kI * kPi * s / 2.0) * f1 + std::exp(kI * kPi * s / 2.0) * f2);
    for (int k = 0; k < m; ++k) v -= std::pow(ap + k, -sig);
    return v;
}

}  // namespace

int nearest_nonpositive_integer(Complex z, double tol) {
    if (std::abs(z.imag()) > tol) return 1;
    double r = std::round(z.real());
    if (r > 0.0 || std::abs(z.real() - r) > tol) return 1;
    return static_cast<int>(r);
}

Complex sin_pi(Complex z) {
    double x = z.real(), y = z.imag();
    return {sin_pi_real(x) * std::cosh(kPi * y), cos_pi_real(x) * std::sinh(kPi * y)};
}

Complex log_gamma(Complex z) {
    if (z.real() >= 0.5) return log_gamma_right(z);
    return std::log(kPi) - std::log(sin_pi(z)) - log_gamma_right(1.0 - z);
}

Complex gamma(Complex z) {
    int n = nearest_nonpositive_integer(z, 0.0);
    if (n <= 0) {
        double fact = 1.0;
        for (int k = 2; k <= -n; ++k) fact *= k;
        throw PoleError("gamma pole at " + std::to_string(n), 1, ((-n) % 2 ? -1.0 : 1.0) / fact);
    }
    if (z.real() >= 0.5) return std::exp(log_gamma_right(z));
    return kPi / (sin_pi(z) * std::exp(log_gamma_right(1.0 - z)));
}

Complex upper_incomplete_gamma(Complex s, double x) {
    if (x < 0.0) throw DomainError("upper incomplete gamma needs x >= 0");
    if (x == 0.0) return gamma(s);
    // Entire in s for x > 0; near the poles of gamma average over a small circle.
    int n = std::round(s.real()) <= 0 ? static_cast<int>(std::round(s.real())) : 1;
    if (n <= 0 && std::abs(s - static_cast<double>(n)) < 0.05 && x < 1.5) {
        const int m = 32;
        const double rho = 0.1;
        Complex acc = 0.0;
        for (int k = 0; k < m; ++k) acc += upper_incomplete_gamma(s + std::polar(rho, 2.0 * kPi * (k + 0.5) / m), x);
        return acc / static_cast<double>(m);
    }
    if (x < 1.5) {
        // Gamma(s) - x^s sum (-x)^k / (k! (s + k))
        Complex sum = 0.0;
        double term = 1.0;
        for (int k = 0; k < 200; ++k) {
            Complex add = term / (s + static_cast<double>(k));
            sum += add;
            if (std::abs(add) < 1e-18 * std::abs(sum) && k > 3) break;
            term *= -x / (k + 1);
        }
        return gamma(s) - std::pow(x, s) * sum;
    }
    // Legendre continued fraction, modified Lentz
    const double tiny = 1e-300;
    Complex b = x + 1.0 - s;
    Complex c = 1.0 / tiny;
    Complex d = 1.0 / b;
    Complex h = d;
    for (int i = 1; i < 5000; ++i) {
        Complex an = -static_cast<double>(i) * (static_cast<double>(i) - s);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        Complex del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return std::exp(-x + s * std::log(x)) * h;
}

Complex hurwitz_zeta(Complex s, double a) {
    if (!(a > 0.0)) throw DomainError("hurwitz zeta needs a > 0");
    if (s == Complex(1.0, 0.0)) throw PoleError("hurwitz zeta pole at s = 1", 1, 1.0);
    if (s.real() < -4.0) return hurwitz_periodic(s, a);
    return hurwitz_euler_maclaurin(s, a);
}

Complex riemann_zeta(Complex s) { return hurwitz_zeta(s, 1.0); }

Complex riemann_zeta_reflected(Complex s) {
    if (s == Complex(1.0, 0.0)) throw PoleError("riemann zeta pole at s = 1", 1, 1.0);
    if (s.real() >= 0.5) return riemann_zeta(s);
    return 2.0 * std::pow(2.0 * kPi, s - 1.0) * sin_pi(s / 2.0) * gamma(1.0 - s) *
           hurwitz_euler_maclaurin(1.0 - s, 1.0);
}

Complex fourier_abs_power(Complex alpha, double x) {
    if (x == 0.0) throw DomainError("fourier_abs_power needs x != 0");
    if (std::abs(alpha + 1.0) < 1e-14) throw DomainError("alpha = -1 is the excluded critical degree");
    Complex scale = std::pow(std::abs(2.0 * kPi * x), -(alpha + 1.0));
    if (alpha.real() > -1.0) return 2.0 * sin_pi(-alpha / 2.0) * gamma(alpha + 1.0) * scale;
    // reflected: 2 sin(-pi a/2) Gamma(a+1) = pi / (cos(pi a/2) Gamma(-a))
    Complex c = cos_pi(alpha / 2.0);
    if (c == Complex(0.0))
        throw PoleError("fourier_abs_power pole at odd negative alpha", 1, 0.0);
    return kPi * reciprocal_gamma(-alpha) / c * scale;
}

Complex radial_inverse_power_integral(double theta, int n) {
    if (theta == 0.0) throw DomainError("radial_inverse_power_integral undefined at theta = 0");
    if (n < 1) throw DomainError("radial_inverse_power_integral needs n >= 1");
    double fact = 1.0;
    for (int k = 2; k <= n - 1; ++k) fact *= k;
    double sgn = theta > 0 ? 1.0 : -1.0;
    return -kI * kPi * std::pow(Complex(0.0, -2.0 * kPi * theta), n - 1) * sgn / fact;
}

}  // namespace zetafio
