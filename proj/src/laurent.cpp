#include "zetafio/laurent.hpp"

#include <algorithm>
#include <cmath>

namespace zetafio {

namespace {

void require_same_center(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.center() != b.center()) throw DomainError("Laurent series centers differ");
}

}  // namespace

LaurentSeries::LaurentSeries(Complex center, int min_order, std::vector<Complex> coeffs)
    : center_(center), min_order_(min_order), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("Laurent series needs at least one coefficient");
}

LaurentSeries LaurentSeries::monomial(Complex c, int order, int trunc_order, Complex center) {
    int lo = std::min(order, trunc_order);
    std::vector<Complex> v(trunc_order - lo + 1, Complex(0.0));
    if (order <= trunc_order) v[order - lo] = c;
    return LaurentSeries(center, lo, std::move(v));
}

LaurentSeries LaurentSeries::constant(Complex c, int trunc_order) {
    return monomial(c, 0, trunc_order);
}

Complex LaurentSeries::coeff(int order) const {
    if (order < min_order_ || order > trunc_order()) return 0.0;
    return coeffs_[order - min_order_];
}

LaurentSeries LaurentSeries::normalized(double eps) const {
    double scale = 0.0;
    for (auto c : coeffs_) scale = std::max(scale, std::abs(c));
    std::size_t k = 0;
    while (k + 1 < coeffs_.size() && std::abs(coeffs_[k]) <= eps * scale) ++k;
    return LaurentSeries(center_, min_order_ + static_cast<int>(k),
                         std::vector<Complex>(coeffs_.begin() + k, coeffs_.end()));
}

LaurentSeries LaurentSeries::truncated(int t) const {
    if (t >= trunc_order()) return *this;
    if (t < min_order_) return LaurentSeries(center_, t, {Complex(0.0)});
    return LaurentSeries(center_, min_order_,
                         std::vector<Complex>(coeffs_.begin(), coeffs_.begin() + (t - min_order_ + 1)));
}

Complex LaurentSeries::evaluate(Complex z) const {
    Complex w = z - center_;
    Complex acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * w + *it;
    if (min_order_ != 0) acc *= std::pow(w, min_order_);
    return acc;
}

LaurentSeries LaurentSeries::scaled(Complex s) const {
    auto v = coeffs_;
    for (auto& c : v) c *= s;
    return LaurentSeries(center_, min_order_, std::move(v));
}

LaurentSeries series_add(const LaurentSeries& a, const LaurentSeries& b) {
    require_same_center(a, b);
    int lo = std::min(a.min_order(), b.min_order());
    int hi = std::min(a.trunc_order(), b.trunc_order());
    if (hi < lo) hi = lo;
    std::vector<Complex> v(hi - lo + 1);
    for (int k = lo; k <= hi; ++k) v[k - lo] = a.coeff(k) + b.coeff(k);
    return LaurentSeries(a.center(), lo, std::move(v));
}

LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b) {
    require_same_center(a, b);
    int lo = a.min_order() + b.min_order();
    int hi = std::min(a.trunc_order() + b.min_order(), b.trunc_order() + a.min_order());
    std::vector<Complex> v(hi - lo + 1, Complex(0.0));
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    for (std::size_t i = 0; i < ca.size(); ++i) {
        for (std::size_t j = 0; j < cb.size(); ++j) {
            std::size_t k = i + j;
            if (k >= v.size()) break;
            v[k] += ca[i] * cb[j];
        }
    }
    return LaurentSeries(a.center(), lo, std::move(v));
}

LeadingData extract_leading(const LaurentSeries& a, double eps) {
    double scale = 0.0;
    for (auto c : a.coeffs()) scale = std::max(scale, std::abs(c));
    if (scale == 0.0) throw DomainError("series identically zero at truncation order");
    LeadingData out{};
    bool found = false;
    for (int k = a.min_order(); k <= a.trunc_order(); ++k) {
        if (std::abs(a.coeff(k)) > eps * scale) {
            out.oilc = k;
            out.ilc = a.coeff(k);
            found = true;
            break;
        }
    }
    if (!found) throw DomainError("series identically zero at truncation order");
    out.residue = a.coeff(-1);
    out.const_term = a.coeff(0);
    return out;
}

}  // namespace zetafio
