#pragma once

#include <vector>

#include "zetafio/error.hpp"

namespace zetafio {

inline constexpr double kNormalizeEps = 1e-12;
inline constexpr int kDefaultTruncation = 8;

// Truncated Laurent expansion sum_k coeffs[k] (z - center)^(min_order + k),
// known exactly through (z - center)^trunc_order.
class LaurentSeries {
public:
    LaurentSeries() = default;
    LaurentSeries(Complex center, int min_order, std::vector<Complex> coeffs);

    static LaurentSeries monomial(Complex c, int order, int trunc_order, Complex center = 0.0);
    static LaurentSeries constant(Complex c, int trunc_order = kDefaultTruncation);

    Complex center() const { return center_; }
    int min_order() const { return min_order_; }
    int trunc_order() const { return min_order_ + static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }

    // zero outside [min_order, trunc_order]
    Complex coeff(int order) const;

    LaurentSeries normalized(double eps = kNormalizeEps) const;
    LaurentSeries truncated(int trunc_order) const;
    Complex evaluate(Complex z) const;
    LaurentSeries scaled(Complex s) const;

private:
    Complex center_{0.0};
    int min_order_ = 0;
    std::vector<Complex> coeffs_{Complex(0.0)};
};

LaurentSeries series_add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b);

struct LeadingData {
    int oilc;
    Complex ilc;
    Complex residue;
    Complex const_term;
};

LeadingData extract_leading(const LaurentSeries& a, double eps = kNormalizeEps);

}  // namespace zetafio
