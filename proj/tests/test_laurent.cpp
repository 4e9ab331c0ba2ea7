#include <random>

#include "doctest.h"
#include "zetafio/laurent.hpp"

using namespace zetafio;

namespace {

LaurentSeries poly(int min_order, std::vector<Complex> c) { return LaurentSeries(0.0, min_order, std::move(c)); }

double max_diff(const LaurentSeries& a, const LaurentSeries& b) {
    int lo = std::min(a.min_order(), b.min_order());
    int hi = std::min(a.trunc_order(), b.trunc_order());
    double m = 0.0;
    for (int k = lo; k <= hi; ++k) m = std::max(m, std::abs(a.coeff(k) - b.coeff(k)));
    return m;
}

LaurentSeries random_series(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> lo(-3, 1), len(3, 8);
    std::normal_distribution<double> g;
    int m = lo(rng), n = len(rng);
    std::vector<Complex> c(n);
    for (auto& x : c) x = {g(rng), g(rng)};
    c[0] += Complex(3.0, 0.0);
    return poly(m, c);
}

}  // namespace

TEST_CASE("series_add examples") {
    auto s = series_add(poly(-1, {1.0, 0.0}), poly(-1, {-1.0, 1.0})).normalized();
    CHECK(s.min_order() == 0);
    CHECK(std::abs(s.coeff(0) - 1.0) < 1e-15);

    auto t = series_add(poly(-2, {2.0, 0, 0, 0, 0}), poly(1, {3.0, 0.0}));
    CHECK(t.coeff(-2) == Complex(2.0));
    CHECK(t.coeff(1) == Complex(3.0));
    CHECK(t.coeff(0) == Complex(0.0));

    CHECK_THROWS_AS(series_add(LaurentSeries(0.0, 0, {1.0}), LaurentSeries(1.0, 0, {1.0})), DomainError);
}

TEST_CASE("series_mul examples") {
    auto a = series_mul(poly(-1, {1.0, 0, 0}), poly(1, {1.0, 0, 0}));
    CHECK(a.min_order() == 0);
    CHECK(a.coeff(0) == Complex(1.0));

    auto b = series_mul(poly(0, {1.0, 1.0, 0.0}), poly(0, {1.0, -1.0, 0.0}));
    CHECK(b.coeff(0) == Complex(1.0));
    CHECK(b.coeff(1) == Complex(0.0));
    CHECK(b.coeff(2) == Complex(-1.0));

    auto c = series_mul(poly(-1, {1.0, 1.0, 0.0, 0.0}), poly(-1, {1.0, 1.0, 0.0, 0.0}));
    CHECK(c.min_order() == -2);
    CHECK(c.coeff(-2) == Complex(1.0));
    CHECK(c.coeff(-1) == Complex(2.0));
    CHECK(c.coeff(0) == Complex(1.0));
}

TEST_CASE("extract_leading examples") {
    auto a = extract_leading(poly(-1, {-2.0, 5.0}));
    CHECK(a.oilc == -1);
    CHECK(a.ilc == Complex(-2.0));
    CHECK(a.residue == Complex(-2.0));
    CHECK(a.const_term == Complex(5.0));

    auto b = extract_leading(poly(0, {3.0, 1.0}));
    CHECK(b.oilc == 0);
    CHECK(b.ilc == Complex(3.0));
    CHECK(b.residue == Complex(0.0));
    CHECK(b.const_term == Complex(3.0));

    auto c = extract_leading(poly(-2, {0.5, 1.0, 0.0}));
    CHECK(c.oilc == -2);
    CHECK(c.ilc == Complex(0.5));
    CHECK(c.residue == Complex(1.0));
    CHECK(c.const_term == Complex(0.0));

    CHECK_THROWS_AS(extract_leading(poly(0, {0.0, 0.0})), DomainError);
}

TEST_CASE("evaluate and truncate") {
    auto s = poly(-1, {1.0, 2.0, 3.0});
    Complex z(0.3, -0.2);
    CHECK(std::abs(s.evaluate(z) - (1.0 / z + 2.0 + 3.0 * z)) < 1e-14);
    CHECK(s.truncated(0).trunc_order() == 0);
    CHECK(s.trunc_order() == 1);
}

TEST_CASE("commutativity, associativity, leading orders") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_series(rng), b = random_series(rng), c = random_series(rng);
        CHECK(max_diff(series_add(a, b), series_add(b, a)) < 1e-12);
        CHECK(max_diff(series_mul(a, b), series_mul(b, a)) < 1e-12);
        CHECK(max_diff(series_add(series_add(a, b), c), series_add(a, series_add(b, c))) < 1e-12);
        CHECK(max_diff(series_mul(series_mul(a, b), c), series_mul(a, series_mul(b, c))) < 1e-12);
        CHECK(extract_leading(series_mul(a, b)).oilc == extract_leading(a).oilc + extract_leading(b).oilc);
    }
}
