#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "zetafio/error.hpp"

namespace zetafio {

void set_num_threads(int n);
int num_threads();

// Evaluates f(0..n-1), possibly concurrently; results are returned in index order.
std::vector<Complex> parallel_map(std::size_t n, const std::function<Complex(std::size_t)>& f);

// Fixed-shape pairwise summation, so the result does not depend on thread count.
Complex pairwise_sum(std::span<const Complex> v);
double pairwise_sum(std::span<const double> v);

}  // namespace zetafio
