#include "zetafio/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace zetafio {

namespace {
std::atomic<int> g_threads{1};
thread_local bool t_in_worker = false;
}

void set_num_threads(int n) { g_threads = std::max(1, n); }
int num_threads() { return g_threads; }

std::vector<Complex> parallel_map(std::size_t n, const std::function<Complex(std::size_t)>& f) {
    std::vector<Complex> out(n);
    int t = std::min<int>(g_threads, static_cast<int>(n));
    if (t <= 1 || n < 64 || t_in_worker) {
        for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
        return out;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(t);
    std::size_t chunk = (n + t - 1) / t;
    for (int k = 0; k < t; ++k) {
        pool.emplace_back([&, k] {
            t_in_worker = true;
            try {
                std::size_t lo = k * chunk, hi = std::min(n, lo + chunk);
                for (std::size_t i = lo; i < hi; ++i) out[i] = f(i);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

template <class T>
static T pairwise(std::span<const T> v) {
    if (v.empty()) return T(0);
    if (v.size() <= 8) {
        T s = v[0];
        for (std::size_t i = 1; i < v.size(); ++i) s += v[i];
        return s;
    }
    std::size_t h = v.size() / 2;
    return pairwise(v.subspan(0, h)) + pairwise(v.subspan(h));
}

Complex pairwise_sum(std::span<const Complex> v) { return pairwise(v); }
double pairwise_sum(std::span<const double> v) { return pairwise(v); }

}  // namespace zetafio
