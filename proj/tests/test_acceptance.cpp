#include <cstdio>
#include <cstdlib>

#include "zetafio/validation.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = zetafio::kDefaultSeed;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
    int failed = 0;
    double total = 0.0;
    for (int id = 1; id <= zetafio::kCriterionCount; ++id) {
        auto r = zetafio::run_criterion(id, seed);
        std::printf("%s %2d %-38s %7.3f s  %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                    r.detail.c_str());
        std::fflush(stdout);
        failed += !r.pass;
        total += r.seconds;
    }
    std::printf("%d/%d criteria passed in %.2f s\n", zetafio::kCriterionCount - failed, zetafio::kCriterionCount,
                total);
    return failed ? 1 : 0;
}
