#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "zetafio/cli.hpp"
#include "zetafio/parallel.hpp"

namespace zc = zetafio::cli;

int main(int argc, char** argv) {
    CLI::App app{"zeta-regularized traces of Fourier integral operators"};
    std::string problem_path, out_path, format;
    int threads = 0, level = 0;
    std::uint64_t seed = zetafio::kDefaultSeed;
    bool timing = false;
    app.add_option("--problem", problem_path, "problem file (JSON)")->envname("ZETAFIO_PROBLEM")->required();
    app.add_option("--out", out_path, "result file; defaults to the problem's output.path, then stdout")
        ->envname("ZETAFIO_OUT");
    app.add_option("--format", format, "json or csv")->envname("ZETAFIO_FORMAT")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--threads", threads, "worker threads (0 = hardware)")->envname("ZETAFIO_THREADS")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--level", level, "sphere quadrature level")->envname("ZETAFIO_LEVEL")->check(CLI::NonNegativeNumber);
    app.add_option("--seed", seed, "seed for the property checks of request=validate")->envname("ZETAFIO_SEED");
    app.add_flag("--timing", timing, "add elapsed seconds to the output")->envname("ZETAFIO_TIMING");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : zc::kExitSchema;
    }

    if (threads > 0) zetafio::set_num_threads(threads);

    zc::Json problem;
    {
        std::ifstream in(problem_path);
        if (!in) {
            std::fprintf(stderr, "error: cannot open %s\n", problem_path.c_str());
            return zc::kExitSchema;
        }
        try {
            problem = zc::Json::parse(in);
        } catch (const zc::Json::parse_error& e) {
            std::fprintf(stderr, "error: %s: %s\n", problem_path.c_str(), e.what());
            return zc::kExitSchema;
        }
    }

    zc::RunOptions opt;
    opt.format = format;
    opt.level = level;
    opt.seed = seed;
    opt.timing = timing;
    zc::RunOutcome res = zc::run_problem(problem, opt);

    if (!res.output.empty()) {
        std::string path = out_path.empty() ? zc::output_path(problem) : out_path;
        if (path.empty() || path == "-") {
            std::cout << res.output;
        } else {
            std::ofstream out(path, std::ios::binary);
            out << res.output;
            if (!out) {
                std::fprintf(stderr, "error: cannot write %s\n", path.c_str());
                return zc::kExitCompute;
            }
        }
    }
    if (!res.error.empty()) std::fprintf(stderr, "error: %s\n", res.error.c_str());
    return res.exit_code;
}
