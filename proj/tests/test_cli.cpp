#include <cmath>

#include "doctest.h"
#include "zetafio/cli.hpp"

using namespace zetafio;
using cli::Json;

namespace {

Json parse_output(const cli::RunOutcome& r) { return Json::parse(r.output); }

}  // namespace

TEST_CASE("fnv1a reference digests") {
    CHECK(cli::fnv1a("") == 0xcbf29ce484222325ull);
    CHECK(cli::fnv1a("a") == 0xaf63dc4c8601ec8cull);
    CHECK(cli::fnv1a("foobar") == 0x85944171f73967e8ull);
}

TEST_CASE("LaurentSeries JSON round trip") {
    LaurentSeries s(Complex(0.5, -1.0), -2, {Complex(1.0, 2.0), 0.0, Complex(-3.25, 0.125)});
    Json j = cli::laurent_to_json(s);
    CHECK(j["min_order"] == -2);
    CHECK(j["center"] == Json::array({0.5, -1.0}));
    LaurentSeries back = cli::laurent_from_json(j);
    CHECK(back.min_order() == -2);
    CHECK(back.center() == s.center());
    for (int k = -2; k <= 0; ++k) CHECK(back.coeff(k) == s.coeff(k));
    CHECK_THROWS_AS(cli::laurent_from_json(Json{{"min_order", 0}}), cli::SchemaError);
}

TEST_CASE("residue of the circle model") {
    Json p = {{"kind", "model"}, {"request", "residue"}, {"name", "fractional_laplacian_circle"}, {"alpha", -1}};
    auto r = cli::run_problem(p, {});
    REQUIRE(r.exit_code == cli::kExitOk);
    Json out = parse_output(r);
    CHECK(out["request"] == "residue");
    CHECK(std::abs(out["value"][0].get<double>() + 2.0) < 1e-12);
    CHECK(std::abs(out["value"][1].get<double>()) < 1e-12);
    CHECK(out["inputs_digest"].get<std::string>().size() == 16);
}

TEST_CASE("heat Laurent series has no poles") {
    Json p = {{"kind", "model"}, {"request", "laurent"}, {"name", "heat"}, {"t", 1.0}, {"N", 1}, {"K", 2}};
    auto r = cli::run_problem(p, {});
    REQUIRE(r.exit_code == cli::kExitOk);
    LaurentSeries s = cli::laurent_from_json(parse_output(r)["value"]);
    CHECK(s.min_order() == 0);
    CHECK(std::abs(s.coeff(0) - 1.7726372048266525) < 1e-8);
}

TEST_CASE("exit codes") {
    CHECK(cli::run_problem(Json::array(), {}).exit_code == cli::kExitSchema);
    CHECK(cli::run_problem({{"kind", "model"}}, {}).exit_code == cli::kExitSchema);
    CHECK(cli::run_problem({{"kind", "model"}, {"request", "residue"}, {"name", "nope"}}, {}).exit_code ==
          cli::kExitSchema);
    CHECK(cli::run_problem({{"kind", "distribution"}, {"request", "eval"}, {"remainder", "no_such_builtin"}}, {})
              .exit_code == cli::kExitSchema);
    Json pole = {{"kind", "model"}, {"request", "wave"}, {"name", "wave_flat_torus"},
                 {"t", 2.0 * M_PI}, {"lattice", Json::array({Json::array({2.0 * M_PI})})}};
    auto r = cli::run_problem(pole, {});
    CHECK(r.exit_code == cli::kExitCompute);
    CHECK(r.error.find("pole") != std::string::npos);
}

TEST_CASE("evaluation at a pole falls back to the Laurent series with a warning") {
    Json p = {{"kind", "model"}, {"request", "eval"}, {"name", "fractional_laplacian_circle"}, {"alpha", -1}, {"z", 0}};
    auto r = cli::run_problem(p, {});
    REQUIRE(r.exit_code == cli::kExitOk);
    Json out = parse_output(r);
    CHECK(out["diagnostics"]["warnings"].size() == 1);
    LaurentSeries s = cli::laurent_from_json(out["value"]);
    CHECK(std::abs(s.coeff(-1) + 2.0) < 1e-10);
}

TEST_CASE("distribution problems and determinism") {
    Json p = Json::parse(R"({"kind": "distribution", "request": "laurent", "dimM": 1, "K": 2,
        "terms": [{"d": [-2, 0], "l": 0, "jet": {"builtin": "constant", "scale": 0.5}}],
        "remainder": "exp_decay", "unit_ball": "constant"})");
    auto a = cli::run_problem(p, {});
    auto b = cli::run_problem(p, {});
    REQUIRE(a.exit_code == cli::kExitOk);
    CHECK(a.output == b.output);
    LaurentSeries s = cli::laurent_from_json(parse_output(a)["value"]);
    // residue of 0.5 |xi|^{-2} over S^1 is -2 pi * 0.5
    CHECK(std::abs(s.coeff(-1) + M_PI) < 1e-12);
    cli::RunOptions lv;
    lv.level = 3;
    CHECK(cli::run_problem(p, lv).output != a.output);  // digest records the level
}

TEST_CASE("csv sweep") {
    Json p = {{"kind", "model"}, {"request", "heat"}, {"name", "heat"}, {"N", 1}, {"t", 1.0},
              {"sweep", {{"parameter", "t"}, {"values", {0.5, 1.0}}}}};
    cli::RunOptions opt;
    opt.format = "csv";
    auto r = cli::run_problem(p, opt);
    REQUIRE(r.exit_code == cli::kExitOk);
    CHECK(r.output.rfind("parameter,re,im\n0.5,", 0) == 0);
    CHECK(r.output.find("\n1,1.77263720482665") != std::string::npos);
}

TEST_CASE("mollify request reports the extrapolation table") {
    Json p = {{"kind", "model"}, {"request", "mollify"}, {"name", "shifted_fractional"}, {"alpha", 0.5}};
    auto r = cli::run_problem(p, {});
    REQUIRE(r.exit_code == cli::kExitOk);
    Json out = parse_output(r);
    CHECK(out["diagnostics"]["extrapolation_table"].size() == 4);
    CHECK(std::abs(out["value"][0].get<double>() - (-0.2078862249773545 * 2)) < 1e-4);
}
