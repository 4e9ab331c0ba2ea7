#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"
#include "zetafio/laurent.hpp"
#include "zetafio/validation.hpp"

namespace zetafio::cli {

using Json = nlohmann::json;

// malformed problem files; maps to exit code 2
class SchemaError : public Error {
public:
    using Error::Error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitSchema = 2;
inline constexpr int kExitCompute = 3;

struct RunOptions {
    std::string format;  // "json" or "csv"; empty means whatever the problem file asks for
    int level = 0;       // sphere level override; 0 keeps the file value
    std::uint64_t seed = kDefaultSeed;
    bool timing = false;  // elapsed seconds make the output nondeterministic, so they are opt-in
};

struct RunOutcome {
    int exit_code = kExitOk;
    std::string output;  // JSON or CSV text
    std::string error;
};

Json complex_to_json(Complex c);
Complex complex_from_json(const Json& j);
Json laurent_to_json(const LaurentSeries& s);
LaurentSeries laurent_from_json(const Json& j);

std::uint64_t fnv1a(std::string_view bytes);

RunOutcome run_problem(const Json& problem, const RunOptions& opt);

// output path named in the file, if any
std::string output_path(const Json& problem);

}  // namespace zetafio::cli
