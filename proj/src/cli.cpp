#include "zetafio/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

#include "zetafio/models.hpp"
#include "zetafio/statphase.hpp"

namespace zetafio::cli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kDefaultLevel = 6;
constexpr int kDefaultK = 4;

[[noreturn]] void schema(const std::string& msg) { throw SchemaError(msg); }

const Json& need(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) schema(std::string("missing field '") + key + "'");
    return j.at(key);
}

double num(const Json& j, const char* what) {
    if (!j.is_number()) schema(std::string("'") + what + "' must be a number");
    return j.get<double>();
}

double num_or(const Json& j, const char* key, double dflt) { return j.contains(key) ? num(j.at(key), key) : dflt; }

int int_or(const Json& j, const char* key, int dflt) {
    if (!j.contains(key)) return dflt;
    if (!j.at(key).is_number_integer()) schema(std::string("'") + key + "' must be an integer");
    return j.at(key).get<int>();
}

Complex complex_or(const Json& j, const char* key, Complex dflt) {
    return j.contains(key) ? complex_from_json(j.at(key)) : dflt;
}

std::string str(const Json& j, const char* what) {
    if (!j.is_string()) schema(std::string("'") + what + "' must be a string");
    return j.get<std::string>();
}

// rows of the JSON array are matrix rows; columns generate the lattice
Eigen::MatrixXd lattice_basis(const Json& p) {
    if (p.contains("lattice")) {
        const Json& rows = p.at("lattice").is_object() ? need(p.at("lattice"), "basis") : p.at("lattice");
        if (!rows.is_array() || rows.empty()) schema("'lattice' must be a non-empty matrix");
        const int n = static_cast<int>(rows.size());
        Eigen::MatrixXd B(n, n);
        for (int i = 0; i < n; ++i) {
            if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n) schema("'lattice' must be square");
            for (int j = 0; j < n; ++j) B(i, j) = num(rows[i][j], "lattice entry");
        }
        return B;
    }
    const int N = int_or(p, "N", 1);
    if (N < 1) schema("'N' must be positive");
    return 2.0 * kPi * Eigen::MatrixXd::Identity(N, N);
}

// ---- builtin lookup ----

struct Ref {
    std::string name;
    double scale = 1.0;
};

Ref builtin_ref(const Json& j) {
    if (j.is_string()) return {j.get<std::string>(), 1.0};
    if (j.is_object() && j.contains("builtin")) return {str(j.at("builtin"), "builtin"), num_or(j, "scale", 1.0)};
    schema("expected a builtin name or {builtin, scale}");
}

SphereFunction nearest_node_table(const Json& j, int N) {
    const Json& nodes = need(j, "nodes");
    const Json& values = need(j, "values");
    if (!nodes.is_array() || !values.is_array() || nodes.size() != values.size() || nodes.empty())
        schema("tabulated jet needs equally long 'nodes' and 'values'");
    std::vector<Vec> pts;
    std::vector<Complex> vals;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!nodes[i].is_array() || static_cast<int>(nodes[i].size()) != N) schema("tabulated node has the wrong dimension");
        Vec v;
        for (const auto& c : nodes[i]) v.push_back(num(c, "node coordinate"));
        pts.push_back(std::move(v));
        vals.push_back(complex_from_json(values[i]));
    }
    return [pts, vals](std::span<const double> nu) {
        std::size_t best = 0;
        double bd = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < pts.size(); ++i) {
            double d = 0.0;
            for (std::size_t k = 0; k < nu.size(); ++k) d += (pts[i][k] - nu[k]) * (pts[i][k] - nu[k]);
            if (d < bd) {
                bd = d;
                best = i;
            }
        }
        return vals[best];
    };
}

SphereFunction angular(const Json& j, int N) {
    if (j.is_object() && j.contains("nodes")) return nearest_node_table(j, N);
    Ref r = builtin_ref(j);
    auto it = angular_builtins().find(r.name);
    if (it == angular_builtins().end()) schema("unknown angular builtin '" + r.name + "'");
    return it->second(r.scale);
}

RadialFunction radial(const Json& j, int N) {
    Ref r = builtin_ref(j);
    if (r.name == "zero") return [](double, Span) { return Complex(0.0); };
    auto it = radial_builtins().find(r.name);
    if (it == radial_builtins().end()) schema("unknown radial builtin '" + r.name + "'");
    return it->second(r.scale, N);
}

std::vector<SphereFunction> angular_jet(const Json& j, int N) {
    std::vector<SphereFunction> out;
    if (j.is_array())
        for (const auto& e : j) out.push_back(angular(e, N));
    else
        out.push_back(angular(j, N));
    if (out.empty()) schema("empty jet");
    return out;
}

std::vector<RadialFunction> radial_jet(const Json& j, int N) {
    std::vector<RadialFunction> out;
    if (j.is_array())
        for (const auto& e : j) out.push_back(radial(e, N));
    else
        out.push_back(radial(j, N));
    return out;
}

// inside the unit ball: zero, a constant, or a radial builtin evaluated at (|xi|, xi/|xi|)
BallFunction ball(const Json& j, int N) {
    Ref r = builtin_ref(j);
    if (r.name == "zero") return [](Span) { return Complex(0.0); };
    if (r.name == "constant") return [c = r.scale](Span) { return Complex(c); };
    RadialFunction f = radial(j, N);
    return [f](Span xi) {
        double n = 0.0;
        for (double c : xi) n += c * c;
        n = std::sqrt(n);
        Vec nu(xi.begin(), xi.end());
        if (n > 0.0)
            for (double& c : nu) c /= n;
        else
            nu[0] = 1.0;
        return f(n, nu);
    };
}

int level_of(const Json& p, const RunOptions& opt) {
    int lv = opt.level > 0 ? opt.level : int_or(p, "level", kDefaultLevel);
    if (lv < 1) schema("'level' must be positive");
    return lv;
}

GaugedDistribution parse_distribution(const Json& p, const RunOptions& opt) {
    const int dimM = int_or(p, "dimM", 0);
    if (dimM < 0 || dimM > 3) schema("'dimM' must be in 0..3");
    const int N = dimM + 1;
    GaugedDistribution g;
    g.manifold = build_rule(N, level_of(p, opt));
    if (p.contains("terms")) {
        if (!p.at("terms").is_array()) schema("'terms' must be an array");
        for (const auto& t : p.at("terms")) {
            LogHomogeneousTerm term;
            term.degree = complex_from_json(need(t, "d"));
            term.log_order = int_or(t, "l", 0);
            if (term.log_order < 0) schema("'l' must be non-negative");
            term.angular_jet = angular_jet(need(t, "jet"), N);
            term.extends_into_ball = t.value("extends_into_ball", false);
            g.terms.push_back(std::move(term));
        }
    }
    g.remainder_jet = radial_jet(p.value("remainder", Json("zero")), N);
    g.remainder_mellin = p.value("remainder_mellin", false);
    g.unit_ball_jet = {ball(p.value("unit_ball", Json("zero")), N)};
    return g;
}

Phase parse_phase(const Json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "psdo_identity_phase") return pseudodifferential_phase();
        schema("unknown phase '" + j.get<std::string>() + "'");
    }
    if (j.is_object() && j.contains("linear")) {
        Vec v;
        for (const auto& c : j.at("linear")) v.push_back(num(c, "linear phase direction"));
        return linear_phase([v](Span, Span) { return v; });
    }
    schema("phase must be a builtin name or {linear: [...]}");
}

AmplitudeFunction amplitude_from_sphere(SphereFunction f) {
    return [f](Span, Span, Span xi) {
        double n = 0.0;
        for (double c : xi) n += c * c;
        n = std::sqrt(n);
        Vec nu(xi.begin(), xi.end());
        for (double& c : nu) c /= n;
        return f(nu);
    };
}

AmplitudeFunction amplitude_from_radial(RadialFunction f) {
    return [f](Span, Span, Span xi) {
        double n = 0.0;
        for (double c : xi) n += c * c;
        n = std::sqrt(n);
        Vec nu(xi.begin(), xi.end());
        for (double& c : nu) c /= n;
        return f(n, nu);
    };
}

FioSymbol parse_fio(const Json& p, const RunOptions& opt) {
    FioSymbol s;
    s.freq_dim = int_or(p, "N", 1);
    if (s.freq_dim < 1 || s.freq_dim > 4) schema("'N' must be in 1..4");
    s.base_dim = int_or(p, "base_dim", 1);
    s.sphere_level = level_of(p, opt);
    s.phase = parse_phase(p.value("phase", Json("psdo_identity_phase")));
    if (p.contains("base")) {
        for (const auto& b : p.at("base")) {
            BasePoint bp;
            for (const auto& c : need(b, "x")) bp.x.push_back(num(c, "base point"));
            if (static_cast<int>(bp.x.size()) != s.base_dim) schema("base point has the wrong dimension");
            bp.weight = num_or(b, "weight", 1.0);
            s.base.push_back(std::move(bp));
        }
    } else {
        s.base = {BasePoint{Vec(s.base_dim, 0.0), 1.0}};
    }
    const int N = s.freq_dim;
    if (p.contains("terms")) {
        for (const auto& t : p.at("terms")) {
            AmplitudeTerm term;
            term.degree = complex_from_json(need(t, "d"));
            term.log_order = int_or(t, "l", 0);
            for (auto& f : angular_jet(need(t, "jet"), N)) term.jet.push_back(amplitude_from_sphere(f));
            term.extends_into_ball = t.value("extends_into_ball", false);
            s.terms.push_back(std::move(term));
        }
    }
    for (auto& f : radial_jet(p.value("remainder", Json("zero")), N)) s.remainder_jet.push_back(amplitude_from_radial(f));
    BallFunction b = ball(p.value("ball", Json("zero")), N);
    s.ball_jet = {[b](Span, Span, Span xi) { return b(xi); }};
    return s;
}

Json diagnostics_json(const ZetaDiagnostics& d) {
    Json j;
    j["critical_terms"] = d.critical;
    j["near_critical_terms"] = d.near_critical;
    j["cancelled_ball_terms"] = d.cancelled_ball_terms;
    j["max_tail_bound"] = d.max_tail_bound;
    j["max_cutoff"] = d.max_cutoff;
    j["max_panels"] = d.max_panels;
    return j;
}

Json mollify_json(const MollificationResult& r, const std::vector<double>& h) {
    Json tab = Json::array();
    for (const auto& col : r.table) {
        Json c = Json::array();
        for (Complex v : col) c.push_back(complex_to_json(v));
        tab.push_back(c);
    }
    return {{"h_schedule", h}, {"extrapolation_table", tab}, {"orders", r.orders}};
}

std::vector<double> h_schedule(const Json& p) {
    std::vector<double> h;
    if (p.contains("h_schedule"))
        for (const auto& v : p.at("h_schedule")) h.push_back(num(v, "h_schedule entry"));
    else
        h = {0.2, 0.1, 0.05, 0.025};
    if (h.size() < 2) schema("'h_schedule' needs at least two entries");
    return h;
}

struct Result {
    Json value;  // complex as [re, im], or a LaurentSeries object
    Json diagnostics = Json::object();
    bool all_pass = true;  // validate only
};

void warn(Result& r, const std::string& w) {
    if (!r.diagnostics.contains("warnings")) r.diagnostics["warnings"] = Json::array();
    r.diagnostics["warnings"].push_back(w);
}

// zeta_eval refuses to sit on a pole; report the Laurent data instead and flag it
template <class Eval, class Series>
void eval_or_pole(Result& r, Eval eval, Series series) {
    try {
        r.value = complex_to_json(eval());
    } catch (const NearPoleError& e) {
        r.value = laurent_to_json(series());
        warn(r, std::string("near_pole: ") + e.what());
    } catch (const PoleError& e) {
        r.value = laurent_to_json(series());
        warn(r, std::string("pole: ") + e.what());
    }
}

Result run_distribution(const std::string& request, const Json& p, const RunOptions& opt) {
    GaugedDistribution g = parse_distribution(p, opt);
    Result r;
    ZetaDiagnostics d;
    const int K = int_or(p, "K", kDefaultK);
    if (request == "eval") {
        Complex z = complex_or(p, "z", 0.0);
        eval_or_pole(r, [&] { return zeta_eval(g, z, &d); }, [&] { return zeta_laurent(g, K, &d); });
    } else if (request == "laurent") {
        r.value = laurent_to_json(zeta_laurent(g, K, &d));
    } else if (request == "residue") {
        r.value = complex_to_json(zeta_laurent(g, 1, &d).coeff(-1));
    } else if (request == "kv") {
        if (!critical_indices(g).empty()) throw PoleError("kv: the distribution has critical terms", 1, 0.0);
        r.value = complex_to_json(zeta_laurent(g, 1, &d).coeff(0));
    } else {
        schema("request '" + request + "' is not available for kind distribution");
    }
    r.diagnostics = diagnostics_json(d);
    if (!d.near_critical.empty()) warn(r, "near_critical degrees were treated as critical");
    return r;
}

Result run_fio(const std::string& request, const Json& p, const RunOptions& opt) {
    FioSymbol s = parse_fio(p, opt);
    Result r;
    ZetaDiagnostics d;
    const int K = int_or(p, "K", kDefaultK);
    if (request == "eval") {
        Complex z = complex_or(p, "z", 0.0);
        eval_or_pole(r, [&] { return zeta_eval_fio(s, z, &d); }, [&] { return zeta_laurent_fio(s, K, &d); });
    } else if (request == "laurent") {
        r.value = laurent_to_json(zeta_laurent_fio(s, K, &d));
    } else if (request == "residue") {
        r.value = complex_to_json(residue_trace(s));
    } else if (request == "kv") {
        if (p.contains("N0"))
            r.value = complex_to_json(kv_trace_vanishing_phase(s, int_or(p, "N0", 0)));
        else
            r.value = complex_to_json(kv_trace(s));
    } else if (request == "mollify") {
        Complex z = complex_or(p, "z", 0.0);
        MollifiedFamily f;
        f.h = h_schedule(p);
        for (double h : f.h) f.values.push_back(zeta_eval_mollified(s, z, h));
        auto m = mollification_limit(f);
        r.value = complex_to_json(m.target);
        r.diagnostics = mollify_json(m, f.h);
        return r;
    } else if (request == "statphase") {
        if (s.base.empty()) schema("statphase needs a base point");
        if (s.terms.empty()) schema("statphase needs an amplitude term");
        const Vec& x = s.base.front().x;
        auto res = spherical_phase_integral(s.phase, s.terms.front().jet.front(), x, x, s.freq_dim,
                                            num(need(p, "r"), "r"), int_or(p, "J", 0), s.sphere_level);
        r.value = complex_to_json(res.asymptotic);
        Json pts = Json::array();
        for (const auto& sp : res.points)
            pts.push_back({{"point", sp.point}, {"phase_value", sp.phase_value}, {"det", sp.det},
                           {"signature", sp.signature}});
        r.diagnostics = {{"brute_force", complex_to_json(res.brute_force)}, {"stationary_points", pts}};
        return r;
    } else {
        schema("request '" + request + "' is not available for kind fio");
    }
    r.diagnostics = diagnostics_json(d);
    return r;
}

Result run_model(const std::string& request, const Json& p, const RunOptions& opt) {
    const std::string name = str(need(p, "name"), "name");
    Result r;
    const int K = int_or(p, "K", kDefaultK);
    if (name == "heat") {
        const double t = num(need(p, "t"), "t");
        if (!(t > 0.0)) schema("'t' must be positive");
        Eigen::MatrixXd B = lattice_basis(p);
        const int lv = level_of(p, opt);
        if (request == "heat" || request == "eval") {
            auto cf = heat_trace_closed_form(t, B);
            r.value = complex_to_json(heat_trace_via_zeta(t, B, lv));
            r.diagnostics = {{"closed_form", cf.value}, {"tail_bound", cf.tail_bound},
                             {"lattice_points", cf.lattice_points}};
        } else if (request == "laurent") {
            r.value = laurent_to_json(heat_trace_laurent(t, B, K, lv));
        } else if (request == "kv") {
            r.value = complex_to_json(heat_trace_kv(t, B, lv));
        } else {
            schema("request '" + request + "' is not available for model heat");
        }
    } else if (name == "fractional_laplacian_circle") {
        Complex alpha = complex_from_json(need(p, "alpha"));
        if (request == "eval") {
            Complex z = complex_or(p, "z", 0.0);
            eval_or_pole(r, [&] { return circle_fractional_zeta(alpha, z); },
                         [&] { return circle_fractional_laurent(alpha, K); });
        } else if (request == "laurent") {
            r.value = laurent_to_json(circle_fractional_laurent(alpha, K));
        } else if (request == "residue") {
            r.value = complex_to_json(residue_trace(circle_cutoff_symbol(alpha)));
        } else if (request == "kv") {
            r.value = complex_to_json(circle_fractional_kv(alpha));
        } else {
            schema("request '" + request + "' is not available for model fractional_laplacian_circle");
        }
    } else if (name == "shifted_fractional") {
        Complex alpha = complex_from_json(need(p, "alpha"));
        if (request == "mollify") {
            Complex z = complex_or(p, "z", 0.0);
            MollifiedFamily f;
            f.h = h_schedule(p);
            for (double h : f.h) f.values.push_back(shifted_fractional_zeta_nonzero(alpha, h, z));
            auto m = mollification_limit(f);
            r.value = complex_to_json(m.target);
            r.diagnostics = mollify_json(m, f.h);
            return r;
        }
        const double h = num(need(p, "h"), "h");
        if (request == "eval") {
            Complex z = complex_or(p, "z", 0.0);
            r.value = complex_to_json(shifted_fractional_zeta(alpha, h, z));
        } else if (request == "laurent") {
            auto s = shifted_fractional_laurent(alpha, h, K);
            r.value = laurent_to_json(s.series);
            r.diagnostics = {{"terms_used", s.terms_used}, {"truncation_bound", s.truncation_bound}};
        } else if (request == "residue") {
            r.value = complex_to_json(shifted_fractional_laurent(alpha, h, 1).series.coeff(-1));
        } else {
            schema("request '" + request + "' is not available for model shifted_fractional");
        }
    } else if (name == "wave_flat_torus") {
        if (request != "wave" && request != "eval") schema("model wave_flat_torus answers request 'wave'");
        const double t = num(need(p, "t"), "t");
        auto w = wave_trace_flat_torus(t, lattice_basis(p), num_or(p, "radius", 200.0));
        r.value = complex_to_json(w.value);
        r.diagnostics = {{"tail_bound", w.tail_bound}, {"lattice_points", w.lattice_points}};
    } else if (name == "psdo_identity_phase") {
        schema("psdo_identity_phase is a phase; use kind fio");
    } else {
        schema("unknown model '" + name + "'");
    }
    return r;
}

Result run_validate(const RunOptions& opt) {
    Result r;
    Json rows = Json::array();
    for (const auto& c : run_acceptance(opt.seed)) {
        Json row = {{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
        if (opt.timing) row["seconds"] = c.seconds;
        rows.push_back(row);
        r.all_pass = r.all_pass && c.pass;
    }
    r.value = rows;
    return r;
}

Result run_one(const Json& problem, const RunOptions& opt) {
    const std::string request = str(need(problem, "request"), "request");
    if (request == "validate") return run_validate(opt);
    const std::string kind = str(need(problem, "kind"), "kind");
    const Json& params = problem.contains("parameters") ? problem.at("parameters") : problem;
    if (kind == "distribution") return run_distribution(request, params, opt);
    if (kind == "fio") return run_fio(request, params, opt);
    if (kind == "model") return run_model(request, params, opt);
    schema("unknown kind '" + kind + "'");
}

std::string format_of(const Json& problem, const RunOptions& opt) {
    std::string f = opt.format;
    if (f.empty() && problem.contains("output") && problem.at("output").is_object())
        f = problem.at("output").value("format", "");
    if (f.empty()) f = "json";
    if (f != "json" && f != "csv") schema("format must be json or csv");
    return f;
}

std::string csv_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// a NaN parameter marks a single unswept value and leaves the column empty
std::string csv_rows(const std::vector<std::pair<double, Json>>& rows) {
    std::string out = "parameter,re,im\n";
    for (const auto& [x, v] : rows) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number())
            throw SchemaError("csv output needs complex values; use json for this request");
        out += (std::isnan(x) ? std::string() : csv_number(x)) + "," + csv_number(v[0].get<double>()) + "," + csv_number(v[1].get<double>()) + "\n";
    }
    return out;
}

}  // namespace

Json complex_to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Complex complex_from_json(const Json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    schema("expected a number or [re, im]");
}

Json laurent_to_json(const LaurentSeries& s) {
    Json c = Json::array();
    for (Complex v : s.coeffs()) c.push_back(complex_to_json(v));
    return {{"center", complex_to_json(s.center())}, {"min_order", s.min_order()}, {"coeffs", c}};
}

LaurentSeries laurent_from_json(const Json& j) {
    std::vector<Complex> c;
    const Json& arr = need(j, "coeffs");
    if (!arr.is_array() || arr.empty()) schema("'coeffs' must be a non-empty array");
    for (const auto& v : arr) c.push_back(complex_from_json(v));
    const Json& mo = need(j, "min_order");
    if (!mo.is_number_integer()) schema("'min_order' must be an integer");
    return LaurentSeries(complex_or(j, "center", 0.0), mo.get<int>(), std::move(c));
}

std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    return h;
}

std::string output_path(const Json& problem) {
    if (problem.is_object() && problem.contains("output") && problem.at("output").is_object())
        return problem.at("output").value("path", "");
    return "";
}

RunOutcome run_problem(const Json& problem, const RunOptions& opt) {
    RunOutcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (!problem.is_object()) schema("problem must be a JSON object");
        const std::string format = format_of(problem, opt);
        const std::string request = str(need(problem, "request"), "request");

        // the digest covers everything that can change the numbers
        Json digest_input = problem;
        digest_input.erase("output");
        digest_input["_level"] = opt.level;
        if (request == "validate") digest_input["_seed"] = opt.seed;
        char digest[17];
        std::snprintf(digest, sizeof digest, "%016llx",
                      static_cast<unsigned long long>(fnv1a(digest_input.dump())));

        Json doc = {{"request", request}, {"inputs_digest", digest}};
        std::vector<std::pair<double, Json>> rows;
        bool all_pass = true;
        if (problem.contains("sweep")) {
            const Json& sw = problem.at("sweep");
            const std::string param = str(need(sw, "parameter"), "sweep.parameter");
            Json values = Json::array(), diags = Json::array();
            for (const auto& v : need(sw, "values")) {
                const double x = num(v, "sweep value");
                Json p = problem;
                p.erase("sweep");
                (p.contains("parameters") ? p["parameters"] : p)[param] = x;
                Result r = run_one(p, opt);
                rows.emplace_back(x, r.value);
                values.push_back({{"parameter", x}, {"value", r.value}});
                diags.push_back(r.diagnostics);
            }
            doc["sweep"] = {{"parameter", param}, {"results", values}};
            doc["diagnostics"] = diags;
            if (format == "csv") out.output = csv_rows(rows);
        } else {
            Result r = run_one(problem, opt);
            doc["value"] = r.value;
            doc["diagnostics"] = r.diagnostics;
            all_pass = r.all_pass;
            if (format == "csv") {
                if (request == "validate") {
                    std::string s = "id,name,pass\n";
                    for (const auto& row : r.value)
                        s += std::to_string(row["id"].get<int>()) + "," + row["name"].get<std::string>() + "," +
                             (row["pass"].get<bool>() ? "1" : "0") + "\n";
                    out.output = s;
                } else {
                    rows.emplace_back(std::nan(""), r.value);
                    out.output = csv_rows(rows);
                }
            }
        }
        if (opt.timing)
            doc["elapsed"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (format == "json") out.output = doc.dump(2) + "\n";
        out.exit_code = all_pass ? kExitOk : kExitCompute;
        if (!all_pass) out.error = "acceptance suite reported failures";
    } catch (const SchemaError& e) {
        out.exit_code = kExitSchema;
        out.error = e.what();
    } catch (const Json::exception& e) {
        out.exit_code = kExitSchema;
        out.error = e.what();
    } catch (const std::exception& e) {
        out.exit_code = kExitCompute;
        out.error = e.what();
    }
    return out;
}

}  // namespace zetafio::cli
