/*
 * run_config.hpp — configuration and serialization glue for the command-line
 * front end.
 *
 * A run is described either by flags or by a JSON config file (flags win).
 * Complex numbers are written in `re+imi` form on the command line
 * (`0.5+0.2i`, `5i`, `-1`), and as `[re, im]` pairs, strings, or bare
 * numbers in JSON.  Numeric output is always formatted with 17 significant
 * digits and a `.` decimal point, so identical configs produce bit-identical
 * files.
 */

#pragma once

#include <cctype>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hardy/circle.hpp"
#include "hardy/inner.hpp"
#include "hardy/oracle.hpp"

namespace hardy {

// Locale-independent 17-significant-digit formatting.
inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// Parses `re+imi` complex syntax: "1.5", "-2e-3", "i", "-0.5i", "0.5+0.2i".
inline Complex parse_complex(const std::string& token) {
    const auto fail = [&]() -> Complex {
        throw std::invalid_argument("cannot parse complex number from token '" + token + "'");
    };
    std::string s;
    for (char c : token)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.empty())
        return fail();

    const auto parse_real = [&](const std::string& part, double& out) {
        if (part.empty())
            return false;
        char* end = nullptr;
        out = std::strtod(part.c_str(), &end);
        return end == part.c_str() + part.size();
    };

    // split at the last top-level +/- that is not an exponent sign
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E')
            split = i;
    }

    const auto parse_imag_part = [&](std::string part, double& out) {
        if (part.empty() || part.back() != 'i')
            return false;
        part.pop_back();
        if (part.empty() || part == "+")
            part = "1";
        else if (part == "-")
            part = "-1";
        return parse_real(part, out);
    };

    double re = 0.0, im = 0.0;
    if (split == std::string::npos) {
        if (!s.empty() && s.back() == 'i') {
            if (!parse_imag_part(s, im))
                return fail();
            return Complex(0.0, im);
        }
        if (!parse_real(s, re))
            return fail();
        return Complex(re, 0.0);
    }
    if (!parse_real(s.substr(0, split), re))
        return fail();
    if (!parse_imag_part(s.substr(split), im))
        return fail();
    return Complex(re, im);
}

inline std::string format_complex(Complex v) {
    const std::string im = format_double(v.imag());
    return format_double(v.real()) + (im.front() == '-' ? "" : "+") + im + "i";
}

// A sweep over |λ| at fixed phase.
struct SweepRange {
    double start = 0.0;
    double stop = 0.0;
    std::size_t steps = 0;
    double phase = 0.0;
};

enum class OutputFormat { Csv, Json };

struct RunConfig {
    Complex z{0.0, 0.0};
    Complex lambda{0.0, 0.0};
    std::optional<SweepRange> sweep;
    double phi_phase = 0.0;
    unsigned phi_power = 0;
    std::vector<Complex> phi_zeros;
    std::size_t grid_size = 4096;
    std::size_t truncation = 64;
    SolveOptions solver;
    OutputFormat format = OutputFormat::Csv;
    std::string output_path;   // empty: stdout

    InnerFunctionSpec phi() const { return InnerFunctionSpec(phi_phase, phi_power, phi_zeros); }
};

// ── JSON serialization ────────────────────────────────────────────────────

namespace detail {

inline Complex complex_from_json(const nlohmann::json& j) {
    if (j.is_number())
        return Complex(j.get<double>(), 0.0);
    if (j.is_string())
        return parse_complex(j.get<std::string>());
    if (j.is_array() && j.size() == 2)
        return Complex(j[0].get<double>(), j[1].get<double>());
    throw std::invalid_argument("config: complex values must be numbers, [re, im] pairs, or "
                                "'re+imi' strings");
}

inline nlohmann::json complex_to_json(Complex v) {
    return nlohmann::json::array({v.real(), v.imag()});
}

} // namespace detail

inline RunConfig config_from_json(const nlohmann::json& j) {
    RunConfig cfg;
    if (j.contains("z"))
        cfg.z = detail::complex_from_json(j.at("z"));
    if (j.contains("lambda"))
        cfg.lambda = detail::complex_from_json(j.at("lambda"));
    if (j.contains("lambda_sweep")) {
        const auto& s = j.at("lambda_sweep");
        SweepRange range;
        range.start = s.at("start").get<double>();
        range.stop = s.at("stop").get<double>();
        range.steps = s.at("steps").get<std::size_t>();
        if (s.contains("phase"))
            range.phase = s.at("phase").get<double>();
        cfg.sweep = range;
    }
    if (j.contains("phi")) {
        const auto& p = j.at("phi");
        if (p.contains("phase"))
            cfg.phi_phase = p.at("phase").get<double>();
        if (p.contains("power"))
            cfg.phi_power = p.at("power").get<unsigned>();
        if (p.contains("zeros"))
            for (const auto& zj : p.at("zeros"))
                cfg.phi_zeros.push_back(detail::complex_from_json(zj));
    }
    if (j.contains("grid_size"))
        cfg.grid_size = j.at("grid_size").get<std::size_t>();
    if (j.contains("truncation"))
        cfg.truncation = j.at("truncation").get<std::size_t>();
    if (j.contains("solver")) {
        const auto& s = j.at("solver");
        if (s.contains("max_iter"))
            cfg.solver.max_iter = s.at("max_iter").get<std::size_t>();
        if (s.contains("tol"))
            cfg.solver.tol = s.at("tol").get<double>();
        if (s.contains("delta"))
            cfg.solver.smoothing_delta = s.at("delta").get<double>();
    }
    if (j.contains("output")) {
        const auto& o = j.at("output");
        if (o.contains("format")) {
            const std::string f = o.at("format").get<std::string>();
            if (f == "csv")
                cfg.format = OutputFormat::Csv;
            else if (f == "json")
                cfg.format = OutputFormat::Json;
            else
                throw std::invalid_argument("config: output.format must be 'csv' or 'json'");
        }
        if (o.contains("path"))
            cfg.output_path = o.at("path").get<std::string>();
    }
    return cfg;
}

inline nlohmann::json config_to_json(const RunConfig& cfg) {
    nlohmann::json j;
    j["z"] = detail::complex_to_json(cfg.z);
    if (cfg.sweep) {
        j["lambda_sweep"] = {{"start", cfg.sweep->start},
                             {"stop", cfg.sweep->stop},
                             {"steps", cfg.sweep->steps},
                             {"phase", cfg.sweep->phase}};
    } else {
        j["lambda"] = detail::complex_to_json(cfg.lambda);
    }
    nlohmann::json zeros = nlohmann::json::array();
    for (Complex a : cfg.phi_zeros)
        zeros.push_back(detail::complex_to_json(a));
    j["phi"] = {{"phase", cfg.phi_phase}, {"power", cfg.phi_power}, {"zeros", zeros}};
    j["grid_size"] = cfg.grid_size;
    j["truncation"] = cfg.truncation;
    j["solver"] = {{"max_iter", cfg.solver.max_iter},
                   {"tol", cfg.solver.tol},
                   {"delta", cfg.solver.smoothing_delta}};
    j["output"] = {{"format", cfg.format == OutputFormat::Csv ? "csv" : "json"},
                   {"path", cfg.output_path}};
    return j;
}

inline RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("config: cannot open file '" + path + "'");
    nlohmann::json j;
    in >> j;
    return config_from_json(j);
}

// Validation shared by all subcommands.
inline void validate(const RunConfig& cfg) {
    if (!std::isfinite(cfg.z.real()) || !std::isfinite(cfg.z.imag()) ||
        !std::isfinite(cfg.lambda.real()) || !std::isfinite(cfg.lambda.imag()))
        throw std::invalid_argument("config: z and lambda must be finite");
    if (cfg.grid_size < 16 || !is_power_of_two(cfg.grid_size))
        throw std::invalid_argument("config: grid_size must be a power of two >= 16");
    if (cfg.sweep) {
        if (cfg.sweep->steps < 2)
            throw std::invalid_argument("config: lambda_sweep.steps must be at least 2");
        if (!(cfg.sweep->start >= 0.0) || !(cfg.sweep->stop >= cfg.sweep->start))
            throw std::invalid_argument("config: need 0 <= lambda_sweep.start <= stop");
    }
}

} // namespace hardy
