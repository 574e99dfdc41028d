#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "hardy/run_config.hpp"

using hardy::Complex;

TEST_CASE("parse_complex accepts the re+imi grammar") {
    CHECK(hardy::parse_complex("0.5+0.2i") == Complex(0.5, 0.2));
    CHECK(hardy::parse_complex("-1") == Complex(-1, 0));
    CHECK(hardy::parse_complex("5i") == Complex(0, 5));
    CHECK(hardy::parse_complex("-0.5i") == Complex(0, -0.5));
    CHECK(hardy::parse_complex("i") == Complex(0, 1));
    CHECK(hardy::parse_complex("-i") == Complex(0, -1));
    CHECK(hardy::parse_complex("1e-3") == Complex(1e-3, 0));
    CHECK(hardy::parse_complex("1e+2") == Complex(100, 0));
    CHECK(hardy::parse_complex("2.5-0.5i") == Complex(2.5, -0.5));
    CHECK(hardy::parse_complex("1.5e-2+2e-3i") == Complex(0.015, 0.002));
    CHECK(hardy::parse_complex(" 0.5 + 0.2i ") == Complex(0.5, 0.2));
}

TEST_CASE("parse_complex names the offending token") {
    for (const char* bad : {"abc", "1+2j", "", "0.5++2i", "i2"}) {
        try {
            hardy::parse_complex(bad);
            FAIL("expected a parse failure for '" << bad << "'");
        } catch (const std::invalid_argument& e) {
            CHECK(std::string(e.what()).find(bad) != std::string::npos);
        }
    }
}

TEST_CASE("format_double survives a round trip at 17 significant digits") {
    for (double x : {1.0 / 3.0, 4.0 / 3.0 + 0.75 / 4.0, 1e-300, 12345.6789, 0.0}) {
        const std::string s = hardy::format_double(x);
        CHECK(std::strtod(s.c_str(), nullptr) == x);
        CHECK(hardy::format_double(x) == s);
        CHECK(s.find(',') == std::string::npos);
    }
}

TEST_CASE("format_complex round trips through parse_complex") {
    for (Complex v : {Complex(0.5, 0.2), Complex(-1, -2), Complex(0, 1), Complex(3, 0)}) {
        CHECK(hardy::parse_complex(hardy::format_complex(v)) == v);
    }
}

TEST_CASE("config JSON round trip preserves every field") {
    hardy::RunConfig cfg;
    cfg.z = Complex(0.5, 0.2);
    cfg.lambda = Complex(1.5, -0.25);
    cfg.phi_phase = 0.7;
    cfg.phi_power = 2;
    cfg.phi_zeros = {Complex(0.4, 0), Complex(0, -0.3)};
    cfg.grid_size = 8192;
    cfg.truncation = 32;
    cfg.solver.max_iter = 123;
    cfg.solver.tol = 1e-10;
    cfg.solver.smoothing_delta = 1e-8;
    cfg.format = hardy::OutputFormat::Json;
    cfg.output_path = "out.json";

    const auto j = hardy::config_to_json(cfg);
    const auto back = hardy::config_from_json(j);
    CHECK(back.z == cfg.z);
    CHECK(back.lambda == cfg.lambda);
    CHECK(back.phi_phase == cfg.phi_phase);
    CHECK(back.phi_power == cfg.phi_power);
    CHECK(back.phi_zeros == cfg.phi_zeros);
    CHECK(back.grid_size == cfg.grid_size);
    CHECK(back.truncation == cfg.truncation);
    CHECK(back.solver.max_iter == cfg.solver.max_iter);
    CHECK(back.solver.tol == cfg.solver.tol);
    CHECK(back.solver.smoothing_delta == cfg.solver.smoothing_delta);
    CHECK(back.format == cfg.format);
    CHECK(back.output_path == cfg.output_path);
    CHECK_FALSE(back.sweep.has_value());
}

TEST_CASE("sweep configs round trip and validate") {
    hardy::RunConfig cfg;
    cfg.sweep = hardy::SweepRange{0.0, 6.0, 13, 0.9};
    const auto back = hardy::config_from_json(hardy::config_to_json(cfg));
    REQUIRE(back.sweep.has_value());
    CHECK(back.sweep->start == 0.0);
    CHECK(back.sweep->stop == 6.0);
    CHECK(back.sweep->steps == 13);
    CHECK(back.sweep->phase == 0.9);
    CHECK_NOTHROW(hardy::validate(back));

    hardy::RunConfig bad = back;
    bad.sweep->steps = 1;
    CHECK_THROWS_AS(hardy::validate(bad), std::invalid_argument);
    bad.sweep->steps = 4;
    bad.sweep->start = -1.0;
    CHECK_THROWS_AS(hardy::validate(bad), std::invalid_argument);
}

TEST_CASE("validate rejects broken grids and non-finite inputs") {
    hardy::RunConfig cfg;
    cfg.grid_size = 20;
    CHECK_THROWS_AS(hardy::validate(cfg), std::invalid_argument);
    cfg.grid_size = 8;
    CHECK_THROWS_AS(hardy::validate(cfg), std::invalid_argument);
    cfg.grid_size = 4096;
    cfg.z = Complex(std::nan(""), 0);
    CHECK_THROWS_AS(hardy::validate(cfg), std::invalid_argument);
}

TEST_CASE("config files load with flags-over-file semantics left to the caller") {
    const char* path = "test_config_tmp.json";
    {
        std::ofstream out(path);
        out << R"({
          "z": "0.5+0.2i",
          "lambda": [1.0, 0.5],
          "phi": {"phase": 0.0, "power": 1, "zeros": [[0.4, 0.0]]},
          "grid_size": 4096,
          "truncation": 64,
          "solver": {"max_iter": 200, "tol": 1e-12, "delta": 1e-9},
          "output": {"format": "json", "path": ""}
        })";
    }
    const auto cfg = hardy::load_config_file(path);
    CHECK(cfg.z == Complex(0.5, 0.2));
    CHECK(cfg.lambda == Complex(1.0, 0.5));
    CHECK(cfg.phi_power == 1);
    CHECK(cfg.phi_zeros.size() == 1);
    CHECK(cfg.solver.max_iter == 200);
    CHECK(cfg.format == hardy::OutputFormat::Json);
    std::remove(path);

    CHECK_THROWS_AS(hardy::load_config_file("does_not_exist.json"), std::invalid_argument);
}

TEST_CASE("complex values in JSON accept numbers, strings and pairs") {
    using nlohmann::json;
    CHECK(hardy::config_from_json(json{{"z", 0.25}}).z == Complex(0.25, 0));
    CHECK(hardy::config_from_json(json{{"z", "0.25-0.5i"}}).z == Complex(0.25, -0.5));
    CHECK(hardy::config_from_json(json{{"z", json::array({0.1, 0.2})}}).z == Complex(0.1, 0.2));
    CHECK_THROWS_AS(hardy::config_from_json(json{{"z", json::array({1, 2, 3})}}),
                    std::invalid_argument);
}
