// hardy-extremal — command-line front end for the best-approximation library.
//
// Subcommands:
//   closed-form   e(z,λ), β and the branch for one (z, λ)
//   solve         IRLS oracle objective vs the closed form
//   certify       factorization certificate and duality gap
//   sweep         CSV sweep over |λ| at fixed phase
//   schwarz-pick  the Schwarz–Pick-type inequality for a test function
//
// Exit codes: 0 success, 1 invalid input, 2 numerical failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hardy/circle.hpp"
#include "hardy/closed_form.hpp"
#include "hardy/inner.hpp"
#include "hardy/kernels.hpp"
#include "hardy/oracle.hpp"
#include "hardy/run_config.hpp"
#include "hardy/schwarz_pick.hpp"

namespace {

using hardy::Complex;

struct CliOptions {
    hardy::RunConfig cfg;
    std::string config_path;

    // staging for flag overrides
    std::string z_str, lambda_str, format_str, output_str;
    double phi_phase = 0.0;
    unsigned phi_power = 0;
    std::vector<std::string> phi_zero_strs;
    std::size_t grid_size = 4096;
    std::size_t truncation = 64;
    std::size_t max_iter = 500;
    double tol = 1e-12;
    double delta = 1e-9;
    double sweep_start = 0.0, sweep_stop = 0.0, sweep_phase = 0.0;
    std::size_t sweep_steps = 0;
};

// Registers the flags shared by all subcommands and returns the resolved
// config after parsing (file first, flags override).
void add_common_flags(CLI::App* cmd, CliOptions& o) {
    cmd->add_option("--config", o.config_path, "JSON config file; flags override its values");
    cmd->add_option("--z", o.z_str, "query point z, |z| <= 0.99, e.g. 0.5+0.2i");
    cmd->add_option("--lambda", o.lambda_str, "weight λ, e.g. 1.5 or 2i or 0.5-0.2i");
    cmd->add_option("--phi-phase", o.phi_phase, "unimodular phase of φ (radians)");
    cmd->add_option("--phi-power", o.phi_power, "monomial power of φ");
    cmd->add_option("--phi-zero", o.phi_zero_strs, "Blaschke zero of φ (repeatable)");
    cmd->add_option("--grid", o.grid_size, "grid size M (power of two >= 16, default 4096)");
    cmd->add_option("--truncation", o.truncation, "oracle truncation N (default 64)");
    cmd->add_option("--max-iter", o.max_iter, "IRLS iteration cap (default 500)");
    cmd->add_option("--tol", o.tol, "IRLS relative objective tolerance (default 1e-12)");
    cmd->add_option("--delta", o.delta, "IRLS weight floor (default 1e-9)");
    cmd->add_option("--format", o.format_str, "output format: csv or json (default csv)");
    cmd->add_option("--output", o.output_str, "output path (default stdout)");
}

void resolve_common(const CLI::App* cmd, CliOptions& o) {
    if (!o.config_path.empty())
        o.cfg = hardy::load_config_file(o.config_path);
    if (cmd->count("--z"))
        o.cfg.z = hardy::parse_complex(o.z_str);
    if (cmd->count("--lambda")) {
        o.cfg.lambda = hardy::parse_complex(o.lambda_str);
        o.cfg.sweep.reset();
    }
    if (cmd->count("--phi-phase"))
        o.cfg.phi_phase = o.phi_phase;
    if (cmd->count("--phi-power"))
        o.cfg.phi_power = o.phi_power;
    if (cmd->count("--phi-zero")) {
        o.cfg.phi_zeros.clear();
        for (const std::string& s : o.phi_zero_strs)
            o.cfg.phi_zeros.push_back(hardy::parse_complex(s));
    }
    if (cmd->count("--grid"))
        o.cfg.grid_size = o.grid_size;
    if (cmd->count("--truncation"))
        o.cfg.truncation = o.truncation;
    if (cmd->count("--max-iter"))
        o.cfg.solver.max_iter = o.max_iter;
    if (cmd->count("--tol"))
        o.cfg.solver.tol = o.tol;
    if (cmd->count("--delta"))
        o.cfg.solver.smoothing_delta = o.delta;
    if (cmd->count("--format")) {
        if (o.format_str == "csv")
            o.cfg.format = hardy::OutputFormat::Csv;
        else if (o.format_str == "json")
            o.cfg.format = hardy::OutputFormat::Json;
        else
            throw std::invalid_argument("--format must be 'csv' or 'json'");
    }
    if (cmd->count("--output"))
        o.cfg.output_path = o.output_str;
    hardy::validate(o.cfg);
}

void emit(const hardy::RunConfig& cfg, const std::string& text) {
    if (cfg.output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot open output path '" + cfg.output_path + "'");
    out << text;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

hardy::WeightQuery query_of(const hardy::RunConfig& cfg) {
    return hardy::WeightQuery{hardy::DiskPoint(cfg.z), cfg.lambda, cfg.phi()};
}

// conj(C_{φ,z,λ}) on the configured grid: the function being approximated.
hardy::BoundarySamples conjugate_kernel(const hardy::WeightQuery& q, const hardy::CircleGrid& g) {
    hardy::BoundarySamples k = hardy::sample_weighted_kernel(q, g);
    for (Complex& v : k.values)
        v = std::conj(v);
    return k;
}

int cmd_closed_form(const CliOptions& o) {
    const auto q = query_of(o.cfg);   // validates z and φ
    const hardy::ClosedFormResult r = hardy::closed_form(q.z, q.lambda);

    std::ostringstream out;
    if (o.cfg.format == hardy::OutputFormat::Csv) {
        out << "e,beta_re,beta_im,branch\n"
            << hardy::format_double(r.value) << ',' << hardy::format_double(r.beta.real()) << ','
            << hardy::format_double(r.beta.imag()) << ',' << hardy::to_string(r.branch) << '\n';
    } else {
        nlohmann::json j;
        j["command"] = "closed-form";
        j["e"] = r.value;
        j["beta"] = {r.beta.real(), r.beta.imag()};
        j["branch"] = hardy::to_string(r.branch);
        j["config"] = hardy::config_to_json(o.cfg);
        out << j.dump(2) << '\n';
    }
    emit(o.cfg, out.str());
    return 0;
}

int cmd_solve(const CliOptions& o, bool zero_input) {
    const auto q = query_of(o.cfg);
    const hardy::CircleGrid grid = hardy::make_grid(o.cfg.grid_size);

    hardy::BoundarySamples k;
    double reference = 0.0;
    if (zero_input) {
        k.grid = grid;
        k.values.assign(grid.size(), Complex(0.0, 0.0));
    } else {
        k = conjugate_kernel(q, grid);
        reference = hardy::closed_form(q.z, q.lambda).value;
    }

    const hardy::SolveReport rep = hardy::solve_l1(k, o.cfg.truncation, o.cfg.solver);
    const double gap = reference > 0.0 ? std::abs(rep.objective - reference) / reference : 0.0;

    std::ostringstream out;
    if (o.cfg.format == hardy::OutputFormat::Csv) {
        out << "objective,closed_form_value,rel_gap,iterations,converged";
        for (std::size_t i = 1; i <= rep.coefficients.coeffs.size(); ++i)
            out << ",coeff_" << i;
        out << '\n'
            << hardy::format_double(rep.objective) << ',' << hardy::format_double(reference) << ','
            << hardy::format_double(gap) << ',' << rep.iterations << ','
            << bool_str(rep.converged);
        for (Complex c : rep.coefficients.coeffs)
            out << ',' << hardy::format_double(std::abs(c));
        out << '\n';
    } else {
        nlohmann::json j;
        j["command"] = "solve";
        j["objective"] = rep.objective;
        j["closed_form_value"] = reference;
        j["rel_gap"] = gap;
        j["iterations"] = rep.iterations;
        j["converged"] = rep.converged;
        nlohmann::json mags = nlohmann::json::array();
        for (Complex c : rep.coefficients.coeffs)
            mags.push_back(std::abs(c));
        j["coefficient_magnitudes"] = mags;
        j["config"] = hardy::config_to_json(o.cfg);
        out << j.dump(2) << '\n';
    }
    emit(o.cfg, out.str());
    return 0;
}

int cmd_certify(const CliOptions& o, double certify_tol) {
    const auto q = query_of(o.cfg);
    const hardy::CircleGrid grid = hardy::make_grid(o.cfg.grid_size);

    const hardy::BoundarySamples k = conjugate_kernel(q, grid);
    const hardy::BoundarySamples h = hardy::best_approximant(q, grid);
    const hardy::CertificateSamples cert = hardy::unimodular_certificate(q, grid);

    const hardy::CertificateReport rep =
        hardy::check_certificate(k, h, cert.samples, certify_tol);
    const double e = hardy::closed_form(q.z, q.lambda).value;
    const double gap = e - hardy::duality_lower_bound(k, cert.samples);

    std::ostringstream out;
    if (o.cfg.format == hardy::OutputFormat::Csv) {
        out << "is_certified,min_real,max_abs_imag,duality_gap,degenerate_certificate\n"
            << bool_str(rep.certified) << ',' << hardy::format_double(rep.min_real) << ','
            << hardy::format_double(rep.max_abs_imag) << ',' << hardy::format_double(gap) << ','
            << bool_str(cert.degenerate) << '\n';
    } else {
        nlohmann::json j;
        j["command"] = "certify";
        j["is_certified"] = rep.certified;
        j["min_real"] = rep.min_real;
        j["max_abs_imag"] = rep.max_abs_imag;
        j["duality_gap"] = gap;
        j["degenerate_certificate"] = cert.degenerate;
        j["config"] = hardy::config_to_json(o.cfg);
        out << j.dump(2) << '\n';
    }
    emit(o.cfg, out.str());
    return 0;
}

int cmd_sweep(const CliOptions& o, bool with_oracle) {
    if (!o.cfg.sweep)
        throw std::invalid_argument("sweep: give --start/--stop/--steps or a lambda_sweep config");
    const hardy::SweepRange range = *o.cfg.sweep;
    const hardy::DiskPoint z(o.cfg.z);
    const hardy::InnerFunctionSpec phi = o.cfg.phi();
    const hardy::CircleGrid grid = hardy::make_grid(o.cfg.grid_size);

    struct Row {
        double abs_lambda, e, ratio, objective, rel_gap;
        hardy::Branch branch;
    };
    std::vector<Row> rows;
    rows.reserve(range.steps);
    for (std::size_t i = 0; i < range.steps; ++i) {
        const double al = range.start + (range.stop - range.start) * static_cast<double>(i) /
                                            static_cast<double>(range.steps - 1);
        const Complex lambda = std::polar(al, range.phase);
        const hardy::ClosedFormResult r = hardy::closed_form(z, lambda);
        Row row{al, r.value, al > 0.0 ? r.value / al : 0.0, 0.0, 0.0, r.branch};
        if (with_oracle) {
            const hardy::WeightQuery q{z, lambda, phi};
            const hardy::SolveReport rep =
                hardy::solve_l1(conjugate_kernel(q, grid), o.cfg.truncation, o.cfg.solver);
            row.objective = rep.objective;
            row.rel_gap = std::abs(rep.objective - r.value) / r.value;
        }
        rows.push_back(row);
    }

    std::ostringstream out;
    if (o.cfg.format == hardy::OutputFormat::Csv) {
        out << "abs_lambda,e,branch,e_over_abs_lambda";
        if (with_oracle)
            out << ",objective,rel_gap";
        out << '\n';
        for (const Row& row : rows) {
            out << hardy::format_double(row.abs_lambda) << ',' << hardy::format_double(row.e)
                << ',' << hardy::to_string(row.branch) << ','
                << (row.abs_lambda > 0.0 ? hardy::format_double(row.ratio) : "");
            if (with_oracle)
                out << ',' << hardy::format_double(row.objective) << ','
                    << hardy::format_double(row.rel_gap);
            out << '\n';
        }
    } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const Row& row : rows) {
            nlohmann::json j;
            j["abs_lambda"] = row.abs_lambda;
            j["e"] = row.e;
            j["branch"] = hardy::to_string(row.branch);
            if (row.abs_lambda > 0.0)
                j["e_over_abs_lambda"] = row.ratio;
            if (with_oracle) {
                j["objective"] = row.objective;
                j["rel_gap"] = row.rel_gap;
            }
            arr.push_back(j);
        }
        nlohmann::json j;
        j["command"] = "sweep";
        j["rows"] = arr;
        j["config"] = hardy::config_to_json(o.cfg);
        out << j.dump(2) << '\n';
    }
    emit(o.cfg, out.str());
    return 0;
}

struct SchwarzPickOptions {
    std::string f_kind = "inner-times-mobius";
    std::string f_scale = "1";
    double f_phase = 0.0;
    unsigned f_power = 0;
    std::vector<std::string> f_zero_strs;
    std::vector<std::string> f_coeff_strs;
    std::size_t random_cases = 0;
};

hardy::TestFunctionSpec test_function_of(const SchwarzPickOptions& sp) {
    if (sp.f_kind == "inner-times-mobius")
        return hardy::inner_times_mobius();
    if (sp.f_kind == "blaschke") {
        std::vector<Complex> zeros;
        for (const std::string& s : sp.f_zero_strs)
            zeros.push_back(hardy::parse_complex(s));
        return hardy::blaschke_product(hardy::parse_complex(sp.f_scale),
                                       hardy::InnerFunctionSpec(sp.f_phase, sp.f_power, zeros));
    }
    if (sp.f_kind == "polynomial") {
        std::vector<Complex> coeffs;
        for (const std::string& s : sp.f_coeff_strs)
            coeffs.push_back(hardy::parse_complex(s));
        return hardy::scaled_polynomial(coeffs);
    }
    throw std::invalid_argument("--f-kind must be inner-times-mobius, blaschke, or polynomial");
}

std::uint64_t property_seed() {
    if (const char* env = std::getenv("HARDY_EXTREMAL_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 20240915ull;
}

int cmd_schwarz_pick(const CliOptions& o, const SchwarzPickOptions& sp) {
    const hardy::DiskPoint z(o.cfg.z);
    const hardy::InnerFunctionSpec phi = o.cfg.phi();

    std::ostringstream out;
    if (sp.random_cases > 0) {
        std::mt19937_64 rng(property_seed());
        std::size_t held = 0;
        double worst_margin = std::numeric_limits<double>::infinity();
        out << "case,lhs,rhs,holds,slack\n";
        for (std::size_t i = 0; i < sp.random_cases; ++i) {
            const hardy::AdmissibleCase c = hardy::draw_admissible_case(rng);
            const hardy::SchwarzPickReport rep = hardy::schwarz_pick_check(c.f, c.phi, c.z);
            held += rep.holds ? 1 : 0;
            worst_margin = std::min(worst_margin, rep.slack);
            out << i << ',' << hardy::format_double(rep.lhs) << ','
                << hardy::format_double(rep.rhs) << ',' << bool_str(rep.holds) << ','
                << hardy::format_double(rep.slack) << '\n';
        }
        out << "# held " << held << "/" << sp.random_cases
            << ", worst slack " << hardy::format_double(worst_margin) << '\n';
        emit(o.cfg, out.str());
        return held == sp.random_cases ? 0 : 2;
    }

    const hardy::TestFunctionSpec f = test_function_of(sp);
    const hardy::SchwarzPickReport rep = hardy::schwarz_pick_check(f, phi, z);
    if (o.cfg.format == hardy::OutputFormat::Csv) {
        out << "lhs,rhs,holds,slack\n"
            << hardy::format_double(rep.lhs) << ',' << hardy::format_double(rep.rhs) << ','
            << bool_str(rep.holds) << ',' << hardy::format_double(rep.slack) << '\n';
    } else {
        nlohmann::json j;
        j["command"] = "schwarz-pick";
        j["lhs"] = rep.lhs;
        j["rhs"] = rep.rhs;
        j["holds"] = rep.holds;
        j["slack"] = rep.slack;
        j["config"] = hardy::config_to_json(o.cfg);
        out << j.dump(2) << '\n';
    }
    emit(o.cfg, out.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"closed-form L1 best approximation of weighted Cauchy-Szego kernels, "
                 "an IRLS oracle, optimality certificates, and the resulting "
                 "Schwarz-Pick-type inequality"};
    app.require_subcommand(1);

    CliOptions closed_o, solve_o, certify_o, sweep_o, sp_o;
    SchwarzPickOptions sp_extra;
    bool zero_input = false, with_oracle = false;
    double certify_tol = 1e-9;

    CLI::App* closed = app.add_subcommand("closed-form", "evaluate e(z,λ), β and the branch");
    add_common_flags(closed, closed_o);

    CLI::App* solve = app.add_subcommand("solve", "run the IRLS oracle and compare");
    add_common_flags(solve, solve_o);
    solve->add_flag("--zero-input", zero_input, "debug: approximate k ≡ 0");

    CLI::App* certify = app.add_subcommand("certify", "check the optimality certificate");
    add_common_flags(certify, certify_o);
    certify->add_option("--certify-tol", certify_tol,
                        "tolerance for the nonnegativity check (default 1e-9)");

    CLI::App* sweep = app.add_subcommand("sweep", "sweep |λ| and emit plot-ready rows");
    add_common_flags(sweep, sweep_o);
    sweep->add_option("--start", sweep_o.sweep_start, "first |λ| (default 0)");
    sweep->add_option("--stop", sweep_o.sweep_stop, "last |λ|");
    sweep->add_option("--steps", sweep_o.sweep_steps, "row count (>= 2)");
    sweep->add_option("--phase", sweep_o.sweep_phase, "phase of λ in radians (default 0)");
    sweep->add_flag("--oracle", with_oracle, "add oracle objective and rel_gap columns");

    CLI::App* spick = app.add_subcommand("schwarz-pick", "check the Schwarz-Pick-type bound");
    add_common_flags(spick, sp_o);
    spick->add_option("--f-kind", sp_extra.f_kind,
                      "inner-times-mobius (default), blaschke, or polynomial");
    spick->add_option("--f-scale", sp_extra.f_scale, "scale of a blaschke test function");
    spick->add_option("--f-phase", sp_extra.f_phase, "phase of a blaschke test function");
    spick->add_option("--f-power", sp_extra.f_power, "monomial power of a blaschke test function");
    spick->add_option("--f-zero", sp_extra.f_zero_strs, "zero of a blaschke test function");
    spick->add_option("--f-coeff", sp_extra.f_coeff_strs,
                      "polynomial coefficient c_k, ascending (repeatable)");
    spick->add_option("--random", sp_extra.random_cases,
                      "run N random admissible cases (seed: HARDY_EXTREMAL_SEED)");

    try {
        app.parse(argc, argv);

        if (closed->parsed()) {
            resolve_common(closed, closed_o);
            return cmd_closed_form(closed_o);
        }
        if (solve->parsed()) {
            resolve_common(solve, solve_o);
            return cmd_solve(solve_o, zero_input);
        }
        if (certify->parsed()) {
            resolve_common(certify, certify_o);
            return cmd_certify(certify_o, certify_tol);
        }
        if (sweep->parsed()) {
            if (!sweep_o.config_path.empty())
                sweep_o.cfg = hardy::load_config_file(sweep_o.config_path);
            if (sweep->count("--start") || sweep->count("--stop") || sweep->count("--steps") ||
                sweep->count("--phase")) {
                hardy::SweepRange range =
                    sweep_o.cfg.sweep.value_or(hardy::SweepRange{0.0, 0.0, 0, 0.0});
                if (sweep->count("--start"))
                    range.start = sweep_o.sweep_start;
                if (sweep->count("--stop"))
                    range.stop = sweep_o.sweep_stop;
                if (sweep->count("--steps"))
                    range.steps = sweep_o.sweep_steps;
                if (sweep->count("--phase"))
                    range.phase = sweep_o.sweep_phase;
                sweep_o.cfg.sweep = range;
            }
            sweep_o.config_path.clear();   // already loaded above
            resolve_common(sweep, sweep_o);
            return cmd_sweep(sweep_o, with_oracle);
        }
        if (spick->parsed()) {
            resolve_common(spick, sp_o);
            return cmd_schwarz_pick(sp_o, sp_extra);
        }
        return 1;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const hardy::SolverError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::runtime_error& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
