// viscobessel: evaluate material functions, run verification suites,
// simulate load histories and manage the Bessel zero cache.
//
// Exit codes: 0 ok, 1 verification failed, 2 usage or invalid parameters,
// 3 numerical-domain refusal, 4 computation failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "viscobessel/cli/figures.hpp"
#include "viscobessel/cli/verify.hpp"
#include "viscobessel/viscobessel.hpp"

namespace vb = viscobessel;

namespace {

enum exit_code : int { ok = 0, check_failed = 1, usage = 2, refusal = 3, failure = 4 };

struct ModelOptions {
    std::string family;
    std::optional<double> nu;
    std::optional<double> a1;
    std::optional<double> b1;
    vb::models::TruncationPolicy policy;
    std::string cache_dir;
};

void add_model_options(CLI::App& cmd, ModelOptions& o, bool family_required) {
    auto* family = cmd.add_option("--family", o.family, "bessel | fmax | asymptotic")
                       ->check(CLI::IsMember({"bessel", "fmax", "asymptotic"}));
    if (family_required) family->required();
    cmd.add_option("--nu", o.nu, "order nu > -1 (bessel, asymptotic)");
    cmd.add_option("--a1", o.a1, "fmax a1 > 0");
    cmd.add_option("--b1", o.b1, "fmax b1 > 0");
    cmd.add_option("--tol", o.policy.tol, "series truncation tolerance")->capture_default_str();
    cmd.add_option("--n-min", o.policy.n_min, "minimum series terms")->capture_default_str();
    cmd.add_option("--n-max", o.policy.n_max, "maximum series terms")->capture_default_str();
    cmd.add_option("--t-floor", o.policy.t_floor, "smallest t the series accepts")->capture_default_str();
    cmd.add_option("--cache-dir", o.cache_dir, "zero cache directory (default $VISCOBESSEL_CACHE_DIR)");
}

vb::specfun::ZeroCache& cache_for(const ModelOptions& o) {
    static std::unique_ptr<vb::specfun::ZeroCache> cache;
    if (!cache) {
        cache = std::make_unique<vb::specfun::ZeroCache>(o.cache_dir.empty() ? vb::specfun::default_cache_directory()
                                                                              : std::filesystem::path(o.cache_dir));
    }
    return *cache;
}

vb::models::ModelParams params_from(const ModelOptions& o) {
    const auto family = vb::models::parse_family(o.family);
    if (!family) throw vb::domain_error("unknown family '" + o.family + "'");
    if (*family == vb::models::Family::fmax) {
        if (o.nu) throw vb::domain_error("--nu does not apply to --family fmax");
        if (!o.a1 || !o.b1) throw vb::domain_error("--family fmax needs --a1 and --b1");
        return vb::models::ModelParams::checked(vb::models::ModelParams::fmax(*o.a1, *o.b1));
    }
    if (o.a1 || o.b1) throw vb::domain_error("--a1/--b1 apply only to --family fmax");
    if (!o.nu) throw vb::domain_error("--family " + o.family + " needs --nu");
    return vb::models::ModelParams::checked(*family == vb::models::Family::bessel
                                                ? vb::models::ModelParams::bessel(*o.nu)
                                                : vb::models::ModelParams::asymptotic(*o.nu));
}

vb::models::MaterialModel model_from(const ModelOptions& o) {
    o.policy.validate();
    return vb::models::make_model(params_from(o), o.policy, cache_for(o));
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << text)) {
        throw vb::computation_error("cannot write '" + path + "'");
    }
}

// ---- eval -------------------------------------------------------------------

struct EvalOptions {
    ModelOptions model;
    std::string fn = "J";
    std::optional<double> t_start;
    double t_end = 2.0;
    std::size_t points = 201;
    std::string spacing = "lin";
    std::string output;
    int figure = 0;
    bool gnuplot = false;
};

std::vector<double> time_grid(double start, double end, std::size_t points, bool logarithmic) {
    if (points < 2) throw vb::domain_error("--points must be at least 2");
    if (!(start >= 0.0) || !(end > start)) throw vb::domain_error("need 0 <= t-start < t-end");
    if (logarithmic) {
        if (!(start > 0.0)) throw vb::domain_error("log spacing needs t-start > 0");
        return vb::cli::log_grid(start, end, points);
    }
    std::vector<double> grid(points);
    for (std::size_t i = 0; i < points; ++i) {
        grid[i] = start + (end - start) * static_cast<double>(i) / static_cast<double>(points - 1);
    }
    grid.back() = end;
    return grid;
}

int run_eval(const EvalOptions& o) {
    std::ostringstream csv;
    std::string ylabel;
    if (o.figure != 0) {
        o.model.policy.validate();
        const auto table = vb::cli::figure_table(o.figure, o.model.policy, cache_for(o.model));
        vb::io::write_table(csv, table);
        ylabel = (o.figure % 2 == 1) ? "J(t)" : "G(t)";
        if (o.gnuplot) {
            if (o.output.empty()) throw vb::domain_error("--gnuplot needs --output");
            write_output(o.output + ".gp", vb::cli::gnuplot_script(table, o.output, ylabel));
        }
        write_output(o.output, csv.str());
        return ok;
    }
    const auto kind = vb::models::parse_function_kind(o.fn);
    if (!kind) throw vb::domain_error("--fn must be J, G, psi or phi");
    const auto model = model_from(o.model);
    const bool singular_at_zero = *kind == vb::models::FunctionKind::creep_memory ||
                                  *kind == vb::models::FunctionKind::relaxation_memory;
    const double start = o.t_start.value_or(
        (singular_at_zero || o.model.family == "bessel") ? vb::models::time_floor(model) : 0.0);
    const auto grid = time_grid(start, o.t_end, o.points, o.spacing == "log");
    const auto curve = vb::models::evaluate_curve(model, *kind, grid);
    vb::io::write_curve(csv, curve);
    if (o.gnuplot) {
        if (o.output.empty()) throw vb::domain_error("--gnuplot needs --output");
        vb::io::Table header_only{{"t", o.fn}, {}};
        write_output(o.output + ".gp", vb::cli::gnuplot_script(header_only, o.output, o.fn + "(t)"));
    }
    write_output(o.output, csv.str());
    return ok;
}

// ---- verify -----------------------------------------------------------------

struct VerifyOptions {
    ModelOptions model;
    std::string check;
    std::size_t n = 200;
    std::string json_path;
};

nlohmann::json params_json(const vb::models::ModelParams& p) {
    if (p.family == vb::models::Family::fmax) return {{"a1", p.a1}, {"b1", p.b1}};
    return {{"nu", p.nu}};
}

int run_verify(VerifyOptions o) {
    vb::cli::CheckResult result;
    if (o.check == "zeros") {
        if (!o.model.nu) throw vb::domain_error("verify zeros needs --nu");
        if (!(*o.model.nu > -1.0)) throw vb::domain_error("nu must exceed -1");
        if (o.n < 1) throw vb::domain_error("--n must be at least 1");
        const auto table = cache_for(o.model).get(*o.model.nu, o.n);
        result = vb::cli::check_zeros(*table);
    } else {
        if (o.model.family.empty()) o.model.family = "bessel";
        const auto model = model_from(o.model);
        if (o.check == "reciprocity") {
            result = vb::cli::check_reciprocity(model);
        } else if (o.check == "interconversion") {
            result = vb::cli::check_interconversion(model);
        } else if (o.check == "laplace-oracle") {
            result = vb::cli::check_laplace_oracle(model);
        } else if (o.check == "asymptotics") {
            result = vb::cli::check_asymptotics(model);
        } else if (o.check == "cm") {
            result = vb::cli::check_complete_monotonicity(model);
        } else {
            throw vb::domain_error("unknown check '" + o.check + "'");
        }
    }
    std::cout << "check      " << result.check << '\n'
              << "family     " << vb::models::to_string(result.params.family) << '\n'
              << "params     " << params_json(result.params).dump() << '\n';
    for (const auto& line : result.lines) {
        std::cout << "  " << line << '\n';
    }
    std::cout << "max_error  " << vb::specfun::format_double(result.max_error) << '\n'
              << "tolerance  " << vb::specfun::format_double(result.tolerance) << '\n'
              << "result     " << (result.pass ? "PASS" : "FAIL") << '\n';
    const nlohmann::json summary{{"check", result.check},
                                 {"family", std::string(vb::models::to_string(result.params.family))},
                                 {"params", params_json(result.params)},
                                 {"max_error", result.max_error},
                                 {"tolerance", result.tolerance},
                                 {"pass", result.pass}};
    std::cout << summary.dump() << '\n';
    if (!o.json_path.empty()) write_output(o.json_path, summary.dump(2) + "\n");
    return result.pass ? ok : check_failed;
}

// ---- simulate ---------------------------------------------------------------

struct SimulateOptions {
    ModelOptions model;
    std::string input;
    std::string load = "stress";
    std::string method = "convolution";
    std::string output;
};

int run_simulate(const SimulateOptions& o) {
    const auto kind = o.load == "stress" ? vb::fracsim::LoadKind::stress : vb::fracsim::LoadKind::strain;
    std::ifstream in(o.input, std::ios::binary);
    if (!in) throw vb::domain_error("cannot open '" + o.input + "'");
    const auto load = vb::io::read_load_history(in, kind);
    const auto model = model_from(o.model);
    vb::fracsim::ResponseHistory response;
    if (o.method == "convolution") {
        response = vb::fracsim::convolve_response(model, load);
    } else if (const auto* f = std::get_if<vb::models::FractionalMaxwell>(&model)) {
        response = vb::fracsim::simulate_fmax(f->params().a1, f->params().b1, load);
    } else if (const auto* m = std::get_if<vb::models::MaxwellLike>(&model)) {
        response = vb::fracsim::simulate_asymptotic(m->params().nu, load);
    } else {
        throw vb::domain_error("--method stepping supports --family fmax and asymptotic only");
    }
    std::ostringstream csv;
    vb::io::write_response_history(csv, response);
    write_output(o.output, csv.str());
    return ok;
}

// ---- zeros ------------------------------------------------------------------

struct ZerosOptions {
    double nu = 0.0;
    std::size_t n = 0;
    std::string cache_dir;
};

int run_zeros(const ZerosOptions& o) {
    if (!(o.nu > -1.0)) throw vb::domain_error("nu must exceed -1");
    if (o.n < 1) throw vb::domain_error("--n must be at least 1");
    const auto dir = o.cache_dir.empty() ? vb::specfun::default_cache_directory() : std::filesystem::path(o.cache_dir);
    if (dir.empty()) throw vb::domain_error("no cache directory: pass --cache-dir or set VISCOBESSEL_CACHE_DIR");
    vb::specfun::ZeroCache cache(dir);
    const auto table = cache.get(o.nu, o.n);
    if (!std::filesystem::exists(cache.file_for(o.nu, o.n))) {
        throw vb::computation_error("could not write " + cache.file_for(o.nu, o.n).string());
    }
    std::cout << "n,j\n";
    for (std::size_t i = 0; i < table->size(); ++i) {
        std::cout << (i + 1) << ',' << vb::specfun::format_double((*table)[i]) << '\n';
    }
    std::cerr << "cache: " << cache.file_for(o.nu, o.n).string() << '\n';
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"viscobessel: Bessel-kernel viscoelastic material functions"};
    app.require_subcommand(1);

    EvalOptions eval;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a material function on a t-grid (CSV)");
    add_model_options(*eval_cmd, eval.model, false);
    eval_cmd->add_option("--fn", eval.fn, "J | G | psi | phi")->capture_default_str();
    eval_cmd->add_option("--t-start", eval.t_start, "first t (default 0, or t_floor for bessel and memory functions)");
    eval_cmd->add_option("--t-end", eval.t_end, "last t")->capture_default_str();
    eval_cmd->add_option("--points", eval.points, "number of t values")->capture_default_str();
    eval_cmd->add_option("--spacing", eval.spacing, "lin | log")->check(CLI::IsMember({"lin", "log"}));
    eval_cmd->add_option("--output,-o", eval.output, "CSV path (default stdout)");
    eval_cmd->add_option("--figure", eval.figure, "figure preset 1..4")->check(CLI::Range(1, 4));
    eval_cmd->add_flag("--gnuplot", eval.gnuplot, "also write <output>.gp");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    add_model_options(*verify_cmd, verify.model, false);
    verify_cmd->add_option("--check", verify.check, "reciprocity | interconversion | laplace-oracle | asymptotics | cm | zeros")
        ->required()
        ->check(CLI::IsMember({"reciprocity", "interconversion", "laplace-oracle", "asymptotics", "cm", "zeros"}));
    verify_cmd->add_option("--n", verify.n, "zeros to check (zeros check)")->capture_default_str();
    verify_cmd->add_option("--json", verify.json_path, "also write the JSON summary here");

    SimulateOptions simulate;
    auto* simulate_cmd = app.add_subcommand("simulate", "response to a sampled load history");
    add_model_options(*simulate_cmd, simulate.model, true);
    simulate_cmd->add_option("--input,-i", simulate.input, "CSV with header t,value")->required();
    simulate_cmd->add_option("--load", simulate.load, "stress | strain")->check(CLI::IsMember({"stress", "strain"}));
    simulate_cmd->add_option("--method", simulate.method, "stepping | convolution")
        ->check(CLI::IsMember({"stepping", "convolution"}));
    simulate_cmd->add_option("--output,-o", simulate.output, "CSV path (default stdout)");

    ZerosOptions zeros;
    auto* zeros_cmd = app.add_subcommand("zeros", "compute and cache zeros of J_nu");
    zeros_cmd->add_option("--nu", zeros.nu, "order nu > -1")->required();
    zeros_cmd->add_option("--n", zeros.n, "number of zeros")->required();
    zeros_cmd->add_option("--cache-dir", zeros.cache_dir, "cache directory (default $VISCOBESSEL_CACHE_DIR)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        if (*eval_cmd) return run_eval(eval);
        if (*verify_cmd) return run_verify(verify);
        if (*simulate_cmd) return run_simulate(simulate);
        if (*zeros_cmd) return run_zeros(zeros);
    } catch (const vb::parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const vb::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const vb::refusal_error& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return refusal;
    } catch (const vb::computation_error& e) {
        std::cerr << "computation failed: " << e.what() << '\n';
        return failure;
    } catch (const vb::overflow_error& e) {
        std::cerr << "computation failed: " << e.what() << '\n';
        return failure;
    } catch (const std::exception& e) {
        std::cerr << "computation failed: " << e.what() << '\n';
        return failure;
    }
    return usage;
}
