// majeur — command-line front end: self-verification, figure sweeps, and
// witness scans with deterministic CSV output.
//
// Exit codes: 0 success, 1 verification failure, 2 bad config, 3 IO error.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "majeur/majeur.hpp"

namespace {

using majeur::ConfigError;
using majeur::IoError;
namespace sweep = majeur::sweep;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitBadConfig = 2;
constexpr int kExitIo = 3;

sweep::Scale scale_from_name(const std::string& s) {
    if (s == "log") return sweep::Scale::log;
    if (s == "linear") return sweep::Scale::linear;
    throw ConfigError("unknown scale '" + s + "' (expected log or linear)");
}

sweep::SweptParam swept_from_name(const std::string& s) {
    if (s == "lambda") return sweep::SweptParam::lambda;
    if (s == "omega") return sweep::SweptParam::omega;
    if (s == "ratio") return sweep::SweptParam::ratio;
    throw ConfigError("unknown swept parameter '" + s + "'");
}

sweep::Range parse_range(const std::string& text) {
    sweep::Range r;
    char* end = nullptr;
    const char* p = text.c_str();
    r.start = std::strtod(p, &end);
    if (end == p || *end != ':') throw ConfigError("range must be start:stop:count");
    p = end + 1;
    r.stop = std::strtod(p, &end);
    if (end == p || *end != ':') throw ConfigError("range must be start:stop:count");
    p = end + 1;
    const long long n = std::strtoll(p, &end, 10);
    if (end == p || *end != '\0' || n < 0) throw ConfigError("range must be start:stop:count");
    r.count = static_cast<std::size_t>(n);
    return r;
}

// JSON config; command-line flags override file values.
struct FileConfig {
    sweep::SweepConfig cfg;
    majeur::sweep::VerifyOptions verify;
    bool has_mode = false, has_out = false, has_range = false;
};

FileConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot read config file '" + path + "'");
    nlohmann::json j;
    try {
        f >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config parse error in '" + path + "': " + e.what());
    }
    if (!j.is_object()) throw ConfigError("config root must be a JSON object");

    FileConfig out;
    try {
        for (const auto& [key, value] : j.items()) {
            if (key == "mode") {
                out.cfg.mode = sweep::mode_from_name(value.get<std::string>());
                out.has_mode = true;
            } else if (key == "fixed") {
                out.cfg.fixed_values = value.get<std::vector<double>>();
            } else if (key == "range") {
                out.cfg.range.start = value.at("start").get<double>();
                out.cfg.range.stop = value.at("stop").get<double>();
                out.cfg.range.count = value.at("count").get<std::size_t>();
                out.has_range = true;
            } else if (key == "scale") {
                out.cfg.scale = scale_from_name(value.get<std::string>());
            } else if (key == "out") {
                out.cfg.output_path = value.get<std::string>();
                out.has_out = true;
            } else if (key == "seed") {
                out.cfg.seed = value.get<std::uint64_t>();
                out.verify.seed = out.cfg.seed;
            } else if (key == "tolerance") {
                out.cfg.tolerance = value.get<double>();
                out.verify.equality_tolerance = out.cfg.tolerance;
            } else if (key == "swept") {
                out.cfg.swept = swept_from_name(value.get<std::string>());
            } else {
                throw ConfigError("unknown config key '" + key + "'");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config value error in '" + path + "': " + e.what());
    }
    return out;
}

struct CliFlags {
    std::string config_path;
    std::string mode;
    std::vector<double> fixed;
    std::string range;
    std::string scale;
    std::string out;
    std::uint64_t seed = 0;
    double tolerance = 0.0;
    bool corrupt_hamiltonian_sign = false;
};

bool flag_given(const CLI::App* cmd, const std::string& name) {
    const CLI::Option* opt = cmd->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
}

// Merge precedence: built-in defaults < config file < command-line flags.
sweep::SweepConfig merge_sweep_config(const CliFlags& flags, const CLI::App* cmd,
                                      sweep::Mode default_mode) {
    FileConfig file;
    if (!flags.config_path.empty()) file = load_config(flags.config_path);

    sweep::SweepConfig cfg = file.cfg;
    if (!file.has_mode) cfg.mode = default_mode;
    if (flag_given(cmd, "--mode")) cfg.mode = sweep::mode_from_name(flags.mode);
    if (flag_given(cmd, "--fixed")) cfg.fixed_values = flags.fixed;
    if (flag_given(cmd, "--range")) cfg.range = parse_range(flags.range);
    if (flag_given(cmd, "--scale")) cfg.scale = scale_from_name(flags.scale);
    if (flag_given(cmd, "--out")) cfg.output_path = flags.out;
    if (flag_given(cmd, "--seed")) cfg.seed = flags.seed;
    if (flag_given(cmd, "--tolerance")) cfg.tolerance = flags.tolerance;
    return cfg;
}

void add_sweep_flags(CLI::App* cmd, CliFlags& flags) {
    cmd->add_option("--config", flags.config_path, "JSON config file; flags override its values");
    cmd->add_option("--range", flags.range, "swept range as start:stop:count");
    cmd->add_option("--scale", flags.scale, "abscissa spacing: log or linear");
    cmd->add_option("--out", flags.out, "output CSV path");
    cmd->add_option("--seed", flags.seed, "seed for randomized grids");
    cmd->add_option("--tolerance", flags.tolerance, "equality tolerance for verification");
}

int run_verify_cmd(const CliFlags& flags, const CLI::App* cmd) {
    majeur::sweep::VerifyOptions opt;
    if (!flags.config_path.empty()) opt = load_config(flags.config_path).verify;
    if (flag_given(cmd, "--seed")) opt.seed = flags.seed;
    if (flag_given(cmd, "--tolerance")) opt.equality_tolerance = flags.tolerance;
    opt.corrupt_hamiltonian_sign = flags.corrupt_hamiltonian_sign;

    const auto report = majeur::sweep::run_verify(opt);
    std::fputs(report.to_string().c_str(), stdout);
    return report.all_passed() ? kExitOk : kExitVerifyFailure;
}

int run_sweep_cmd(const CliFlags& flags, const CLI::App* cmd) {
    sweep::SweepConfig cfg = merge_sweep_config(flags, cmd, sweep::Mode::grid);
    if (cfg.output_path.empty()) throw ConfigError("sweep requires an output path (--out)");
    const std::string csv = sweep::sweep_csv(cfg);
    sweep::write_file(cfg.output_path, csv);
    std::printf("wrote %s (%s mode)\n", cfg.output_path.c_str(), sweep::mode_name(cfg.mode));
    return kExitOk;
}

int run_witness_cmd(const CliFlags& flags, const CLI::App* cmd) {
    sweep::SweepConfig cfg = merge_sweep_config(flags, cmd, sweep::Mode::witness);
    cfg.mode = sweep::Mode::witness;
    if (cfg.output_path.empty()) throw ConfigError("witness requires an output path (--out)");
    sweep::run_witness_scan(cfg);
    std::printf("wrote %s (witness scan)\n", cfg.output_path.c_str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"majeur: tripartite uncertainty relations and quantum witness for "
                 "Majorana-coupled quantum dots"};
    app.require_subcommand(1);

    CliFlags vflags, sflags, wflags;

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the full self-verification suite");
    verify_cmd->add_option("--config", vflags.config_path, "JSON config file");
    verify_cmd->add_option("--seed", vflags.seed, "seed for the randomized grids");
    verify_cmd->add_option("--tolerance", vflags.tolerance, "EUR equality tolerance");
    verify_cmd->add_flag("--corrupt-hamiltonian-sign", vflags.corrupt_hamiltonian_sign,
                         "negative control: flip the sign of lambda2 in every verified "
                         "Hamiltonian; verification must then fail");

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "emit a parameter-sweep CSV");
    sweep_cmd->add_option("--mode", sflags.mode,
                          "fig2-top | fig2-bottom | fig3-left | fig3-right | grid");
    sweep_cmd->add_option("--fixed", sflags.fixed, "held-fixed parameter values")
        ->delimiter(',');
    add_sweep_flags(sweep_cmd, sflags);

    CLI::App* witness_cmd =
        app.add_subcommand("witness", "emit a witness scan over the ratio omega/lambda");
    add_sweep_flags(witness_cmd, wflags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadConfig;
    }

    try {
        if (verify_cmd->parsed()) return run_verify_cmd(vflags, verify_cmd);
        if (sweep_cmd->parsed()) return run_sweep_cmd(sflags, sweep_cmd);
        if (witness_cmd->parsed()) return run_witness_cmd(wflags, witness_cmd);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitBadConfig;
    } catch (const IoError& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return kExitIo;
    } catch (const majeur::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitVerifyFailure;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitVerifyFailure;
    }
    return kExitOk;
}
