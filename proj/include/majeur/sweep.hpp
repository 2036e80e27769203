// sweep.hpp — parameter sweeps with deterministic CSV emission and the
// self-verification suite behind the `verify` subcommand.

#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "majeur/errors.hpp"
#include "majeur/fock.hpp"
#include "majeur/qinfo.hpp"
#include "majeur/witness.hpp"

namespace majeur::sweep {

// --------------------------------- config -------------------------------------

enum class Mode { fig2_top, fig2_bottom, fig3_left, fig3_right, grid, verify, witness };
enum class Scale { log, linear };
enum class SweptParam { lambda, omega, ratio };

struct Range {
    double start = 0.0;
    double stop = 0.0;
    std::size_t count = 0;
};

struct SweepConfig {
    Mode mode = Mode::grid;
    std::vector<double> fixed_values;       // empty -> mode default
    Range range;                            // count == 0 -> mode default
    Scale scale = Scale::log;
    std::string output_path;
    std::uint64_t seed = 987654321u;        // randomized verify grids
    double tolerance = 1e-9;                // EUR equality tolerance in verify
    std::optional<SweptParam> swept;        // defaulted by mode
};

inline const char* mode_name(Mode m) {
    switch (m) {
        case Mode::fig2_top: return "fig2-top";
        case Mode::fig2_bottom: return "fig2-bottom";
        case Mode::fig3_left: return "fig3-left";
        case Mode::fig3_right: return "fig3-right";
        case Mode::grid: return "grid";
        case Mode::verify: return "verify";
        case Mode::witness: return "witness";
    }
    return "?";
}

inline Mode mode_from_name(const std::string& s) {
    for (Mode m : {Mode::fig2_top, Mode::fig2_bottom, Mode::fig3_left, Mode::fig3_right,
                   Mode::grid, Mode::verify, Mode::witness}) {
        if (s == mode_name(m)) return m;
    }
    throw ConfigError("unknown mode '" + s + "'");
}

// Fixed-parameter sets from the figure captions.
inline const std::vector<double>& caption_omegas() {
    static const std::vector<double> v{1e-3, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6};
    return v;
}
inline const std::vector<double>& caption_lambdas() {
    static const std::vector<double> v{1.0, 0.1, 8e-2, 4e-2, 1e-2, 1e-3, 1e-4};
    return v;
}

inline SweepConfig with_defaults(SweepConfig cfg) {
    const bool sweeps_lambda =
        cfg.mode == Mode::fig2_top || cfg.mode == Mode::fig3_left || cfg.mode == Mode::grid;
    if (!cfg.swept) {
        cfg.swept = cfg.mode == Mode::witness ? SweptParam::ratio
                    : sweeps_lambda           ? SweptParam::lambda
                                              : SweptParam::omega;
    }
    if (cfg.fixed_values.empty()) {
        switch (cfg.mode) {
            case Mode::fig2_top:
            case Mode::fig3_left: cfg.fixed_values = caption_omegas(); break;
            case Mode::fig2_bottom:
            case Mode::fig3_right: cfg.fixed_values = caption_lambdas(); break;
            case Mode::grid: cfg.fixed_values = {0.5}; break;
            default: break;
        }
    }
    if (cfg.range.count == 0) {
        cfg.range = (cfg.mode == Mode::witness) ? Range{1e-3, 1e3, 201} : Range{1e-4, 1.0, 201};
        if (cfg.mode == Mode::grid) cfg.range = Range{1e-3, 1.0, 201};
    }
    return cfg;
}

inline void validate(const SweepConfig& cfg) {
    if (cfg.range.count < 2) throw ConfigError("range: count must be >= 2");
    if (!(cfg.range.start < cfg.range.stop)) throw ConfigError("range: start must be < stop");
    if (cfg.scale == Scale::log && !(cfg.range.start > 0.0)) {
        throw ConfigError("range: start must be > 0 on a log scale");
    }
    if (!std::isfinite(cfg.range.start) || !std::isfinite(cfg.range.stop)) {
        throw ConfigError("range: endpoints must be finite");
    }
    if (cfg.mode != Mode::witness && cfg.mode != Mode::verify && cfg.fixed_values.empty()) {
        throw ConfigError("fixed_values: at least one held-fixed value required");
    }
    if (cfg.mode != Mode::witness && cfg.swept == SweptParam::ratio) {
        throw ConfigError("swept: 'ratio' is only valid for the witness scan");
    }
    for (double v : cfg.fixed_values) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw ConfigError("fixed_values: entries must be finite and non-negative");
        }
    }
}

inline std::vector<double> grid_points(const Range& r, Scale scale) {
    std::vector<double> pts(r.count);
    if (scale == Scale::log) {
        const double la = std::log(r.start), lb = std::log(r.stop);
        for (std::size_t i = 0; i < r.count; ++i) {
            pts[i] = std::exp(la + (lb - la) * double(i) / double(r.count - 1));
        }
    } else {
        for (std::size_t i = 0; i < r.count; ++i) {
            pts[i] = r.start + (r.stop - r.start) * double(i) / double(r.count - 1);
        }
    }
    pts.front() = r.start;
    pts.back() = r.stop;
    return pts;
}

// ------------------------------ CSV building ----------------------------------

// 17 significant digits, '.' decimal separator, locale-independent.
inline std::string format_double(double v) {
    std::array<char, 64> buf;
    const auto res =
        std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
    return std::string(buf.data(), res.ptr);
}

struct SweepRow {
    double omega = 0.0;
    double lambda = 0.0;
    qi::EurReport report;
    double witness_value = 0.0;
    double max_numeric_dev = 0.0;
};

inline SweepRow evaluate_row(double omega, double lambda) {
    SweepRow row;
    row.omega = omega;
    row.lambda = lambda;
    row.report = qi::eur_report(omega, lambda);
    row.witness_value = witness::quantum_witness(omega, lambda).witness;
    row.max_numeric_dev = qi::max_numeric_deviation(row.report);
    return row;
}

inline const char* kSweepCsvHeader =
    "omega,lambda,A,S_rhoX_AB,S_XgB,S_ZgC,S_AgB,S_AgC,I_AB,I_AC,H_XB,H_ZC,delta,"
    "lhs,rhs,gap,witness,max_numeric_dev";

inline std::string csv_line(const SweepRow& r) {
    const qi::AnalyticQuantities& n = r.report.numeric;
    const double cols[] = {r.omega,       r.lambda,      n.script_A,    n.s_rhoX_AB,
                           n.s_X_given_B, n.s_Z_given_C, n.s_A_given_B, n.s_A_given_C,
                           n.i_AB,        n.i_AC,        n.h_XB,        n.h_ZC,
                           n.delta,       r.report.lhs,  r.report.rhs,  r.report.gap,
                           r.witness_value, r.max_numeric_dev};
    std::string line;
    for (std::size_t i = 0; i < std::size(cols); ++i) {
        if (i) line += ',';
        line += format_double(cols[i]);
    }
    return line;
}

// One row per grid point: swept parameter ascending, then the fixed values in
// their configured order.  Byte-for-byte deterministic for a fixed config.
inline std::string sweep_csv(const SweepConfig& raw) {
    const SweepConfig cfg = with_defaults(raw);
    validate(cfg);
    if (cfg.mode == Mode::verify || cfg.mode == Mode::witness) {
        throw ConfigError("sweep_csv: mode '" + std::string(mode_name(cfg.mode)) +
                          "' is not a parameter sweep");
    }
    const auto pts = grid_points(cfg.range, cfg.scale);
    std::string out = std::string(kSweepCsvHeader) + "\n";
    for (double p : pts) {
        for (double fixed : cfg.fixed_values) {
            const bool lambda_swept = cfg.swept == SweptParam::lambda;
            const double omega = lambda_swept ? fixed : p;
            const double lambda = lambda_swept ? p : fixed;
            out += csv_line(evaluate_row(omega, lambda));
            out += '\n';
        }
    }
    return out;
}

// Witness scan over the ratio omega/lambda at lambda = 1.
inline std::string witness_csv(const SweepConfig& raw) {
    SweepConfig cfg = raw;
    cfg.mode = Mode::witness;
    cfg = with_defaults(std::move(cfg));
    validate(cfg);
    const auto pts = grid_points(cfg.range, cfg.scale);
    std::string out = "ratio,witness_numeric,witness_analytic,deviation\n";
    for (double ratio : pts) {
        const auto w = witness::quantum_witness(ratio, 1.0);
        out += format_double(ratio);
        out += ',';
        out += format_double(w.witness);
        out += ',';
        out += format_double(w.analytic_witness);
        out += ',';
        out += format_double(std::abs(w.witness - w.analytic_witness));
        out += '\n';
    }
    return out;
}

inline void write_file(const std::string& path, const std::string& content) {
    if (path.empty()) throw IoError("output path is empty");
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f << content;
    f.flush();
    if (!f) throw IoError("write failed for '" + path + "'");
}

inline void run_sweep(const SweepConfig& cfg) { write_file(cfg.output_path, sweep_csv(cfg)); }

inline void run_witness_scan(const SweepConfig& cfg) {
    write_file(cfg.output_path, witness_csv(cfg));
}

// ----------------------------- verification suite -----------------------------

struct VerifyOptions {
    std::uint64_t seed = 987654321u;
    double equality_tolerance = 1e-9;
    // Negative-control hook: builds every verified Hamiltonian with the sign
    // of lambda2 flipped, which must surface as SectorMismatch or an equality
    // failure.
    bool corrupt_hamiltonian_sign = false;
};

struct VerifyCheck {
    std::string name;
    bool passed = false;
    double worst = 0.0;
    double at_omega = 0.0;
    double at_lambda = 0.0;
    std::string note;  // set when a check aborts with an exception
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }

    std::string to_string() const {
        std::string out;
        for (const auto& c : checks) {
            out += c.name;
            out += c.passed ? ": PASS" : ": FAIL";
            if (c.note.empty()) {
                out += "  (worst " + format_double(c.worst) + " at omega=" +
                       format_double(c.at_omega) + ", lambda=" + format_double(c.at_lambda) + ")";
            } else {
                out += "  (" + c.note + ")";
            }
            out += '\n';
        }
        out += all_passed() ? "verify: all checks passed\n" : "verify: FAILURES present\n";
        return out;
    }
};

namespace detail {

// Deterministic log-uniform samples in [10^lo_exp, 10^hi_exp]; avoids
// distribution objects so the stream is identical across toolchains.
inline std::vector<std::pair<double, double>> seeded_grid(std::uint64_t seed, std::size_t n,
                                                          double lo_exp = -3.0,
                                                          double hi_exp = 0.0) {
    std::mt19937_64 rng(seed);
    auto unit = [&rng]() { return double(rng() >> 11) * 0x1.0p-53; };
    std::vector<std::pair<double, double>> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double a = std::pow(10.0, lo_exp + (hi_exp - lo_exp) * unit());
        const double b = std::pow(10.0, lo_exp + (hi_exp - lo_exp) * unit());
        pts.emplace_back(a, b);
    }
    return pts;
}

struct CheckAccum {
    VerifyCheck check;
    double bound;

    CheckAccum(std::string name, double tolerance) : bound(tolerance) {
        check.name = std::move(name);
        check.passed = true;
    }

    void record(double dev, double omega, double lambda) {
        if (dev >= check.worst) {
            check.worst = dev;
            check.at_omega = omega;
            check.at_lambda = lambda;
        }
        if (check.worst > bound) check.passed = false;
    }

    void fail(std::string note) {
        check.passed = false;
        check.note = std::move(note);
    }
};

inline fock::ModelParams verify_params(double omega, double lambda, const VerifyOptions& opt) {
    fock::ModelParams p{omega, lambda};
    if (opt.corrupt_hamiltonian_sign) p.lambda2 = std::numbers::sqrt2 * lambda;
    return p;
}

// Explicit closed-form marginals of |e1><e1|.
inline linalg::ComplexMatrix explicit_rho_ab(double eta, double xi) {
    linalg::ComplexMatrix m(4);  // (A,B) order: Phi- on {0,3}, Psi+ on {1,2}
    const double e2 = eta * eta / 2.0, x2 = xi * xi / 2.0;
    m(0, 0) = e2; m(3, 3) = e2; m(0, 3) = -e2; m(3, 0) = -e2;
    m(1, 1) = x2; m(2, 2) = x2; m(1, 2) = x2; m(2, 1) = x2;
    return m;
}

inline linalg::ComplexMatrix explicit_rho_ac(double eta, double xi) {
    linalg::ComplexMatrix m(4);  // (A,C) order
    const double e2 = eta * eta / 2.0, x2 = xi * xi / 2.0, ex = eta * xi / 2.0;
    m(0, 0) = x2; m(1, 1) = e2; m(2, 2) = x2; m(3, 3) = e2;
    m(0, 3) = ex; m(3, 0) = ex; m(1, 2) = -ex; m(2, 1) = -ex;
    return m;
}

}  // namespace detail

inline VerifyReport run_verify(const VerifyOptions& opt = {}) {
    using linalg::ComplexMatrix;
    using linalg::CVector;
    VerifyReport report;

    // -- canonical anticommutation relations (exact integer matrices) --
    {
        detail::CheckAccum acc("CAR anticommutators exact", 0.0);
        const auto ops = fock::fermion_annihilators();
        const ComplexMatrix id = ComplexMatrix::identity(fock::kFockDim);
        for (std::size_t i = 0; i < ops.size(); ++i) {
            for (std::size_t j = 0; j < ops.size(); ++j) {
                const ComplexMatrix adj = linalg::dagger(ops[j]);
                ComplexMatrix car = ops[i] * adj + adj * ops[i];
                if (i == j) car = car - id;
                acc.record(linalg::max_abs(car), 0.0, 0.0);
                acc.record(linalg::max_abs(ops[i] * ops[j] + ops[j] * ops[i]), 0.0, 0.0);
            }
        }
        report.checks.push_back(acc.check);
    }

    const auto grid100 = detail::seeded_grid(opt.seed, 100);
    const auto grid200 = detail::seeded_grid(opt.seed + 1, 200);

    // -- spectrum {-Delta, -omega, +omega, +Delta}, multiplicity 2 each --
    {
        detail::CheckAccum acc("spectrum equals {-Delta,-omega,+omega,+Delta} x2", 1e-10);
        try {
            for (const auto& [w, l] : grid100) {
                const auto p = detail::verify_params(w, l, opt);
                const auto ev = linalg::hermitian_eigenvalues(fock::build_hamiltonian(p));
                const double d = p.delta();
                const double expected[8] = {-d, -d, -w, -w, w, w, d, d};
                double dev = 0.0;
                for (int k = 0; k < 8; ++k) dev = std::max(dev, std::abs(ev[k] - expected[k]));
                acc.record(dev, w, l);
            }
        } catch (const Error& e) {
            acc.fail(e.what());
        }
        report.checks.push_back(acc.check);
    }

    // -- analytic eigensystem: orthonormality, eigenvalue equations, weights --
    {
        detail::CheckAccum orth("analytic e1..e8 orthonormal", 1e-12);
        detail::CheckAccum resid("analytic e1..e8 satisfy H e = E e", 1e-10);
        detail::CheckAccum weights("eta+^2 + xi+^2 = 1", 1e-12);
        try {
            for (std::size_t k = 0; k < grid100.size(); k += 5) {
                const auto [w, l] = grid100[k];
                const fock::ModelParams p{w, l};
                const auto sys = fock::analytic_eigensystem(p);
                const auto h = fock::build_hamiltonian(detail::verify_params(w, l, opt));
                for (std::size_t i = 0; i < 8; ++i) {
                    for (std::size_t j = 0; j < 8; ++j) {
                        const double g = std::abs(linalg::vdot(sys.states[i].vec,
                                                               sys.states[j].vec) -
                                                  (i == j ? 1.0 : 0.0));
                        orth.record(g, w, l);
                    }
                    const CVector hv = linalg::apply(h, sys.states[i].vec);
                    double r = 0.0;
                    for (std::size_t c = 0; c < 8; ++c) {
                        r = std::max(r, std::abs(hv[c] - sys.states[i].energy *
                                                             sys.states[i].vec[c]));
                    }
                    resid.record(r, w, l);
                }
                weights.record(std::abs(sys.eta_plus * sys.eta_plus +
                                        sys.xi_plus * sys.xi_plus - 1.0), w, l);
                weights.record(std::abs(sys.eta_minus * sys.eta_minus +
                                        sys.xi_minus * sys.xi_minus - 1.0), w, l);
            }
        } catch (const Error& e) {
            resid.fail(e.what());
        }
        report.checks.push_back(orth.check);
        report.checks.push_back(resid.check);
        report.checks.push_back(weights.check);
    }

    // -- numeric ground state: overlap with e1, odd parity --
    {
        detail::CheckAccum acc("ground state matches analytic e1 (overlap, parity)", 1e-9);
        const ComplexMatrix parity = fock::parity_operator();
        try {
            for (std::size_t k = 0; k < grid100.size(); k += 5) {
                const auto [w, l] = grid100[k];
                const auto sys = fock::analytic_eigensystem(fock::ModelParams{w, l});
                const CVector g = fock::ground_state(detail::verify_params(w, l, opt));
                const double ov = std::abs(linalg::vdot(sys.states[0].vec, g));
                acc.record(std::abs(1.0 - ov), w, l);
                const double par = linalg::vdot(g, linalg::apply(parity, g)).real();
                acc.record(std::abs(par + 1.0), w, l);
            }
        } catch (const Error& e) {
            acc.fail(e.what());
        }
        report.checks.push_back(acc.check);
    }

    // -- marginals of |e1><e1| against the explicit closed forms --
    {
        detail::CheckAccum acc("marginals match closed forms entrywise", 1e-10);
        try {
            const auto grid20 = detail::seeded_grid(opt.seed + 2, 20);
            for (const auto& [w, l] : grid20) {
                const auto sys = fock::analytic_eigensystem(fock::ModelParams{w, l});
                const CVector g = fock::ground_state(detail::verify_params(w, l, opt));
                const auto abc = qi::permute_subsystems(
                    qi::pure_state(g, {2, 2, 2}, {"B", "A", "C"}), {"A", "B", "C"});
                const auto rho_ab = qi::partial_trace(abc, {"A", "B"});
                const auto rho_ac = qi::partial_trace(abc, {"A", "C"});
                const auto rho_c = qi::partial_trace(abc, {"C"});
                const auto rho_a = qi::partial_trace(abc, {"A"});
                const auto rho_b = qi::partial_trace(abc, {"B"});

                acc.record(linalg::max_abs(rho_ab.matrix -
                                           detail::explicit_rho_ab(sys.eta_plus, sys.xi_plus)),
                           w, l);
                acc.record(linalg::max_abs(rho_ac.matrix -
                                           detail::explicit_rho_ac(sys.eta_plus, sys.xi_plus)),
                           w, l);
                ComplexMatrix c_expect(2);
                c_expect(0, 0) = sys.xi_plus * sys.xi_plus;
                c_expect(1, 1) = sys.eta_plus * sys.eta_plus;
                acc.record(linalg::max_abs(rho_c.matrix - c_expect), w, l);
                const ComplexMatrix half = 0.5 * ComplexMatrix::identity(2);
                acc.record(linalg::max_abs(rho_a.matrix - half), w, l);
                acc.record(linalg::max_abs(rho_b.matrix - half), w, l);
            }
        } catch (const Error& e) {
            acc.fail(e.what());
        }
        report.checks.push_back(acc.check);
    }

    // -- EUR identities over the 200-point grid --
    {
        detail::CheckAccum equality("EUR equality |lhs - rhs| <= tol", opt.equality_tolerance);
        detail::CheckAccum inequality("EUR inequality lhs - rhs >= -tol", opt.equality_tolerance);
        detail::CheckAccum szc("S(Z|C)=1", 1e-9);
        detail::CheckAccum sac("S(rho_AC)=1", 1e-9);
        detail::CheckAccum hzc("H(Z:C)=0", 1e-9);
        detail::CheckAccum sab_sum("S(A|B)+S(A|C)=0", 1e-9);
        detail::CheckAccum mi_sum("I(A:B)+I(A:C)=2", 1e-9);
        detail::CheckAccum dev_check("numeric matches analytic (all fields)", 1e-8);
        detail::CheckAccum bi("bipartite EUR gap >= -tol", opt.equality_tolerance);
        detail::CheckAccum wit("witness protocol matches closed form", 1e-9);
        try {
            for (const auto& [w, l] : grid200) {
                qi::EurReport rep;
                if (opt.corrupt_hamiltonian_sign) {
                    const CVector g = fock::ground_state(detail::verify_params(w, l, opt));
                    rep = qi::tripartite_eur(qi::permute_subsystems(
                        qi::pure_state(g, {2, 2, 2}, {"B", "A", "C"}), {"A", "B", "C"}));
                    rep.analytic = qi::analytic_quantities(w, l);
                } else {
                    rep = qi::eur_report(w, l);
                }
                equality.record(std::abs(rep.gap), w, l);
                inequality.record(std::max(0.0, rep.rhs - rep.lhs), w, l);
                szc.record(std::abs(rep.numeric.s_Z_given_C - 1.0), w, l);
                sac.record(std::abs(rep.numeric.s_rho_AC - 1.0), w, l);
                hzc.record(std::abs(rep.numeric.h_ZC), w, l);
                sab_sum.record(std::abs(rep.numeric.s_A_given_B + rep.numeric.s_A_given_C), w, l);
                mi_sum.record(std::abs(rep.numeric.i_AB + rep.numeric.i_AC - 2.0), w, l);
                dev_check.record(qi::max_numeric_deviation(rep), w, l);
                bi.record(std::max(0.0, -rep.bipartite_gap), w, l);

                const auto wr = witness::quantum_witness(w, l);
                wit.record(std::abs(wr.witness - wr.analytic_witness), w, l);
            }
        } catch (const Error& e) {
            equality.fail(e.what());
        }
        for (auto* acc : {&equality, &inequality, &szc, &sac, &hzc, &sab_sum, &mi_sum,
                          &dev_check, &bi, &wit}) {
            report.checks.push_back(acc->check);
        }
    }

    // -- monotone ordering of S(rho^X_AB), matching the figure captions --
    {
        detail::CheckAccum acc("S(rho^X_AB) monotone (down in omega, up in lambda)", 1e-12);
        try {
            const auto lam_grid = grid_points(Range{1e-3, 1.0, 25}, Scale::log);
            for (double fixed : {1e-2, 1e-1, 1.0}) {
                double prev_up = -1.0;
                for (double l : lam_grid) {
                    const double s = qi::analytic_quantities(fixed, l).s_rhoX_AB;
                    acc.record(std::max(0.0, prev_up - s), fixed, l);
                    prev_up = s;
                }
                double prev_down = 3.0;
                for (double w : lam_grid) {
                    const double s = qi::analytic_quantities(w, fixed).s_rhoX_AB;
                    acc.record(std::max(0.0, s - prev_down), w, fixed);
                    prev_down = s;
                }
            }
        } catch (const Error& e) {
            acc.fail(e.what());
        }
        report.checks.push_back(acc.check);
    }

    // -- witness bounds and limits --
    {
        detail::CheckAccum acc("witness within [1/8, 1/4] and reaches both limits", 1e-3);
        try {
            for (const auto& [w, l] : grid100) {
                const double v = witness::analytic_witness(w, l);
                acc.record(std::max(0.0, 0.125 - v), w, l);
                acc.record(std::max(0.0, v - 0.25), w, l);
            }
            acc.record(std::abs(witness::quantum_witness(1e3, 1.0).witness - 0.25), 1e3, 1.0);
            acc.record(std::abs(witness::quantum_witness(1e-3, 1.0).witness - 0.125), 1e-3, 1.0);
        } catch (const Error& e) {
            acc.fail(e.what());
        }
        report.checks.push_back(acc.check);
    }

    // -- bipartite saturation on a maximally entangled reference state --
    {
        detail::CheckAccum acc("bipartite EUR saturates on a Bell state", 1e-9);
        try {
            const double r = 1.0 / std::numbers::sqrt2;
            const CVector bell{r, 0.0, 0.0, r};
            const auto rho = qi::pure_state(bell, {2, 2}, {"A", "B"});
            const auto eur = qi::bipartite_eur(rho);
            acc.record(std::abs(eur.gap), 0.0, 0.0);
        } catch (const Error& e) {
            acc.fail(e.what());
        }
        report.checks.push_back(acc.check);
    }

    // -- structural identities of the density-matrix toolbox --
    {
        detail::CheckAccum acc("partial trace consistent and relabel-invariant", 1e-12);
        try {
            for (std::size_t k = 0; k < grid100.size(); k += 20) {
                const auto [w, l] = grid100[k];
                const auto abc = qi::ground_state_abc(w, l);
                const auto direct = qi::partial_trace(abc, {"A"});
                const auto stepwise =
                    qi::partial_trace(qi::partial_trace(abc, {"A", "C"}), {"A"});
                acc.record(linalg::max_abs(direct.matrix - stepwise.matrix), w, l);

                const auto shuffled = qi::permute_subsystems(abc, {"C", "A", "B"});
                acc.record(std::abs(qi::von_neumann_entropy(qi::partial_trace(abc, {"A", "B"})) -
                                    qi::von_neumann_entropy(
                                        qi::partial_trace(shuffled, {"A", "B"}))),
                           w, l);
            }
        } catch (const Error& e) {
            acc.fail(e.what());
        }
        report.checks.push_back(acc.check);
    }

    return report;
}

}  // namespace majeur::sweep
