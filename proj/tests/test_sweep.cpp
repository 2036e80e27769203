#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "majeur/sweep.hpp"

using namespace majeur;
using sweep::Mode;
using sweep::Range;
using sweep::Scale;
using sweep::SweepConfig;
using Catch::Approx;

namespace {

std::vector<std::vector<double>> parse_csv(const std::string& text, std::string* header = nullptr) {
    std::vector<std::vector<double>> rows;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (first) {
            if (header) *header = line;
            first = false;
            continue;
        }
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream out;
    out << f.rdbuf();
    return out.str();
}

}  // namespace

TEST_CASE("config validation") {
    SweepConfig cfg;
    cfg.mode = Mode::grid;
    cfg.fixed_values = {0.5};
    cfg.range = Range{0.1, 1.0, 1};
    CHECK_THROWS_AS(sweep::validate(cfg), ConfigError);

    cfg.range = Range{1.0, 0.1, 10};
    CHECK_THROWS_AS(sweep::validate(cfg), ConfigError);

    cfg.range = Range{0.0, 1.0, 10};
    cfg.scale = Scale::log;
    CHECK_THROWS_AS(sweep::validate(cfg), ConfigError);

    cfg.scale = Scale::linear;
    CHECK_NOTHROW(sweep::validate(cfg));

    CHECK_THROWS_AS(sweep::mode_from_name("fig9"), ConfigError);
    CHECK(sweep::mode_from_name("fig2-top") == Mode::fig2_top);
}

TEST_CASE("grid points hit both endpoints") {
    const auto log_pts = sweep::grid_points(Range{1e-3, 1.0, 7}, Scale::log);
    REQUIRE(log_pts.size() == 7);
    CHECK(log_pts.front() == 1e-3);
    CHECK(log_pts.back() == 1.0);
    for (std::size_t i = 1; i < log_pts.size(); ++i) CHECK(log_pts[i] > log_pts[i - 1]);

    const auto lin_pts = sweep::grid_points(Range{0.0, 2.0, 5}, Scale::linear);
    CHECK(lin_pts[2] == Approx(1.0).margin(1e-15));
}

TEST_CASE("csv values carry full double precision") {
    const double v = 0.72360679774997905;
    const std::string s = sweep::format_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
    CHECK(s.find(',') == std::string::npos);
}

TEST_CASE("sweep csv is byte-deterministic") {
    SweepConfig cfg;
    cfg.mode = Mode::grid;
    cfg.fixed_values = {0.3, 0.6};
    cfg.range = Range{0.01, 1.0, 5};
    cfg.scale = Scale::log;

    const std::string a = sweep::sweep_csv(cfg);
    const std::string b = sweep::sweep_csv(cfg);
    CHECK(a == b);

    const auto path1 = std::filesystem::temp_directory_path() / "majeur_sweep_a.csv";
    const auto path2 = std::filesystem::temp_directory_path() / "majeur_sweep_b.csv";
    cfg.output_path = path1.string();
    sweep::run_sweep(cfg);
    cfg.output_path = path2.string();
    sweep::run_sweep(cfg);
    CHECK(slurp(path1) == slurp(path2));
    CHECK(slurp(path1) == a);
    std::filesystem::remove(path1);
    std::filesystem::remove(path2);
}

TEST_CASE("sweep csv layout and row order") {
    SweepConfig cfg;
    cfg.mode = Mode::grid;
    cfg.fixed_values = {0.2, 0.5};
    cfg.range = Range{0.1, 1.0, 3};
    cfg.scale = Scale::linear;

    std::string header;
    const auto rows = parse_csv(sweep::sweep_csv(cfg), &header);
    CHECK(header ==
          "omega,lambda,A,S_rhoX_AB,S_XgB,S_ZgC,S_AgB,S_AgC,I_AB,I_AC,H_XB,H_ZC,delta,"
          "lhs,rhs,gap,witness,max_numeric_dev");
    REQUIRE(rows.size() == 6);  // 3 grid points x 2 fixed values
    REQUIRE(rows[0].size() == 18);

    // swept parameter (lambda) ascending, fixed values in configured order
    CHECK(rows[0][1] == Approx(0.1));
    CHECK(rows[0][0] == Approx(0.2));
    CHECK(rows[1][0] == Approx(0.5));
    CHECK(rows[2][1] == Approx(0.55));
    CHECK(rows[4][1] == Approx(1.0));

    for (const auto& row : rows) {
        CHECK(std::abs(row[15]) <= 1e-9);   // gap
        CHECK(row[17] <= 1e-8);             // max numeric deviation
        CHECK(std::abs(row[5] - 1.0) <= 1e-9);  // S(Z|C) column
    }
}

TEST_CASE("minimal two-point grid stays valid") {
    SweepConfig cfg;
    cfg.mode = Mode::grid;
    cfg.fixed_values = {0.5};
    const double stop = 0.5, eps = 1e-9;
    cfg.range = Range{stop - eps, stop, 2};
    cfg.scale = Scale::linear;
    const auto rows = parse_csv(sweep::sweep_csv(cfg));
    REQUIRE(rows.size() == 2);
    CHECK(rows[0][1] == Approx(stop - eps));
    CHECK(rows[1][1] == Approx(stop));
}

TEST_CASE("fig2-top ordering and plateau") {
    SweepConfig cfg;
    cfg.mode = Mode::fig2_top;
    cfg.range = Range{1e-4, 1.0, 31};

    const auto rows = parse_csv(sweep::sweep_csv(cfg));
    REQUIRE(rows.size() == 31u * 7u);

    // Within each grid point the fixed omegas appear in caption order
    // (1e-3, 0.1, ..., 0.6): entropy decreases as omega grows.
    for (std::size_t g = 0; g < 31; ++g) {
        for (std::size_t k = 1; k < 7; ++k) {
            const double prev = rows[g * 7 + k - 1][3];
            const double cur = rows[g * 7 + k][3];
            REQUIRE(cur <= prev + 1e-12);
        }
    }
    // For the smallest fixed omega the entropy is non-decreasing in lambda
    // and reaches the maximal plateau 2.
    double prev = -1.0;
    for (std::size_t g = 0; g < 31; ++g) {
        const double s = rows[g * 7][3];
        REQUIRE(s >= prev - 1e-12);
        prev = s;
    }
    CHECK(rows[30 * 7][3] >= 2.0 - 1e-5);
    // At the strongest fixed omega and weakest coupling the entropy sits on
    // the minimal plateau 1.
    CHECK(rows[6][3] <= 1.0 + 1e-5);
}

TEST_CASE("fig3 holevo plateaus") {
    SweepConfig cfg;
    cfg.mode = Mode::fig3_right;  // sweeps omega at fixed lambda
    cfg.range = Range{1e-4, 1.0, 21};
    const auto rows = parse_csv(sweep::sweep_csv(cfg));
    REQUIRE(rows.size() == 21u * 7u);
    // H(X:B) column: -> 0 for script_A -> 0 (small omega, lambda = 1)
    CHECK(rows[0][10] <= 1e-4);
    // -> 1 for script_A -> 1 (omega = 1, lambda = 1e-4)
    CHECK(rows[20 * 7 + 6][10] >= 1.0 - 1e-4);
}

TEST_CASE("witness scan csv") {
    SweepConfig cfg;
    cfg.mode = Mode::witness;
    cfg.range = Range{1e-3, 1e3, 25};

    std::string header;
    const auto rows = parse_csv(sweep::witness_csv(cfg), &header);
    CHECK(header == "ratio,witness_numeric,witness_analytic,deviation");
    REQUIRE(rows.size() == 25);

    double prev = 0.0;
    for (const auto& row : rows) {
        CHECK(row[3] <= 1e-9);
        CHECK(row[2] >= prev);
        prev = row[2];
    }
    CHECK(rows.front()[1] == Approx(0.125).margin(1e-3));
    CHECK(rows.back()[1] == Approx(0.25).margin(1e-3));

    CHECK(sweep::witness_csv(cfg) == sweep::witness_csv(cfg));
}

TEST_CASE("sweep rejects non-sweep modes and bad io") {
    SweepConfig cfg;
    cfg.mode = Mode::verify;
    CHECK_THROWS_AS(sweep::sweep_csv(cfg), ConfigError);

    SweepConfig io;
    io.mode = Mode::grid;
    io.fixed_values = {0.5};
    io.range = Range{0.1, 1.0, 2};
    io.output_path = "/nonexistent_dir_majeur/out.csv";
    CHECK_THROWS_AS(sweep::run_sweep(io), IoError);
}

TEST_CASE("verify passes on the default configuration") {
    const auto report = sweep::run_verify();
    const std::string text = report.to_string();
    INFO(text);
    CHECK(report.all_passed());
    CHECK(text.find("S(Z|C)=1: PASS") != std::string::npos);
    CHECK(text.find("FAIL") == std::string::npos);
    // every check line carries its worst deviation and location
    CHECK(text.find("worst") != std::string::npos);
}

TEST_CASE("verify flags a corrupted Hamiltonian sign") {
    sweep::VerifyOptions opt;
    opt.corrupt_hamiltonian_sign = true;
    const auto report = sweep::run_verify(opt);
    const std::string text = report.to_string();
    INFO(text);
    CHECK_FALSE(report.all_passed());
    CHECK(text.find("SectorMismatch") != std::string::npos);
}
