// Deterministic emission: fixed float formatting, frozen CSV schema,
// atomic output files.

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "polytunnel/errors.hpp"
#include "polytunnel/io.hpp"

using namespace polytunnel;

namespace {

ZenoAnalysis small_sweep() {
    SweepSpec s;
    s.mass = constants::electron_mass_ev_fs2_nm2;
    s.energy = 5.5;
    s.barrier_height = 9.7;
    s.barrier_width = 1.0;
    s.n_min = 8;
    s.n_max = 12;
    return sweep_mu0(s);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("format_g17: 17 significant digits, C locale") {
    CHECK(io::format_g17(0.125) == "0.125");
    CHECK(io::format_g17(1.0 / 3.0) == "0.33333333333333331");
    CHECK(io::format_g17(4.887198501361716e-09) == "4.8871985013617161e-09");
    CHECK(io::format_g17(1.0) == "1");
}

TEST_CASE("sweep CSV: frozen header and schema") {
    const std::string csv = io::csv_sweep(small_sweep());
    std::istringstream lines(csv);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "N,mu0_nm,T,R,time_fs,region");

    std::string first;
    std::getline(lines, first);
    CHECK(first.starts_with("8,0.125,"));
    CHECK(first.ends_with(",Minimum"));

    // one row per record, LF endings only
    int rows = 0;
    std::string line;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == 4);
    CHECK(csv.find('\r') == std::string::npos);
}

TEST_CASE("emission is byte-deterministic") {
    const ZenoAnalysis a = small_sweep();
    CHECK(io::csv_sweep(a) == io::csv_sweep(a));
    CHECK(io::json_sweep(a) == io::json_sweep(a));
}

TEST_CASE("sweep JSON carries minimum, band and records") {
    const std::string j = io::json_sweep(small_sweep());
    CHECK(j.find("\"minimum\"") != std::string::npos);
    CHECK(j.find("\"fs_band\"") != std::string::npos);
    CHECK(j.find("\"records\"") != std::string::npos);
    CHECK(j.find("\"Minimum\"") != std::string::npos);
}

TEST_CASE("atomic_write creates and replaces files") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "polytunnel_io_test";
    fs::create_directories(dir);
    const fs::path target = dir / "out.csv";

    io::atomic_write(target.string(), "one\n");
    CHECK(slurp(target) == "one\n");
    io::atomic_write(target.string(), "two\n");
    CHECK(slurp(target) == "two\n");
    CHECK_FALSE(fs::exists(target.string() + ".tmp"));
    fs::remove_all(dir);
}

TEST_CASE("atomic_write reports unwritable targets") {
    try {
        io::atomic_write("/nonexistent-dir-xyz/out.csv", "data");
        FAIL("expected IoError");
    } catch (const Error& e) {
        CHECK(e.code() == errc::io_failure);
    }
}
