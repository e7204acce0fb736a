#include <doctest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "generators.hpp"
#include "lgrowth/cli.hpp"

using namespace lgrowth;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        std::random_device rd;
        path = fs::temp_directory_path() / ("lgrowth_test_" + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("angles") {
    CHECK(cli::parse_angle("pi/8") == kPi / 8);
    CHECK(cli::parse_angle("3pi/8") == 3 * kPi / 8);
    CHECK(cli::parse_angle("3*pi/8") == 3 * kPi / 8);
    CHECK(cli::parse_angle("pi") == kPi);
    CHECK(cli::parse_angle("0.39") == 0.39);
    CHECK(cli::parse_angle(" 1e-1 ") == 0.1);
    CHECK(cli::parse_angle("2 pi") == 2 * kPi);
    for (const char* bad : {"pie/8", "", "pi/0", "abc", "pi/8x", "pi pi", "nan", "inf"})
        CHECK_THROWS_AS(cli::parse_angle(bad), cli::UsageError);
}

TEST_CASE("grids") {
    const auto g = cli::parse_grid("0.1:0.5:5");
    REQUIRE(g.size() == 5);
    CHECK(g.front() == 0.1);
    CHECK(g.back() == 0.5);
    CHECK(cli::parse_grid("pi/8:pi/4:1") == std::vector<double>{kPi / 8});
    for (const char* bad : {"0.1:0.5:0", "1:2", "a:b:3", "0.1:0.5:-2", "0.1:0.5:2.5"})
        CHECK_THROWS_AS(cli::parse_grid(bad), cli::UsageError);
}

TEST_CASE("number formatting reads back exactly") {
    CHECK(cli::format_double(0.1) == "0.10000000000000001");
    CHECK(cli::format_double(1.0) == "1");
    gen::Source src(21);
    for (int i = 0; i < 1000; ++i) {
        const double x = src.uniform(-10, 10) * std::pow(10.0, src.integer(-30, 30));
        CHECK(std::stod(cli::format_double(x)) == x);
    }
}

TEST_CASE("trace CSV round trip is bit exact") {
    const MapFamily f = MapFamily::two_petal(kPi / 8, kPi / 16);
    const BoundaryTrace t = boundary_trace(f, TimeState::make(1.7, 0.3), 256);
    std::ostringstream out;
    cli::write_trace_csv(out, t);
    const std::string text = out.str();
    CHECK(text.rfind("phi,x,y\n", 0) == 0);
    CHECK(text.find('\r') == std::string::npos);
    std::istringstream in(text);
    const BoundaryTrace back = cli::read_trace_csv(in);
    CHECK_FALSE(back.family.has_value());
    REQUIRE(back.samples.size() == t.samples.size());
    for (std::size_t j = 0; j < t.samples.size(); ++j) {
        CHECK(std::memcmp(&back.samples[j].phi, &t.samples[j].phi, sizeof(double)) == 0);
        CHECK(back.samples[j].z == t.samples[j].z);
    }
}

TEST_CASE("malformed trace CSV") {
    for (const char* bad : {"", "x,y\n1,2\n", "phi,x,y\n1,2\n", "phi,x,y\n1,2,three\n"}) {
        std::istringstream in(bad);
        CHECK_THROWS_AS(cli::read_trace_csv(in), cli::UsageError);
    }
}

TEST_CASE("report JSON keeps check order") {
    VerificationReport r;
    r.add("zeta", 1e-9, 1e-6);
    r.add("alpha", 2.0, 1.0);
    r.add_error("mid", 1e-3, "boom");
    const std::string s = cli::report_json(r);
    CHECK(s.find("\"zeta\"") < s.find("\"alpha\""));
    CHECK(s.find("\"alpha\"") < s.find("\"mid\""));
    const auto j = nlohmann::json::parse(s);
    CHECK(j["zeta"]["pass"] == true);
    CHECK(j["alpha"]["pass"] == false);
    CHECK(j["mid"]["residual"].is_null());
    CHECK(j["mid"]["error"] == "boom");
}

TEST_CASE("trace command") {
    TempDir dir;
    const Run a = run_cli({"trace", "--family", "two-petal", "--alpha", "pi/8", "--beta", "pi/16", "--n", "64",
                           "--out", dir / "a.csv", "--svg", dir / "a.svg"});
    CHECK(a.code == cli::kExitOk);
    const std::string csv = slurp(dir / "a.csv");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 65);
    CHECK(slurp(dir / "a.svg").find("<svg") != std::string::npos);
    const auto side = nlohmann::json::parse(slurp(dir / "a.json"));
    CHECK(side["warning"] == false);
    CHECK(side["conformal"] == true);
    CHECK(side["n"] == 64);

    // identical configuration, identical bytes
    run_cli({"trace", "--family", "two-petal", "--alpha", "pi/8", "--beta", "pi/16", "--n", "64", "--out",
             dir / "b.csv"});
    CHECK(slurp(dir / "b.csv") == csv);
    CHECK(slurp(dir / "b.json") == slurp(dir / "a.json"));

    // default sample count
    const Run d = run_cli({"trace", "--alpha", "pi/4", "--out", "-"});
    CHECK(d.code == 0);
    CHECK(std::count(d.out.begin(), d.out.end(), '\n') == 2049);
}

TEST_CASE("trace of a non-conformal family warns") {
    TempDir dir;
    const Run r = run_cli({"trace", "--family", "two-petal", "--alpha", "pi/8", "--beta", "pi/6", "--n", "64",
                           "--out", dir / "bad.csv"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.err.find("warning") != std::string::npos);
    const auto side = nlohmann::json::parse(slurp(dir / "bad.json"));
    CHECK(side["warning"] == true);
    CHECK(side["conformal"] == false);
}

TEST_CASE("verify command exit codes") {
    const Run ok = run_cli({"verify", "--alpha", "pi/4", "--report", "-"});
    CHECK(ok.code == cli::kExitOk);
    const auto j = nlohmann::ordered_json::parse(ok.out);
    CHECK(j.size() == 13);
    CHECK(j.begin().key() == "ode_residual");

    CHECK(run_cli({"verify", "--family", "two-petal", "--alpha", "pi/8", "--beta", "pi/6"}).code ==
          cli::kExitCheckFailed);
    CHECK(run_cli({"verify", "--alpha", "pi/4", "--tol-override", "m_plus=1e-15"}).code == cli::kExitCheckFailed);
    CHECK(run_cli({"verify", "--alpha", "pi/4", "--tol-override", "m_plus=1"}).code == cli::kExitOk);
    CHECK(run_cli({"verify", "--alpha", "pi/4", "--tol-override", "bogus=1"}).code == cli::kExitUsage);
    CHECK(run_cli({"verify", "--alpha", "pi/4", "--tol-override", "m_plus"}).code == cli::kExitUsage);
    CHECK(run_cli({"verify", "--alpha", "2"}).code == cli::kExitUsage);
    CHECK(run_cli({"verify", "--family", "three-petal", "--alpha", "pi/4"}).code == cli::kExitUsage);
    CHECK(run_cli({"verify", "--family", "two-petal", "--alpha", "pi/8"}).code == cli::kExitUsage);
    CHECK(run_cli({"verify", "--alpha", "pi/4", "--T", "-1"}).code == cli::kExitUsage);
}

TEST_CASE("sweep command") {
    const Run r = run_cli({"sweep", "--alpha-grid", "pi/4:pi/4:1", "--beta-grid", "0.2:pi/4:3", "--out", "-"});
    CHECK(r.code == cli::kExitOk);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "alpha,beta,winding,conformal,degenerate");
    std::vector<std::string> rows;
    while (std::getline(in, line)) rows.push_back(line);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].substr(rows[0].size() - 4) == ",1,0");
    CHECK(rows[2].back() == '1');
    CHECK(run_cli({"sweep", "--alpha-grid", "0.1:0.5:0", "--beta-grid", "0.1:0.5:3"}).code == cli::kExitUsage);
    CHECK(run_cli({"sweep", "--beta-grid", "0.1:0.5:3"}).code == cli::kExitUsage);
}

TEST_CASE("moments command") {
    TempDir dir;
    // half-disk test domain written as a trace file
    {
        std::ofstream f(dir / "disk.csv", std::ios::binary);
        cli::write_trace_csv(f, half_disk_trace(1 << 14));
    }
    const Run r = run_cli({"moments", "--trace", dir / "disk.csv", "--tk", "6", "--z", "0,0.5"});
    CHECK(r.code == cli::kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["moments"].size() == 5);
    for (const auto& m : j["moments"]) {
        CHECK(std::abs(m["contour"].get<double>() - m["area"].get<double>()) < 1e-4);
        if (m["k"].get<int>() % 2 == 0) CHECK(std::abs(m["contour"].get<double>()) < 1e-10);
    }

    const Run lem = run_cli({"moments", "--alpha", "pi/4", "--z", "0,0.8"});
    CHECK(lem.code == cli::kExitOk);
    const auto l = nlohmann::json::parse(lem.out);
    CHECK(std::abs(l["m_plus"][0]["m_plus"][0].get<double>() - 1.8) < 1e-3);

    // petal traces touch the origin
    const Run petal = run_cli({"moments", "--alpha", "pi/8", "--tk", "4"});
    CHECK(petal.code == cli::kExitRuntime);
    CHECK(petal.err.find("ill-defined") != std::string::npos);
    run_cli({"trace", "--alpha", "pi/8", "--n", "256", "--out", dir / "petal.csv"});
    CHECK(run_cli({"moments", "--trace", dir / "petal.csv", "--tk", "4"}).code == cli::kExitRuntime);

    CHECK(run_cli({"moments", "--trace", dir / "missing.csv"}).code != cli::kExitOk);
    CHECK(run_cli({"moments", "--alpha", "pi/4", "--tk", "1"}).code == cli::kExitUsage);
    CHECK(run_cli({"moments", "--alpha", "pi/4", "--z", "0;0.8"}).code == cli::kExitUsage);
}

TEST_CASE("usage errors") {
    CHECK(run_cli({}).code == cli::kExitUsage);
    CHECK(run_cli({"bogus"}).code == cli::kExitUsage);
    CHECK(run_cli({"trace", "--alpha", "pie/8"}).code == cli::kExitUsage);
    CHECK(run_cli({"trace", "--alpha", "pi/8", "--wat"}).code == cli::kExitUsage);
    CHECK(run_cli({"trace", "--alpha", "pi/8", "--n", "7"}).code == cli::kExitUsage);
    const Run h = run_cli({"--help"});
    CHECK(h.code == cli::kExitOk);
    CHECK(h.out.find("verify") != std::string::npos);
}
