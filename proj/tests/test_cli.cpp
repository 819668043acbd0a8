#include <doctest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <random>
#include <sstream>
#include <unistd.h>

#include "cli.hpp"
#include "cosc/format.hpp"

using namespace cosc;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "cosc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("cosc_test_" + std::to_string(::getpid())) / name;
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("complex literal grammar") {
  CHECK(parse_complex("2+1i") == cplx(2.0, 1.0));
  CHECK(parse_complex("-0.5i") == cplx(0.0, -0.5));
  CHECK(parse_complex("3") == cplx(3.0, 0.0));
  CHECK(parse_complex("i") == cplx(0.0, 1.0));
  CHECK(parse_complex("-i") == cplx(0.0, -1.0));
  CHECK(parse_complex("1e-3-2.5e1i") == cplx(1e-3, -25.0));
  CHECK(parse_complex("0.8+0.5j") == cplx(0.8, 0.5));
  CHECK(parse_complex("\xE2\x88\x92" "0.5i") == cplx(0.0, -0.5));
  CHECK(parse_complex(" 1 - 2i ") == cplx(1.0, -2.0));
  CHECK_THROWS_AS(parse_complex("abc"), Error);
  CHECK_THROWS_AS(parse_complex(""), Error);
  CHECK_THROWS_AS(parse_complex("1+2"), Error);
}

TEST_CASE("complex literals round-trip bit for bit") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const cplx z(u(rng) * std::pow(10.0, 20 * u(rng)), u(rng) * std::pow(10.0, 20 * u(rng)));
    const cplx back = parse_complex(format_complex(z));
    CHECK(std::memcmp(&back, &z, sizeof z) == 0);
  }
}

TEST_CASE("angles and grids") {
  CHECK(parse_angle("pi/6") == doctest::Approx(std::numbers::pi / 6.0));
  CHECK(parse_angle("2pi/7") == doctest::Approx(2.0 * std::numbers::pi / 7.0));
  CHECK(parse_angle("0.5*pi") == doctest::Approx(std::numbers::pi / 2.0));
  CHECK(parse_angle("0.25") == 0.25);
  CHECK_THROWS_AS(parse_angle("pi*2"), Error);
  const cli::GridSpec g = cli::parse_grid("-3:4.5:100");
  CHECK(g.min == -3.0);
  CHECK(g.max == 4.5);
  CHECK(g.points == 100);
  CHECK_THROWS_AS(cli::parse_grid("1:2"), Error);
  CHECK_THROWS_AS(cli::parse_grid("1:2:3:4"), Error);
  CHECK_THROWS_AS(cli::parse_grid("1:2:x"), Error);
}

TEST_CASE("spectrum listings") {
  const Run even = run_cli({"spectrum", "--seed", "bound-even:1"});
  REQUIRE(even.code == 0);
  const auto rows = parse_csv(even.out);
  CHECK(rows[0] == std::vector<std::string>{"index", "status", "re", "im"});
  int deleted = 0;
  for (const auto& r : rows)
    if (r[1] == "deleted") {
      ++deleted;
      CHECK(r[0] == "2");
    }
  CHECK(deleted == 1);

  const Run ams = run_cli({"spectrum", "--seed", "ams", "--nu", "0.6+0.3i", "--levels", "2"});
  REQUIRE(ams.code == 0);
  const auto arows = parse_csv(ams.out);
  CHECK(arows.size() == 4);
  CHECK(arows[1][0] == "-1");
  CHECK(arows[1][1] == "created");
}

TEST_CASE("AMS potential at nu = 0 is the oscillator shifted by -omega") {
  const Run r = run_cli({"potential", "--seed", "ams", "--theta", "pi/6", "--grid=-4:4:33"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 34);
  const cplx w = std::polar(1.0, std::numbers::pi / 6.0);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double x = std::stod(rows[i][0]);
    const cplx v(std::stod(rows[i][1]), std::stod(rows[i][2]));
    CHECK(std::abs(v - (0.5 * w * w * x * x - w)) < 1e-12);
  }
}

TEST_CASE("singular rows are written as nan") {
  // At theta = 0 the seed 4x^2 - 2 vanishes at the grid ends +-1/sqrt(2).
  const Run r = run_cli({"potential", "--seed", "bound-even:1", "--theta", "0", "--grid",
                     "-0.7071067811865476:0.7071067811865476:16"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 17);
  CHECK(rows[1][1] == "nan");
  CHECK(rows[16][2] == "nan");
  CHECK(rows[8][1] != "nan");
}

TEST_CASE("validation errors exit with 1") {
  CHECK(run_cli({"potential", "--seed", "ams", "--theta", "pi/2"}).code == 1);
  CHECK(run_cli({"potential", "--seed", "ams", "--nu", "1.2"}).code == 1);
  CHECK(run_cli({"potential", "--seed", "general"}).code == 1);
  CHECK(run_cli({"potential", "--seed", "bound-odd:1", "--grid=-1:1:50"}).code == 1);
  CHECK(run_cli({"potential", "--seed", "ams", "--grid=-1:1:8"}).code == 1);
  CHECK(run_cli({"potential", "--seed", "wild"}).code == 1);
  CHECK(run_cli({"potential", "--preset", "fig11"}).code == 1);
  CHECK(run_cli({"potential", "--preset", "fig99"}).code == 1);
  CHECK(run_cli({}).code == 1);
  const Run deleted = run_cli({"states", "--seed", "bound-even:1", "--n", "0,2"});
  CHECK(deleted.code == 1);
  CHECK(deleted.err.find("DeletedLevel") != std::string::npos);
  CHECK(run_cli({"piv", "--seed", "ams", "--role", "2"}).code == 1);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("certification failures exit with 2") {
  const Run r = run_cli({"piv", "--seed", "ams", "--role", "1", "--grid=-4:4:40", "--tol-analytic",
                     "1e-30"});
  CHECK(r.code == 2);
  const Run ok = run_cli({"piv", "--seed", "ams", "--role", "1", "--grid=-4:4:40"});
  CHECK(ok.code == 0);
}

TEST_CASE("files, manifests and bit stability") {
  const fs::path dir = scratch("fig4");
  const Run r = run_cli({"states", "--preset", "fig4", "--out", dir.string()});
  REQUIRE(r.code == 0);
  for (const char* name : {"fig4_n0", "fig4_n1", "fig4_n3", "fig4_h0_n0"}) {
    REQUIRE(fs::exists(dir / (std::string(name) + ".csv")));
    std::ifstream ms(dir / (std::string(name) + ".manifest.json"));
    const auto m = nlohmann::json::parse(ms);
    CHECK(m["version"] == std::string(kVersion));
    CHECK(m["config"]["seed"] == "bound-even:1");
    CHECK(m["config"]["theta_text"] == "pi/6");
    CHECK(m["columns"] == nlohmann::json::array({"x", "density"}));
    CHECK(std::abs(m["integral"].get<double>() - 1.0) < 1e-6);
  }
  CHECK_FALSE(fs::exists(dir / "fig4_n2.csv"));

  const Run a = run_cli({"potential", "--preset", "fig9", "--grid=-3:3:64"});
  const Run b = run_cli({"potential", "--preset", "fig9", "--grid=-3:3:64"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("nan") == std::string::npos);
}

TEST_CASE("PIV preset reports") {
  const Run r = run_cli({"piv", "--preset", "fig12", "--grid=-8:8:161", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc["datasets"].size() == 3);
  for (const auto& d : doc["datasets"]) {
    CHECK(d["columns"] == nlohmann::json::array({"x", "re_g", "im_g"}));
    CHECK(d["meta"]["certified"] == true);
    CHECK(d["meta"]["role"] == 2);
    CHECK(d["meta"]["reports"][0]["max_residual"].get<double>() < 1e-6);
    CHECK(d["meta"]["asymptotic_decay"].contains("10"));
  }
}
