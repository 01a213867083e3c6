#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bcsee/errors.hpp"
#include "bcsee/io.hpp"
#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

TEST_SUITE("io") {
  TEST_CASE("grid parsing") {
    const auto g = bcsee::parse_grid("-5:5:101");
    CHECK(g.min == -5.0);
    CHECK(g.max == 5.0);
    CHECK(g.points == 101);
    CHECK(bcsee::parse_grid("1e-3:2.5e2:7").max == 250.0);
    CHECK_THROWS_AS(bcsee::parse_grid("-5:5"), bcsee::InputError);
    CHECK_THROWS_AS(bcsee::parse_grid("-5:5:10:1"), bcsee::InputError);
    CHECK_THROWS_AS(bcsee::parse_grid("a:5:10"), bcsee::InputError);
    CHECK_THROWS_AS(bcsee::parse_grid("0:5:2.5"), bcsee::InputError);
    CHECK_THROWS_AS(bcsee::parse_grid("0:5x:3"), bcsee::InputError);
  }

  TEST_CASE("linear grid") {
    const auto xs = bcsee::make_grid({-5.0, 5.0, 101});
    REQUIRE(xs.size() == 101);
    CHECK(xs.front() == -5.0);
    CHECK(xs.back() == 5.0);
    CHECK(xs[50] == 0.0);
    CHECK_THROWS_AS(bcsee::make_grid({0.0, 1.0, 1}), bcsee::InputError);
    CHECK_THROWS_AS(bcsee::make_grid({1.0, 1.0, 5}), bcsee::InputError);
  }

  TEST_CASE("log-symmetric grid") {
    bcsee::GridSpec g{-100.0, 100.0, 11, bcsee::GridSpacing::log_symmetric, 0.01};
    const auto xs = bcsee::make_grid(g);
    REQUIRE(xs.size() == 11);
    CHECK(xs.front() == -100.0);
    CHECK(xs[5] == 0.0);
    CHECK(xs[6] == doctest::Approx(0.01));
    CHECK(xs.back() == 100.0);
    for (std::size_t i = 1; i < xs.size(); ++i) CHECK(xs[i] > xs[i - 1]);
    for (std::size_t i = 0; i < 5; ++i) CHECK(xs[i] == -xs[10 - i]);

    g.points = 10;
    const auto even = bcsee::make_grid(g);
    CHECK(even.size() == 10);
    CHECK(std::find(even.begin(), even.end(), 0.0) == even.end());

    g.min = 1.0;
    CHECK_THROWS_AS(bcsee::make_grid(g), bcsee::InputError);
  }

  TEST_CASE("number formatting round-trips") {
    for (double x : {0.1, 1.0 / 3.0, 3.1404523048371198, -2.7755575615628914e-17, 1e300}) {
      CHECK(std::stod(bcsee::format_number(x)) == x);
    }
    CHECK(bcsee::format_number(INFINITY) == "inf");
    CHECK(bcsee::format_number(-INFINITY) == "-inf");
    CHECK(bcsee::format_number(NAN) == "nan");
  }

  TEST_CASE("csv and json carry the same numbers") {
    bcsee::Table t{{"a", "b"}, {{1.0, 0.1}, {2.0, INFINITY}}};
    std::ostringstream csv;
    bcsee::write_csv(csv, t);
    CHECK(csv.str() == "a,b\n1,0.10000000000000001\n2,inf\n");

    std::ostringstream js;
    bcsee::write_json(js, t, {{"command", std::string("x")}, {"n", std::int64_t{3}}});
    const auto doc = nlohmann::json::parse(js.str());
    CHECK(doc["config"]["command"] == "x");
    CHECK(doc["rows"].size() == 2);
    CHECK(doc["rows"][0]["b"].get<double>() == 0.1);
    CHECK(doc["rows"][1]["b"].is_null());
    CHECK(t.column("b") == 1);
    CHECK_THROWS_AS(t.column("c"), bcsee::InputError);
  }

  TEST_CASE("DOS table loading") {
    const auto dir = fs::temp_directory_path() / "bcsee_io_test";
    fs::create_directories(dir);
    {
      std::ofstream(dir / "with_header.csv") << "xi,g\n-2,1\n0,2\n# note\n2,3\n";
      std::ofstream(dir / "bare.csv") << "-1, 1\r\n1, 1\r\n";
      std::ofstream(dir / "bad.csv") << "xi,g\n0,1\nx,y\n";
      std::ofstream(dir / "one_col.csv") << "0\n1\n";
    }
    const auto d = bcsee::load_dos_csv(dir / "with_header.csv");
    CHECK(d.kind() == bcsee::DosKind::tabulated);
    CHECK(d.evaluate(1.0) == doctest::Approx(2.5));
    CHECK(bcsee::load_dos_csv(dir / "bare.csv").evaluate(0.0) == 1.0);
    CHECK_THROWS_AS(bcsee::load_dos_csv(dir / "bad.csv"), bcsee::InputError);
    CHECK_THROWS_AS(bcsee::load_dos_csv(dir / "one_col.csv"), bcsee::InputError);
    CHECK_THROWS_AS(bcsee::load_dos_csv(dir / "missing.csv"), bcsee::InputError);
    fs::remove_all(dir);
  }
}
