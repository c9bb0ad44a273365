#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>

#include "griff/io.hpp"
#include "griff/verify.hpp"

using griff::Rat;

TEST_CASE("strata parsing enforces the schema") {
  auto parse = [](const char* text) { return griff::parse_strata_json(griff::json::parse(text)); };

  auto fibers = parse(R"({"N": 3, "fibers": [
    {"components": [{"id": "E", "multiplicity": 2, "chi_open": 1},
                    {"id": "W", "multiplicity": 1, "chi_open": 5}],
     "pairs": [{"i": "E", "j": "W", "chi_open": 2}]}]})");
  REQUIRE(fibers.size() == 1);
  CHECK(fibers[0].N == 3);
  CHECK(fibers[0].components[0].multiplicity == 2);
  CHECK_FALSE(fibers[0].components[0].v.has_value());
  CHECK(griff::dnc_alpha_x(fibers[0]) == Rat(7, 12));

  // v and chern_integral are optional but parsed when present.
  auto with_v = parse(R"({"N": 2, "fibers": [
    {"components": [{"id": "A", "multiplicity": 1, "chi_open": 3, "v": -2,
                     "chern_integral": 0}], "pairs": []}]})");
  CHECK(with_v[0].components[0].v == -2);
  REQUIRE(with_v[0].components[0].chern_integral.has_value());
  CHECK(*with_v[0].components[0].chern_integral == Rat(0));
  CHECK(griff::dnc_alpha_x_z12(with_v[0]) == Rat(0));

  CHECK_THROWS_AS(parse(R"({"N": 2, "fibers": [], "bogus": 1})"), std::invalid_argument);
  CHECK_THROWS_AS(parse(R"({"fibers": []})"), std::invalid_argument);
  CHECK_THROWS_AS(parse(R"({"N": 2, "fibers": [{"components": [
    {"id": "A", "multiplicity": 1, "chi_open": 0, "extra": true}]}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse(R"({"N": 2, "fibers": [{"components": [
    {"id": "A", "multiplicity": "two", "chi_open": 0}]}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse(R"({"N": 2, "fibers": [{"components": [],
    "pairs": [{"i": "A", "j": "B", "chi_open": 0, "w": 1}]}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(griff::load_strata_file("/nonexistent/strata.json"), std::invalid_argument);
}

TEST_CASE("range parsing") {
  auto r = griff::TableRange::parse("2..5");
  CHECK(r.lo == 2);
  CHECK(r.hi == 5);
  CHECK(r.size() == 4);
  auto single = griff::TableRange::parse("7");
  CHECK(single.lo == 7);
  CHECK(single.hi == 7);
  CHECK_THROWS_AS(griff::TableRange::parse("5..2"), std::invalid_argument);
  CHECK_THROWS_AS(griff::TableRange::parse("x..y"), std::invalid_argument);
}

TEST_CASE("tables are deterministic across worker-pool widths") {
  auto d = griff::TableRange::parse("1..5");
  auto n = griff::TableRange::parse("1..4");
  setenv("GRIFF_MAX_THREADS", "1", 1);
  std::string serial_csv = griff::make_table("F", d, n).to_csv();
  std::string serial_json = griff::make_table("F", d, n).to_json();
  setenv("GRIFF_MAX_THREADS", "8", 1);
  CHECK(griff::make_table("F", d, n).to_csv() == serial_csv);
  CHECK(griff::make_table("F", d, n).to_json() == serial_json);
  unsetenv("GRIFF_MAX_THREADS");
  CHECK(griff::make_table("F", d, n).to_csv() == serial_csv);

  // 5 x 4 grid: header plus 20 rows, exact rational cells.
  CHECK(std::count(serial_csv.begin(), serial_csv.end(), '\n') == 21);
  CHECK(serial_csv.rfind("d,N,F_plus,F_minus,F_stab\n", 0) == 0);
  CHECK(serial_csv.find("3,2,1,1,1\n") != std::string::npos);
  auto f53 = griff::F_heights(5, 3);
  CHECK(serial_csv.find("5,3," + f53.F_plus.str() + "," + f53.F_minus.str() + "," +
                        f53.F_stab.str() + "\n") != std::string::npos);
}

TEST_CASE("other table families") {
  auto n = griff::TableRange::parse("1..3");
  auto d = griff::TableRange::parse("1..1");
  auto u = griff::make_table("u", d, n);
  CHECK(u.columns == std::vector<std::string>{"N", "u_minus", "u_plus"});
  CHECK(u.rows.size() == 3);
  CHECK(u.rows[2] == std::vector<std::string>{"3", "1/2", "-1/2"});
  auto v = griff::make_table("v", d, n);
  CHECK(v.rows[2] == std::vector<std::string>{"3", "-5/12", "7/12"});
  auto alpha = griff::make_table("alpha", d, n);
  CHECK(alpha.rows.size() == 1 + 2 + 3);
  CHECK(alpha.rows[0] == std::vector<std::string>{"1", "1", "1"});
  auto beta = griff::make_table("beta", d, n);
  CHECK(beta.rows[1] == std::vector<std::string>{"2", "-1", "-2"});
  CHECK_THROWS_AS(griff::make_table("zeta", d, n), std::invalid_argument);
}

TEST_CASE("height report serialization") {
  griff::HeightReport rep =
      griff::pe_pencil_report({3, 2, Rat(0), Rat(1), griff::Sign::minus});
  griff::json j = griff::height_report_json(rep);
  CHECK(j["sigma_count"] == "4");
  CHECK(j["ht_plus"] == "2");
  CHECK(j["ht_minus"] == "-2");
  CHECK(j["ht_stab"] == "0");
  CHECK(j["curve_class_minus"]["m"] == "-2");
  CHECK(j["curve_class_minus"]["e"] == "1");
  std::string text = griff::height_report_text(rep, "");
  CHECK(text.find("sigma_count       = 4\n") != std::string::npos);
  std::string only_minus = griff::height_report_text(rep, "minus");
  CHECK(only_minus.find("ht_plus") == std::string::npos);
  CHECK(only_minus.find("ht_minus") != std::string::npos);
}

TEST_CASE("verify fan-out respects the thread cap") {
  setenv("GRIFF_MAX_THREADS", "2", 1);
  griff::SuiteParams p;
  p.bounds["max-n"] = 3;
  auto reports = griff::parallel_map(3, [&](std::size_t i) {
    const char* names[] = {"v-from-u", "u-arith", "cy-semistable"};
    return griff::run_suite(names[i], p);
  });
  unsetenv("GRIFF_MAX_THREADS");
  CHECK(reports.size() == 3);
  for (const auto& r : reports) CHECK(griff::report_acceptable(r));
}
