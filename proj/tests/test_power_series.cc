#include <catch2/catch_amalgamated.hpp>

#include "griff/power_series.hpp"

using griff::PowerSeries;
using griff::Rat;

namespace {

// Independent expansion of 1 - e^{-x}, straight from the exponential series.
PowerSeries one_minus_exp_neg(int trunc) {
  PowerSeries s(trunc);
  for (int k = 1; k <= trunc; ++k) s.set(k, -griff::neg_one_pow(k) / griff::factorial(k));
  return s;
}

}  // namespace

TEST_CASE("td series first coefficients") {
  PowerSeries td = griff::td_series(2);
  CHECK(td[0] == Rat(1));
  CHECK(td[1] == Rat(1, 2));
  CHECK(td[2] == Rat(1, 12));
  CHECK(griff::td_series(0)[0] == Rat(1));
}

TEST_CASE("td series to degree 4 against the defining identity") {
  // Solve td(x) * (1 - e^{-x}) = x coefficient-wise with an independent
  // expansion of e^{-x}; the solution is frozen here.
  PowerSeries td = griff::td_series(4);
  std::vector<Rat> expected = {Rat(1), Rat(1, 2), Rat(1, 12), Rat(0), Rat(-1, 720)};
  CHECK(td.coeffs() == expected);
}

TEST_CASE("td series satisfies td * (1 - e^{-x}) = x through degree 40") {
  for (int t : {1, 2, 3, 5, 8, 13, 21, 40}) {
    PowerSeries lhs = griff::td_series(t) * one_minus_exp_neg(t);
    PowerSeries x = PowerSeries::variable(t);
    CHECK(lhs == x);
  }
}

TEST_CASE("series inversion") {
  PowerSeries s(3);
  s.set(0, Rat(1));
  s.set(1, Rat(2));
  PowerSeries inv = griff::series_invert(s, 3);
  std::vector<Rat> expected = {Rat(1), Rat(-2), Rat(4), Rat(-8)};
  CHECK(inv.coeffs() == expected);

  CHECK(griff::series_invert(PowerSeries::one(5), 5) == PowerSeries::one(5));

  PowerSeries t(2);
  t.set(0, Rat(1));
  t.set(1, Rat(-1));
  std::vector<Rat> geo = {Rat(1), Rat(1), Rat(1)};
  CHECK(griff::series_invert(t, 2).coeffs() == geo);

  PowerSeries nonunit(2);
  nonunit.set(1, Rat(1));
  CHECK_THROWS_AS(nonunit.invert(), std::domain_error);
}

TEST_CASE("inversion is a two-sided inverse through the truncation order") {
  PowerSeries s(7);
  s.set(0, Rat(3, 2));
  s.set(1, Rat(-1, 3));
  s.set(3, Rat(5));
  s.set(7, Rat(-2, 7));
  CHECK(s * s.invert() == PowerSeries::one(7));
}

TEST_CASE("arithmetic truncates and stays exact") {
  PowerSeries a(2), b(2);
  a.set(0, Rat(1));
  a.set(2, Rat(1, 3));
  b.set(1, Rat(2));
  PowerSeries p = a * b;
  CHECK(p[0] == Rat(0));
  CHECK(p[1] == Rat(2));
  CHECK(p[2] == Rat(0));  // the degree-3 part 2/3 x^3 is discarded
  CHECK((a + b)[1] == Rat(2));
  CHECK((a - b)[1] == Rat(-2));
}

TEST_CASE("composition and log") {
  // log(1/(1-x)) = sum x^k/k.
  PowerSeries geom(6);
  for (int k = 0; k <= 6; ++k) geom.set(k, Rat(1));
  PowerSeries lg = geom.log();
  for (int k = 1; k <= 6; ++k) CHECK(lg[k] == Rat(1, k));
  CHECK(lg[0] == Rat(0));

  // Composing a series with x reproduces it.
  PowerSeries td = griff::td_series(6);
  CHECK(td.compose(PowerSeries::variable(6)) == td);

  PowerSeries shifted = PowerSeries::one(3);
  CHECK_THROWS_AS(td.compose(shifted), std::domain_error);
  CHECK_THROWS_AS(shifted.scale(Rat(2)).log(), std::domain_error);
}

TEST_CASE("derivative") {
  PowerSeries s(3);
  s.set(1, Rat(1));
  s.set(3, Rat(2));
  PowerSeries d = s.derivative();
  CHECK(d[0] == Rat(1));
  CHECK(d[2] == Rat(6));
}
