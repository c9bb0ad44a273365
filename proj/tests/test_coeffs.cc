#include <catch2/catch_amalgamated.hpp>

#include "griff/coeffs.hpp"

using griff::frac_coeff;
using griff::frac_coeff_closed;
using griff::Rat;

namespace {

// Second, independent route to the same coefficients: the substitution
// u = y/(1+y) turns the coefficient of y^(n-r) in (1+y)^n/(1+ay) into the
// coefficient of u^(n-r) in (1-u)^{-r} (1+(a-1)u)^{-1}, and in the squared
// case into the coefficient of u^(n-r) in (1-u)^{-r} (1+(a-1)u)^{-2}.
Rat residue_oracle(long n, long r, const Rat& a, bool squared) {
  long target = n - r;
  if (target < 0) return Rat(0);
  int t = static_cast<int>(target);
  griff::PowerSeries one_minus_u(t);
  one_minus_u.set(0, Rat(1));
  if (t >= 1) one_minus_u.set(1, Rat(-1));
  griff::PowerSeries lin(t);
  lin.set(0, Rat(1));
  if (t >= 1) lin.set(1, a - Rat(1));
  griff::PowerSeries acc = griff::PowerSeries::one(t);
  for (long i = 0; i < r; ++i) acc = acc * one_minus_u.invert();
  acc = acc * lin.invert();
  if (squared) acc = acc * lin.invert();
  return acc[t];
}

}  // namespace

TEST_CASE("simple-denominator coefficients") {
  CHECK(frac_coeff(4, 2, Rat(2), false) == Rat(2));   // (1+y)^4 (1+2y)^{-1}, y^2
  CHECK(frac_coeff(3, 0, Rat(1), false) == Rat(0));   // y^3 of (1+y)^2
  CHECK(frac_coeff(2, 3, Rat(2), false) == Rat(0));   // negative target degree
  CHECK_THROWS_AS(frac_coeff(3, 1, Rat(0), false), std::invalid_argument);
  CHECK_THROWS_AS(frac_coeff_closed(3, 1, Rat(0), false), std::invalid_argument);
}

TEST_CASE("squared-denominator coefficient at the documented point") {
  // (1+y)^3 (1+2y)^{-2}: y-coefficient is 3 - 4 = -1; the residue
  // substitution gives the same value.
  CHECK(frac_coeff(2, 1, Rat(2), true) == Rat(-1));
  CHECK(residue_oracle(2, 1, Rat(2), true) == Rat(-1));
  // The final printed sum (bound k <= n) drops the k = n+1 term and gives 3;
  // the residue-form expression is exact as printed.
  CHECK(griff::squared_closed_printed_sum(2, 1, Rat(2)) == Rat(3));
  CHECK(griff::squared_closed_printed_residue(2, 1, Rat(2)) == Rat(-1));
  // The corrected bound restores agreement.
  CHECK(griff::frac_coeff_closed_squared(2, 1, Rat(2)) == Rat(-1));
}

TEST_CASE("closed forms match the expansion on a sample grid") {
  const std::vector<Rat> samples = {Rat(1), Rat(-1), Rat(2), Rat(-2), Rat(3), Rat(5), Rat(7, 2)};
  for (long n = 0; n <= 12; ++n) {
    for (long r = 0; r <= n; ++r) {
      for (const Rat& a : samples) {
        CAPTURE(n, r, a.str());
        CHECK(frac_coeff_closed(n, r, a, false) == frac_coeff(n, r, a, false));
        CHECK(frac_coeff_closed(n, r, a, true) == frac_coeff(n, r, a, true));
        CHECK(residue_oracle(n, r, a, false) == frac_coeff(n, r, a, false));
        CHECK(residue_oracle(n, r, a, true) == frac_coeff(n, r, a, true));
      }
    }
  }
}

TEST_CASE("top-exterior-power specialization") {
  // r = 0, squared: the corrected closed form collapses to (n+1)(1-a)^n.
  CHECK(frac_coeff_closed(2, 0, Rat(3), true) == Rat(12));
  CHECK(frac_coeff(2, 0, Rat(3), true) == Rat(12));
}

TEST_CASE("alternating binomial identity at a = 1") {
  for (long n = 1; n <= 25; ++n)
    for (long r = 1; r <= n; ++r) {
      CAPTURE(n, r);
      CHECK(frac_coeff(n, r, Rat(1), false) == griff::binomial(n - 1, n - r));
    }
}
