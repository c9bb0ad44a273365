#pragma once

#include <stdexcept>

#include "griff/power_series.hpp"
#include "griff/rat.hpp"

namespace griff {

// Coefficient of y^(n-r) in (1+y)^n/(1+a y), or in (1+y)^(n+1)/(1+a y)^2 when
// squared is set. Computed by direct truncated-series expansion; this is the
// authoritative route against which every closed form below is checked.
// Returns 0 when n - r < 0.
inline Rat frac_coeff(long n, long r, const Rat& a, bool squared) {
  if (n < 0 || r < 0) throw std::invalid_argument("frac_coeff: n and r must be non-negative");
  if (a.is_zero()) throw std::invalid_argument("frac_coeff: a must be nonzero");
  long target = n - r;
  if (target < 0) return Rat(0);
  int t = static_cast<int>(target);
  PowerSeries num = binomial_series(squared ? n + 1 : n, Rat(1), t);
  PowerSeries den(t);
  den.set(0, Rat(1));
  if (t >= 1) den.set(1, a);
  PowerSeries deninv = den.invert();
  if (squared) deninv = deninv * deninv;
  return (num * deninv)[t];
}

// Closed form for the simple-denominator coefficient:
//   (-1)^r * sum_{r <= k <= n} binom(n,k) (-1)^k a^(k-r).
inline Rat frac_coeff_closed_simple(long n, long r, const Rat& a) {
  if (n < 0 || r < 0) throw std::invalid_argument("frac_coeff_closed: n and r must be non-negative");
  if (a.is_zero()) throw std::invalid_argument("frac_coeff_closed: a must be nonzero");
  Rat acc(0);
  for (long k = r; k <= n; ++k) acc += binomial(n, k) * neg_one_pow(k) * a.pow(k - r);
  return neg_one_pow(r) * acc;
}

// Closed form for the squared-denominator coefficient with the summation
// bound corrected to k = r+1 .. n+1 (the k = n+1 term contributes through
// binom(n, k-1) = binom(n, n)):
//   sum_{r+1 <= k <= n+1} [ r binom(n,k) - (n+1-r) binom(n,k-1) ] (-1)^(r-k) a^(k-r-1).
inline Rat frac_coeff_closed_squared(long n, long r, const Rat& a) {
  if (n < 0 || r < 0) throw std::invalid_argument("frac_coeff_closed: n and r must be non-negative");
  if (a.is_zero()) throw std::invalid_argument("frac_coeff_closed: a must be nonzero");
  Rat acc(0);
  for (long k = r + 1; k <= n + 1; ++k) {
    Rat term = Rat(r) * binomial(n, k) - Rat(n + 1 - r) * binomial(n, k - 1);
    acc += term * neg_one_pow(r - k) * a.pow(k - r - 1);
  }
  return acc;
}

inline Rat frac_coeff_closed(long n, long r, const Rat& a, bool squared) {
  return squared ? frac_coeff_closed_squared(n, r, a) : frac_coeff_closed_simple(n, r, a);
}

// The squared-denominator closed forms exactly as printed, kept for the
// documented-deviation report. Both disagree with direct expansion at
// (n,r,a) = (2,1,2).
//
// Final printed sum, with its bound k <= n:
inline Rat squared_closed_printed_sum(long n, long r, const Rat& a) {
  if (a.is_zero()) throw std::invalid_argument("squared_closed_printed_sum: a must be nonzero");
  Rat acc(0);
  for (long k = r + 1; k <= n; ++k) {
    Rat term = Rat(r) * binomial(n, k) - Rat(n + 1 - r) * binomial(n, k - 1);
    acc += term * neg_one_pow(r - k) * a.pow(k - r - 1);
  }
  return acc;
}

// First printed expression:
//   (-1)^(n+r)/a^(r+1) * [ (r + (n+1-r) a) (a-1)^n
//       - sum_{0 <= k <= r} ( r binom(n,k) - (n+1-r) binom(n,k-1) ) (-1)^(n-k) a^k ].
inline Rat squared_closed_printed_residue(long n, long r, const Rat& a) {
  if (a.is_zero()) throw std::invalid_argument("squared_closed_printed_residue: a must be nonzero");
  Rat sum(0);
  for (long k = 0; k <= r; ++k) {
    Rat term = Rat(r) * binomial(n, k) - Rat(n + 1 - r) * binomial(n, k - 1);
    sum += term * neg_one_pow(n - k) * a.pow(k);
  }
  Rat bracket = (Rat(r) + Rat(n + 1 - r) * a) * (a - Rat(1)).pow(n) - sum;
  return neg_one_pow(n + r) * a.pow(r + 1).inv() * bracket;
}

}  // namespace griff
