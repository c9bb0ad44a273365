#pragma once

#include <stdexcept>
#include <vector>

#include "griff/graded.hpp"
#include "griff/power_series.hpp"
#include "griff/rat.hpp"

namespace griff {

// A virtual bundle over an ambient graded ring, represented by its (virtual)
// rank and its total Chern class 1 + c_1 + ... truncated at the ring's top
// degree. Sums of K-classes multiply total Chern classes, differences divide.
template <GradedRing R>
class KClass {
 public:
  // total must be a unit with degree-0 part 1.
  KClass(long rank, R total) : rank_(rank), c_(std::move(total)) {
    if (c_.component(0) != c_.unit())
      throw std::invalid_argument("KClass: total Chern class must start with 1");
  }

  static KClass trivial(long rank, const R& ring_shape) {
    return KClass(rank, ring_shape.unit());
  }

  static KClass line_bundle(const R& c1) {
    if (!(c1 == c1.component(1)))
      throw std::invalid_argument("KClass::line_bundle: c1 must be homogeneous of degree 1");
    return KClass(1, c1.unit() + c1);
  }

  long rank() const { return rank_; }
  const R& total_chern() const { return c_; }
  R chern(int k) const { return c_.component(k); }
  int top_degree() const { return c_.top_degree(); }

  bool compatible(const KClass& o) const { return c_.compatible(o.c_); }

  friend KClass operator+(const KClass& a, const KClass& b) {
    a.require_compatible(b);
    return KClass(a.rank_ + b.rank_, a.c_ * b.c_);
  }

  friend KClass operator-(const KClass& a, const KClass& b) {
    a.require_compatible(b);
    return KClass(a.rank_ - b.rank_, a.c_ * b.c_.inv());
  }

  // Duality: c_k -> (-1)^k c_k, rank unchanged.
  KClass dual() const {
    R out = c_.zero_like();
    for (int k = 0; k <= c_.top_degree(); ++k) {
      R part = c_.component(k);
      out = out + (k % 2 ? part.scale(Rat(-1)) : part);
    }
    return KClass(rank_, out);
  }

  friend bool operator==(const KClass& a, const KClass& b) {
    return a.rank_ == b.rank_ && a.c_ == b.c_;
  }
  friend bool operator!=(const KClass& a, const KClass& b) { return !(a == b); }

 private:
  void require_compatible(const KClass& o) const {
    if (!compatible(o)) throw std::invalid_argument("KClass: mismatched ambient rings");
  }

  long rank_;
  R c_;
};

template <GradedRing R>
KClass<R> kclass_combine(const KClass<R>& a, const KClass<R>& b, char sign) {
  if (sign == '+') return a + b;
  if (sign == '-') return a - b;
  throw std::invalid_argument("kclass_combine: sign must be '+' or '-'");
}

namespace detail {

// Newton power sums p_1..p_max of the Chern roots, from the Chern classes:
//   p_k = c_1 p_{k-1} - c_2 p_{k-2} + ... + (-1)^k (k) c_k  (sign fixed below).
template <GradedRing R>
std::vector<R> chern_power_sums(const KClass<R>& k, int max_degree) {
  std::vector<R> p;
  p.reserve(static_cast<std::size_t>(max_degree) + 1);
  p.push_back(k.total_chern().zero_like());  // p_0 placeholder, unused
  for (int n = 1; n <= max_degree; ++n) {
    R acc = k.chern(n).scale(neg_one_pow(n - 1) * Rat(n));
    for (int i = 1; i < n; ++i)
      acc = acc + (k.chern(i) * p[static_cast<std::size_t>(n - i)]).scale(neg_one_pow(i - 1));
    p.push_back(acc);
  }
  return p;
}

// exp of a ring element with zero degree-0 part, degree by degree:
//   d * E_d = sum_{k=1..d} k L_k E_{d-k},  E_0 = 1.
template <GradedRing R>
R exp_positive(const R& arg) {
  int top = arg.top_degree();
  std::vector<R> L;
  L.reserve(static_cast<std::size_t>(top) + 1);
  for (int k = 0; k <= top; ++k) L.push_back(arg.component(k));
  if (!L[0].is_zero()) throw std::invalid_argument("exp_positive: nonzero degree-0 part");
  std::vector<R> E;
  E.push_back(arg.unit());
  R total = arg.unit();
  for (int d = 1; d <= top; ++d) {
    R acc = arg.zero_like();
    for (int k = 1; k <= d; ++k)
      acc = acc + (L[static_cast<std::size_t>(k)] * E[static_cast<std::size_t>(d - k)]).scale(Rat(k));
    E.push_back(acc.scale(Rat(1, d)));
    total = total + E.back();
  }
  return total;
}

// Coefficients of log td(x) = sum_k lambda_k x^k, generated from the td
// series itself (never transcribed by hand).
inline std::vector<Rat> td_log_coefficients(int max_degree) {
  PowerSeries l = td_series(max_degree).log();
  std::vector<Rat> out;
  out.reserve(static_cast<std::size_t>(max_degree) + 1);
  for (int k = 0; k <= max_degree; ++k) out.push_back(l[k]);
  return out;
}

}  // namespace detail

// Todd class through the ring's top degree:
//   Td = exp( sum_k lambda_k p_k ),   log td(x) = sum_k lambda_k x^k,
// with the power sums p_k obtained from the Chern classes by the Newton
// identities. Multiplicative in the K-class by construction.
template <GradedRing R>
R todd_of(const KClass<R>& k) {
  int top = k.top_degree();
  auto p = detail::chern_power_sums(k, top);
  auto lambda = detail::td_log_coefficients(top);
  R arg = k.total_chern().zero_like();
  for (int j = 1; j <= top; ++j) arg = arg + p[static_cast<std::size_t>(j)].scale(lambda[static_cast<std::size_t>(j)]);
  return detail::exp_positive(arg);
}

// Chern character: rank + sum_k p_k / k!.
template <GradedRing R>
R ch_of(const KClass<R>& k) {
  int top = k.top_degree();
  auto p = detail::chern_power_sums(k, top);
  R out = k.total_chern().unit().scale(Rat(k.rank()));
  for (int j = 1; j <= top; ++j)
    out = out + p[static_cast<std::size_t>(j)].scale(factorial(j).inv());
  return out;
}

// phi_y(V) = ch(lambda_y(V^dual)) Td(V) as a polynomial of degree <= rank(V)
// in y with ring coefficients (index = power of y). Only honest classes are
// accepted: the lambda expansion runs over exterior powers 0..rank.
//
// The y^p coefficient of ch(lambda_y(V^dual)) is the p-th elementary
// symmetric function of the exp(-x_i); it is recovered from their power sums
//   q_k = ch(of the k-th twist) = rank + sum_j (-k)^j p_j / j!
// by Newton-Girard, so the whole computation stays inside the ambient ring.
template <GradedRing R>
std::vector<R> phi_y_of(const KClass<R>& v) {
  if (v.rank() < 0) throw std::invalid_argument("phi_y_of: negative virtual rank");
  int top = v.top_degree();
  long rank = v.rank();
  auto p = detail::chern_power_sums(v, top);

  std::vector<R> q;  // q[k] = sum_i exp(-k x_i), k = 0..rank
  q.push_back(v.total_chern().unit().scale(Rat(rank)));
  for (long k = 1; k <= rank; ++k) {
    R acc = v.total_chern().unit().scale(Rat(rank));
    for (int j = 1; j <= top; ++j)
      acc = acc + p[static_cast<std::size_t>(j)].scale(Rat(-k).pow(j) / factorial(j));
    q.push_back(acc);
  }

  std::vector<R> s;  // elementary symmetric functions of the exp(-x_i)
  s.push_back(v.total_chern().unit());
  for (long n = 1; n <= rank; ++n) {
    R acc = v.total_chern().zero_like();
    for (long k = 1; k <= n; ++k)
      acc = acc + (q[static_cast<std::size_t>(k)] * s[static_cast<std::size_t>(n - k)]).scale(neg_one_pow(k - 1));
    s.push_back(acc.scale(Rat(1, n)));
  }

  R td = todd_of(v);
  std::vector<R> out;
  out.reserve(s.size());
  for (auto& sp : s) out.push_back(sp * td);
  return out;
}

// Evaluate a y-polynomial with ring coefficients at a rational y.
template <GradedRing R>
R eval_y_poly(const std::vector<R>& poly, const Rat& y) {
  R acc = poly.at(0).zero_like();
  for (std::size_t p = poly.size(); p-- > 0;) acc = acc.scale(y) + poly[p];
  return acc;
}

// rho(V): the y-derivative of phi_y(V) at y = -1, by exact polynomial
// differentiation.
template <GradedRing R>
R rho_of(const KClass<R>& v) {
  auto phi = phi_y_of(v);
  R acc = v.total_chern().zero_like();
  for (std::size_t p = 1; p < phi.size(); ++p)
    acc = acc + phi[p].scale(Rat(static_cast<long>(p)) * neg_one_pow(static_cast<long>(p) - 1));
  return acc;
}

// rho_r(K) = c_{r-1} - (r/2) c_r + (1/12) c_1 c_r, with c_0 = 1. Accepts any
// virtual class.
template <GradedRing R>
R rho_r_of(const KClass<R>& k, int r) {
  if (r < 1) throw std::invalid_argument("rho_r_of: r must be >= 1");
  R cr = k.chern(r);
  R crm1 = (r == 1) ? k.total_chern().unit() : k.chern(r - 1);
  return crm1 - cr.scale(Rat(r, 2)) + (k.chern(1) * cr).scale(Rat(1, 12));
}

}  // namespace griff
