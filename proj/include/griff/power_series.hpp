#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "griff/rat.hpp"

namespace griff {

// Truncated univariate formal power series over Rat. A series of truncation
// order t stores the coefficients of x^0 .. x^t; every operation is exact
// through degree t and silently discards higher terms.
class PowerSeries {
 public:
  explicit PowerSeries(int trunc) : c_(static_cast<std::size_t>(check_trunc(trunc)) + 1) {}

  static PowerSeries constant(const Rat& value, int trunc) {
    PowerSeries s(trunc);
    s.c_[0] = value;
    return s;
  }

  static PowerSeries one(int trunc) { return constant(Rat(1), trunc); }

  static PowerSeries variable(int trunc) {
    PowerSeries s(trunc);
    if (trunc >= 1) s.c_[1] = Rat(1);
    return s;
  }

  static PowerSeries from_coeffs(std::vector<Rat> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("PowerSeries: empty coefficient list");
    PowerSeries s(static_cast<int>(coeffs.size()) - 1);
    s.c_ = std::move(coeffs);
    return s;
  }

  int trunc() const { return static_cast<int>(c_.size()) - 1; }

  const Rat& operator[](int k) const {
    static const Rat kZero(0);
    if (k < 0 || k > trunc()) return kZero;
    return c_[static_cast<std::size_t>(k)];
  }

  void set(int k, const Rat& v) { c_.at(static_cast<std::size_t>(k)) = v; }

  const std::vector<Rat>& coeffs() const { return c_; }

  // Returns the same series viewed at a different truncation order; missing
  // high coefficients are taken to be zero.
  PowerSeries retrunc(int trunc) const {
    PowerSeries out(trunc);
    for (int k = 0; k <= trunc && k <= this->trunc(); ++k) out.c_[static_cast<std::size_t>(k)] = c_[static_cast<std::size_t>(k)];
    return out;
  }

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries out(std::min(a.trunc(), b.trunc()));
    for (int k = 0; k <= out.trunc(); ++k) out.c_[static_cast<std::size_t>(k)] = a[k] + b[k];
    return out;
  }

  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries out(std::min(a.trunc(), b.trunc()));
    for (int k = 0; k <= out.trunc(); ++k) out.c_[static_cast<std::size_t>(k)] = a[k] - b[k];
    return out;
  }

  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries out(std::min(a.trunc(), b.trunc()));
    for (int i = 0; i <= a.trunc(); ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; i + j <= out.trunc() && j <= b.trunc(); ++j) {
        if (b[j].is_zero()) continue;
        out.c_[static_cast<std::size_t>(i + j)] += a[i] * b[j];
      }
    }
    return out;
  }

  PowerSeries scale(const Rat& q) const {
    PowerSeries out(trunc());
    for (int k = 0; k <= trunc(); ++k) out.c_[static_cast<std::size_t>(k)] = c_[static_cast<std::size_t>(k)] * q;
    return out;
  }

  // Multiplicative inverse through the truncation order. Defined iff the
  // constant coefficient is nonzero.
  PowerSeries invert() const {
    if (c_[0].is_zero())
      throw std::domain_error("PowerSeries: inversion of a non-unit (zero constant term)");
    PowerSeries out(trunc());
    Rat c0inv = c_[0].inv();
    out.c_[0] = c0inv;
    for (int k = 1; k <= trunc(); ++k) {
      Rat acc(0);
      for (int j = 1; j <= k; ++j) acc += c_[static_cast<std::size_t>(j)] * out.c_[static_cast<std::size_t>(k - j)];
      out.c_[static_cast<std::size_t>(k)] = -c0inv * acc;
    }
    return out;
  }

  // Substitution outer(inner); requires inner to have zero constant term.
  PowerSeries compose(const PowerSeries& inner) const {
    if (!inner[0].is_zero())
      throw std::domain_error("PowerSeries: composition needs inner constant term 0");
    int t = std::min(trunc(), inner.trunc());
    PowerSeries acc = constant((*this)[trunc()], t);
    for (int k = trunc() - 1; k >= 0; --k) {
      acc = acc * inner.retrunc(t);
      acc.c_[0] += (*this)[k];
    }
    return acc;
  }

  PowerSeries derivative() const {
    PowerSeries out(std::max(0, trunc() - 1));
    for (int k = 1; k <= trunc(); ++k) out.c_[static_cast<std::size_t>(k - 1)] = c_[static_cast<std::size_t>(k)] * Rat(k);
    return out;
  }

  // log of a series with constant term 1, via (log f)' = f'/f.
  PowerSeries log() const {
    if (c_[0] != Rat(1)) throw std::domain_error("PowerSeries: log needs constant term 1");
    PowerSeries d = derivative() * invert().retrunc(std::max(0, trunc() - 1));
    PowerSeries out(trunc());
    for (int k = 1; k <= trunc(); ++k) out.c_[static_cast<std::size_t>(k)] = d[k - 1] / Rat(k);
    return out;
  }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    if (a.trunc() != b.trunc()) return false;
    return a.c_ == b.c_;
  }
  friend bool operator!=(const PowerSeries& a, const PowerSeries& b) { return !(a == b); }

  std::string str() const {
    std::string out = "[";
    for (int k = 0; k <= trunc(); ++k) {
      if (k) out += ", ";
      out += c_[static_cast<std::size_t>(k)].str();
    }
    return out + "]";
  }

 private:
  static int check_trunc(int t) {
    if (t < 0) throw std::invalid_argument("PowerSeries: negative truncation order");
    return t;
  }
  std::vector<Rat> c_;
};

// Free-function form used throughout: invert s through the given order,
// treating absent coefficients of s as zero.
inline PowerSeries series_invert(const PowerSeries& s, int trunc) {
  return s.retrunc(trunc).invert();
}

// exp(-x) through the given order.
inline PowerSeries exp_neg_x(int trunc) {
  PowerSeries s(trunc);
  for (int k = 0; k <= trunc; ++k) s.set(k, neg_one_pow(k) / factorial(k));
  return s;
}

// x/(1 - e^{-x}) through the given order: 1 + x/2 + x^2/12 - x^4/720 + ...
// Computed by inverting (1 - e^{-x})/x, whose k-th coefficient is
// (-1)^k/(k+1)!.
inline PowerSeries td_series(int trunc) {
  PowerSeries s(trunc);
  for (int k = 0; k <= trunc; ++k) s.set(k, neg_one_pow(k) / factorial(k + 1));
  return s.invert();
}

// (1 + q*x)^n through the given order, n >= 0.
inline PowerSeries binomial_series(long n, const Rat& q, int trunc) {
  PowerSeries s(trunc);
  for (int k = 0; k <= trunc; ++k) s.set(k, binomial(n, k) * q.pow(k));
  return s;
}

}  // namespace griff
