#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "griff/rat.hpp"

namespace griff {

// Multivariate polynomial over Rat with a hard bound on total degree.
// Exponent tuples are dense vectors of length arity; no zero coefficients
// are ever stored, and every stored tuple has total degree <= degree_bound.
// Serves as the Chern-root model: the ambient graded ring for splitting-
// principle computations.
class MultiPoly {
 public:
  using Exponents = std::vector<std::uint32_t>;

  MultiPoly(int arity, int degree_bound) : arity_(arity), bound_(degree_bound) {
    if (arity < 0) throw std::invalid_argument("MultiPoly: negative arity");
    if (degree_bound < 0) throw std::invalid_argument("MultiPoly: negative degree bound");
  }

  static MultiPoly constant(int arity, int bound, const Rat& v) {
    MultiPoly p(arity, bound);
    if (!v.is_zero()) p.terms_[Exponents(static_cast<std::size_t>(arity), 0)] = v;
    return p;
  }

  static MultiPoly variable(int arity, int bound, int i) {
    if (i < 0 || i >= arity) throw std::invalid_argument("MultiPoly: variable index out of range");
    MultiPoly p(arity, bound);
    if (bound >= 1) {
      Exponents e(static_cast<std::size_t>(arity), 0);
      e[static_cast<std::size_t>(i)] = 1;
      p.terms_[e] = Rat(1);
    }
    return p;
  }

  // k-th elementary symmetric polynomial of the arity variables.
  static MultiPoly elementary_symmetric(int arity, int bound, int k) {
    MultiPoly p(arity, bound);
    if (k < 0 || k > arity || k > bound) return p;
    Exponents subset;
    build_elementary(p, subset, 0, k, arity);
    return p;
  }

  int arity() const { return arity_; }
  int top_degree() const { return bound_; }
  bool compatible(const MultiPoly& o) const { return arity_ == o.arity_ && bound_ == o.bound_; }

  MultiPoly zero_like() const { return MultiPoly(arity_, bound_); }
  MultiPoly unit() const { return constant(arity_, bound_, Rat(1)); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exponents, Rat>& terms() const { return terms_; }

  Rat coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  Rat constant_coeff() const { return coeff(Exponents(static_cast<std::size_t>(arity_), 0)); }

  MultiPoly component(int k) const {
    MultiPoly out(arity_, bound_);
    if (k < 0 || k > bound_) return out;
    for (const auto& [e, c] : terms_)
      if (static_cast<int>(total_degree(e)) == k) out.terms_[e] = c;
    return out;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    a.require_compatible(b);
    MultiPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
  }

  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    a.require_compatible(b);
    MultiPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
    return out;
  }

  MultiPoly operator-() const {
    MultiPoly out(arity_, bound_);
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
  }

  MultiPoly scale(const Rat& q) const {
    MultiPoly out(arity_, bound_);
    if (q.is_zero()) return out;
    for (const auto& [e, c] : terms_) out.terms_[e] = c * q;
    return out;
  }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.require_compatible(b);
    MultiPoly out(a.arity_, a.bound_);
    if (a.terms_.empty() || b.terms_.empty()) return out;

    // Sort both factors by total degree so each left term only scans the
    // right terms that survive truncation.
    auto flat = [](const MultiPoly& p) {
      std::vector<std::pair<int, const std::pair<const Exponents, Rat>*>> v;
      v.reserve(p.terms_.size());
      for (const auto& t : p.terms_) v.emplace_back(static_cast<int>(total_degree(t.first)), &t);
      std::sort(v.begin(), v.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      return v;
    };
    auto fa = flat(a), fb = flat(b);
    Exponents e(static_cast<std::size_t>(a.arity_));
    for (const auto& [da, ta] : fa) {
      if (da > a.bound_) break;
      for (const auto& [db, tb] : fb) {
        if (da + db > a.bound_) break;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ta->first[i] + tb->first[i];
        out.add_term(e, ta->second * tb->second);
      }
    }
    return out;
  }

  MultiPoly pow(int k) const {
    if (k < 0) return inv().pow(-k);
    MultiPoly acc = unit();
    MultiPoly base = *this;
    while (k > 0) {
      if (k & 1) acc = acc * base;
      base = (k >> 1) ? base * base : base;
      k >>= 1;
    }
    return acc;
  }

  // Multiplicative inverse; defined iff the degree-0 coefficient is nonzero.
  // Geometric series on the nilpotent part.
  MultiPoly inv() const {
    Rat c0 = constant_coeff();
    if (c0.is_zero()) throw std::domain_error("MultiPoly: inversion of a non-unit");
    MultiPoly u = unit() - scale(c0.inv());  // nilpotent: positive degrees only
    MultiPoly acc = unit();
    MultiPoly p = unit();
    for (int j = 1; j <= bound_; ++j) {
      p = p * u;
      if (p.is_zero()) break;
      acc = acc + p;
    }
    return acc.scale(c0.inv());
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.arity_ == b.arity_ && a.bound_ == b.bound_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += c.str();
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        out += "*x" + std::to_string(i);
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
      }
    }
    return out;
  }

 private:
  static std::uint32_t total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
  }

  void require_compatible(const MultiPoly& o) const {
    if (!compatible(o)) throw std::invalid_argument("MultiPoly: mismatched rings");
  }

  void add_term(const Exponents& e, const Rat& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(total_degree(e)) > bound_) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  static void build_elementary(MultiPoly& p, std::vector<std::uint32_t>& chosen, int start,
                               int remaining, int arity) {
    if (remaining == 0) {
      Exponents e(static_cast<std::size_t>(arity), 0);
      for (auto i : chosen) e[i] = 1;
      p.terms_[e] = Rat(1);
      return;
    }
    for (int i = start; i <= arity - remaining; ++i) {
      chosen.push_back(static_cast<std::uint32_t>(i));
      build_elementary(p, chosen, i + 1, remaining - 1, arity);
      chosen.pop_back();
    }
  }

  int arity_;
  int bound_;
  std::map<Exponents, Rat> terms_;
};

}  // namespace griff
