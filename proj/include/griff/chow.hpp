#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "griff/kclass.hpp"
#include "griff/rat.hpp"

namespace griff {

// Element of CH^0(C)_Q + CH^1(C)_Q over the base curve, with CH^1 written in
// the (m, e) coordinates: c0*[C] + c_m*m + c_e*e.
struct CurveClass {
  Rat c0, m, e;

  CurveClass() = default;
  CurveClass(Rat c0_, Rat m_, Rat e_) : c0(std::move(c0_)), m(std::move(m_)), e(std::move(e_)) {}

  bool is_zero() const { return c0.is_zero() && m.is_zero() && e.is_zero(); }

  friend CurveClass operator+(const CurveClass& a, const CurveClass& b) {
    return {a.c0 + b.c0, a.m + b.m, a.e + b.e};
  }
  friend CurveClass operator-(const CurveClass& a, const CurveClass& b) {
    return {a.c0 - b.c0, a.m - b.m, a.e - b.e};
  }
  CurveClass scale(const Rat& q) const { return {c0 * q, m * q, e * q}; }

  friend bool operator==(const CurveClass& a, const CurveClass& b) {
    return a.c0 == b.c0 && a.m == b.m && a.e == b.e;
  }
  friend bool operator!=(const CurveClass& a, const CurveClass& b) { return !(a == b); }

  // Renders like "4m - 2e", with a bare rational for the [C] part.
  std::string str() const {
    std::string out;
    auto emit = [&out](const Rat& q, const char* sym) {
      if (q.is_zero()) return;
      std::string mag = (q.sign() < 0 ? (-q).str() : q.str());
      if (out.empty()) {
        out += (q.sign() < 0 ? "-" : "");
      } else {
        out += (q.sign() < 0 ? " - " : " + ");
      }
      if (*sym && mag == "1") {
        out += sym;
      } else {
        out += mag;
        out += sym;
      }
    };
    emit(c0, "");
    emit(m, "m");
    emit(e, "e");
    return out.empty() ? "0" : out;
  }
};

// Degree of the CH^1 part once deg E and deg M are chosen.
inline Rat curve_degree(const CurveClass& cc, const Rat& deg_e, const Rat& deg_m) {
  return cc.m * deg_m + cc.e * deg_e;
}

// Chow ring of a projective bundle of fiber dimension N over a curve, in the
// basis h^i, h^i m, h^i e (i = 0..N), where h is the relative hyperplane
// class and m, e span CH^1 of the base. Canonical form applies
//   h^(N+1) = -h^N e,   m^2 = e^2 = m e = 0,
// eagerly, so the top graded piece (degree N+1) is spanned by h^N m, h^N e.
class PEClass {
 public:
  explicit PEClass(int fiber_dim)
      : n_(check_dim(fiber_dim)),
        h_(static_cast<std::size_t>(fiber_dim) + 1),
        hm_(static_cast<std::size_t>(fiber_dim) + 1),
        he_(static_cast<std::size_t>(fiber_dim) + 1) {}

  static PEClass constant(int fiber_dim, const Rat& v) {
    PEClass p(fiber_dim);
    p.h_[0] = v;
    return p;
  }

  static PEClass h_power(int fiber_dim, int i) {
    PEClass p(fiber_dim);
    if (i < 0) throw std::invalid_argument("PEClass: negative power of h");
    if (i <= fiber_dim) {
      p.h_[static_cast<std::size_t>(i)] = Rat(1);
    } else if (i == fiber_dim + 1) {
      p.he_[static_cast<std::size_t>(fiber_dim)] = Rat(-1);
    }
    // h^(N+2) and beyond vanish.
    return p;
  }

  static PEClass m_class(int fiber_dim) {
    PEClass p(fiber_dim);
    p.hm_[0] = Rat(1);
    return p;
  }

  static PEClass e_class(int fiber_dim) {
    PEClass p(fiber_dim);
    p.he_[0] = Rat(1);
    return p;
  }

  static PEClass lift(int fiber_dim, const CurveClass& cc) {
    PEClass p(fiber_dim);
    p.h_[0] = cc.c0;
    p.hm_[0] = cc.m;
    p.he_[0] = cc.e;
    return p;
  }

  int fiber_dim() const { return n_; }
  int top_degree() const { return n_ + 1; }
  bool compatible(const PEClass& o) const { return n_ == o.n_; }

  PEClass zero_like() const { return PEClass(n_); }
  PEClass unit() const { return constant(n_, Rat(1)); }

  const Rat& coeff_h(int i) const { return h_.at(static_cast<std::size_t>(i)); }
  const Rat& coeff_hm(int i) const { return hm_.at(static_cast<std::size_t>(i)); }
  const Rat& coeff_he(int i) const { return he_.at(static_cast<std::size_t>(i)); }

  bool is_zero() const {
    for (int i = 0; i <= n_; ++i)
      if (!h_[static_cast<std::size_t>(i)].is_zero() || !hm_[static_cast<std::size_t>(i)].is_zero() ||
          !he_[static_cast<std::size_t>(i)].is_zero())
        return false;
    return true;
  }

  Rat constant_coeff() const { return h_[0]; }

  PEClass component(int k) const {
    PEClass out(n_);
    if (k < 0 || k > n_ + 1) return out;
    if (k <= n_) out.h_[static_cast<std::size_t>(k)] = h_[static_cast<std::size_t>(k)];
    if (k >= 1) {
      out.hm_[static_cast<std::size_t>(k - 1)] = hm_[static_cast<std::size_t>(k - 1)];
      out.he_[static_cast<std::size_t>(k - 1)] = he_[static_cast<std::size_t>(k - 1)];
    }
    return out;
  }

  friend PEClass operator+(const PEClass& a, const PEClass& b) {
    a.require_compatible(b);
    PEClass out(a.n_);
    for (std::size_t i = 0; i < a.h_.size(); ++i) {
      out.h_[i] = a.h_[i] + b.h_[i];
      out.hm_[i] = a.hm_[i] + b.hm_[i];
      out.he_[i] = a.he_[i] + b.he_[i];
    }
    return out;
  }

  friend PEClass operator-(const PEClass& a, const PEClass& b) {
    a.require_compatible(b);
    PEClass out(a.n_);
    for (std::size_t i = 0; i < a.h_.size(); ++i) {
      out.h_[i] = a.h_[i] - b.h_[i];
      out.hm_[i] = a.hm_[i] - b.hm_[i];
      out.he_[i] = a.he_[i] - b.he_[i];
    }
    return out;
  }

  PEClass operator-() const { return scale(Rat(-1)); }

  PEClass scale(const Rat& q) const {
    PEClass out(n_);
    for (std::size_t i = 0; i < h_.size(); ++i) {
      out.h_[i] = h_[i] * q;
      out.hm_[i] = hm_[i] * q;
      out.he_[i] = he_[i] * q;
    }
    return out;
  }

  friend PEClass operator*(const PEClass& a, const PEClass& b) {
    a.require_compatible(b);
    const int N = a.n_;
    PEClass out(N);
    // Pure h x pure h, with reduction of the h^(N+1) overflow into -h^N e.
    for (int i = 0; i <= N; ++i) {
      if (a.h_[static_cast<std::size_t>(i)].is_zero()) continue;
      for (int j = 0; j <= N; ++j) {
        if (b.h_[static_cast<std::size_t>(j)].is_zero()) continue;
        Rat c = a.h_[static_cast<std::size_t>(i)] * b.h_[static_cast<std::size_t>(j)];
        int k = i + j;
        if (k <= N) {
          out.h_[static_cast<std::size_t>(k)] += c;
        } else if (k == N + 1) {
          out.he_[static_cast<std::size_t>(N)] -= c;
        }
      }
    }
    // Pure h x (h^j m) and pure h x (h^j e); products of two base classes die.
    for (int i = 0; i <= N; ++i) {
      if (a.h_[static_cast<std::size_t>(i)].is_zero()) continue;
      for (int j = 0; i + j <= N; ++j) {
        out.hm_[static_cast<std::size_t>(i + j)] += a.h_[static_cast<std::size_t>(i)] * b.hm_[static_cast<std::size_t>(j)];
        out.he_[static_cast<std::size_t>(i + j)] += a.h_[static_cast<std::size_t>(i)] * b.he_[static_cast<std::size_t>(j)];
      }
    }
    for (int i = 0; i <= N; ++i) {
      if (b.h_[static_cast<std::size_t>(i)].is_zero()) continue;
      for (int j = 0; i + j <= N; ++j) {
        out.hm_[static_cast<std::size_t>(i + j)] += b.h_[static_cast<std::size_t>(i)] * a.hm_[static_cast<std::size_t>(j)];
        out.he_[static_cast<std::size_t>(i + j)] += b.h_[static_cast<std::size_t>(i)] * a.he_[static_cast<std::size_t>(j)];
      }
    }
    return out;
  }

  PEClass pow(int k) const {
    if (k < 0) return inv().pow(-k);
    PEClass acc = unit();
    PEClass base = *this;
    while (k > 0) {
      if (k & 1) acc = acc * base;
      if (k >>= 1) base = base * base;
    }
    return acc;
  }

  PEClass inv() const {
    Rat c0 = h_[0];
    if (c0.is_zero()) throw std::domain_error("PEClass: inversion of a non-unit");
    PEClass u = unit() - scale(c0.inv());
    PEClass acc = unit();
    PEClass p = unit();
    for (int j = 1; j <= n_ + 1; ++j) {
      p = p * u;
      if (p.is_zero()) break;
      acc = acc + p;
    }
    return acc.scale(c0.inv());
  }

  friend bool operator==(const PEClass& a, const PEClass& b) {
    return a.n_ == b.n_ && a.h_ == b.h_ && a.hm_ == b.hm_ && a.he_ == b.he_;
  }
  friend bool operator!=(const PEClass& a, const PEClass& b) { return !(a == b); }

  std::string str() const {
    std::string out;
    auto emit = [&out](const Rat& q, const std::string& sym) {
      if (q.is_zero()) return;
      std::string mag = (q.sign() < 0 ? (-q).str() : q.str());
      out += out.empty() ? (q.sign() < 0 ? "-" : "") : (q.sign() < 0 ? " - " : " + ");
      if (!sym.empty() && mag == "1") {
        out += sym;
      } else {
        out += mag;
        out += sym;
      }
    };
    auto hpow = [](int i) -> std::string {
      if (i == 0) return "";
      if (i == 1) return "h";
      return "h^" + std::to_string(i);
    };
    for (int i = 0; i <= n_; ++i) emit(h_[static_cast<std::size_t>(i)], hpow(i));
    for (int i = 0; i <= n_; ++i)
      emit(hm_[static_cast<std::size_t>(i)], i ? hpow(i) + "*m" : "m");
    for (int i = 0; i <= n_; ++i)
      emit(he_[static_cast<std::size_t>(i)], i ? hpow(i) + "*e" : "e");
    return out.empty() ? "0" : out;
  }

 private:
  static int check_dim(int n) {
    if (n < 1) throw std::invalid_argument("PEClass: fiber dimension must be >= 1");
    return n;
  }
  void require_compatible(const PEClass& o) const {
    if (!compatible(o)) throw std::invalid_argument("PEClass: mismatched fiber dimensions");
  }

  int n_;
  std::vector<Rat> h_, hm_, he_;
};

// Named form of the ring product.
inline PEClass pe_mul(const PEClass& a, const PEClass& b) { return a * b; }

// Pushforward to the curve: h^N integrates to [C], h^N m to m, h^N e to e,
// everything of lower fiber degree to 0. The canonical form has already
// rewritten h^(N+1) as -h^N e, so the Segre rule for i = N+1 is automatic.
inline CurveClass pe_push(const PEClass& a) {
  int N = a.fiber_dim();
  return {a.coeff_h(N), a.coeff_hm(N), a.coeff_he(N)};
}

// The named generators of the model for a degree-d horizontal hypersurface:
// h, lifts of m and e, c1 of O(H) = d h + m, the total Chern classes of the
// relative tangent bundle and of relative 1-forms, and [H] itself.
struct PEGenerators {
  PEClass h, m, e, c1_L, cT_pi, cOmega_pi, H_cycle;
};

inline PEClass pe_dual_total_chern(const PEClass& total) {
  PEClass out = total.zero_like();
  for (int k = 0; k <= total.top_degree(); ++k) {
    PEClass part = total.component(k);
    out = out + (k % 2 ? -part : part);
  }
  return out;
}

inline PEGenerators pe_generators(int N, const Rat& d) {
  PEClass h = PEClass::h_power(N, 1);
  PEClass m = PEClass::m_class(N);
  PEClass e = PEClass::e_class(N);
  PEClass one = h.unit();
  PEClass c1_L = h.scale(d) + m;
  PEClass cT = (one + h).pow(N + 1) + e * (one + h).pow(N);
  PEClass cOm = pe_dual_total_chern(cT);
  return PEGenerators{h, m, e, c1_L, cT, cOm, c1_L};
}

// K-classes of the relative tangent bundle and of relative 1-forms (rank N).
inline KClass<PEClass> pe_tangent_kclass(const PEGenerators& g, int N) {
  return KClass<PEClass>(N, g.cT_pi);
}
inline KClass<PEClass> pe_omega_kclass(const PEGenerators& g, int N) {
  return KClass<PEClass>(N, g.cOmega_pi);
}

// Chow ring of projective space of dimension n: Q[x]/(x^(n+1)).
class PnClass {
 public:
  explicit PnClass(int dim) : n_(check_dim(dim)), c_(static_cast<std::size_t>(dim) + 1) {}

  static PnClass constant(int dim, const Rat& v) {
    PnClass p(dim);
    p.c_[0] = v;
    return p;
  }

  static PnClass x_power(int dim, int i) {
    PnClass p(dim);
    if (i < 0) throw std::invalid_argument("PnClass: negative power");
    if (i <= dim) p.c_[static_cast<std::size_t>(i)] = Rat(1);
    return p;
  }

  int dim() const { return n_; }
  int top_degree() const { return n_; }
  bool compatible(const PnClass& o) const { return n_ == o.n_; }

  PnClass zero_like() const { return PnClass(n_); }
  PnClass unit() const { return constant(n_, Rat(1)); }

  const Rat& coeff(int i) const { return c_.at(static_cast<std::size_t>(i)); }
  Rat constant_coeff() const { return c_[0]; }

  bool is_zero() const {
    for (const auto& q : c_)
      if (!q.is_zero()) return false;
    return true;
  }

  PnClass component(int k) const {
    PnClass out(n_);
    if (k >= 0 && k <= n_) out.c_[static_cast<std::size_t>(k)] = c_[static_cast<std::size_t>(k)];
    return out;
  }

  friend PnClass operator+(const PnClass& a, const PnClass& b) {
    a.require_compatible(b);
    PnClass out(a.n_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) out.c_[i] = a.c_[i] + b.c_[i];
    return out;
  }

  friend PnClass operator-(const PnClass& a, const PnClass& b) {
    a.require_compatible(b);
    PnClass out(a.n_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) out.c_[i] = a.c_[i] - b.c_[i];
    return out;
  }

  PnClass operator-() const { return scale(Rat(-1)); }

  PnClass scale(const Rat& q) const {
    PnClass out(n_);
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] * q;
    return out;
  }

  friend PnClass operator*(const PnClass& a, const PnClass& b) {
    a.require_compatible(b);
    PnClass out(a.n_);
    for (int i = 0; i <= a.n_; ++i) {
      if (a.c_[static_cast<std::size_t>(i)].is_zero()) continue;
      for (int j = 0; i + j <= a.n_; ++j)
        out.c_[static_cast<std::size_t>(i + j)] += a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
    }
    return out;
  }

  PnClass pow(int k) const {
    if (k < 0) return inv().pow(-k);
    PnClass acc = unit();
    PnClass base = *this;
    while (k > 0) {
      if (k & 1) acc = acc * base;
      if (k >>= 1) base = base * base;
    }
    return acc;
  }

  PnClass inv() const {
    if (c_[0].is_zero()) throw std::domain_error("PnClass: inversion of a non-unit");
    Rat c0 = c_[0];
    PnClass u = unit() - scale(c0.inv());
    PnClass acc = unit();
    PnClass p = unit();
    for (int j = 1; j <= n_; ++j) {
      p = p * u;
      if (p.is_zero()) break;
      acc = acc + p;
    }
    return acc.scale(c0.inv());
  }

  friend bool operator==(const PnClass& a, const PnClass& b) { return a.n_ == b.n_ && a.c_ == b.c_; }
  friend bool operator!=(const PnClass& a, const PnClass& b) { return !(a == b); }

  std::string str() const {
    std::string out;
    for (int i = 0; i <= n_; ++i) {
      const Rat& q = c_[static_cast<std::size_t>(i)];
      if (q.is_zero()) continue;
      std::string sym = (i == 0) ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
      std::string mag = (q.sign() < 0 ? (-q).str() : q.str());
      out += out.empty() ? (q.sign() < 0 ? "-" : "") : (q.sign() < 0 ? " - " : " + ");
      if (!sym.empty() && mag == "1") {
        out += sym;
      } else {
        out += mag;
        out += sym;
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  static int check_dim(int n) {
    if (n < 0) throw std::invalid_argument("PnClass: negative dimension");
    return n;
  }
  void require_compatible(const PnClass& o) const {
    if (!compatible(o)) throw std::invalid_argument("PnClass: mismatched dimensions");
  }

  int n_;
  std::vector<Rat> c_;
};

// Degree of the top-dimensional component: the coefficient of x^n.
inline Rat pn_integrate(const PnClass& p) { return p.coeff(p.dim()); }

// Total Chern class of 1-forms on projective space: (1 - x)^(n+1) truncated.
inline PnClass pn_omega_total_chern(int n) {
  PnClass out(n);
  PnClass one = PnClass::constant(n, Rat(1));
  PnClass x = PnClass::x_power(n, 1);
  return (one - x).pow(n + 1);
}

inline KClass<PnClass> pn_omega_kclass(int n) {
  return KClass<PnClass>(n, pn_omega_total_chern(n));
}

}  // namespace griff
