#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "griff/chow.hpp"
#include "griff/coeffs.hpp"
#include "griff/rat.hpp"

namespace griff {

enum class Sign { plus, minus, stab };

// ---------------------------------------------------------------------------
// Per-critical-point height shifts.
// ---------------------------------------------------------------------------

struct ShiftCoeffs {
  Rat u_minus, u_plus, v_minus, v_plus;
};

// The four per-node coefficients: u's enter the alternating-sum formula for a
// fibration with non-degenerate critical points, v's the middle-cohomology
// formula for an ample hypersurface in a smooth pencil.
inline ShiftCoeffs shift_coeffs(long N) {
  if (N < 1) throw std::invalid_argument("shift_coeffs: N must be >= 1");
  ShiftCoeffs s;
  if (N % 2) {
    s.u_minus = Rat(5 * N - 3, 24);
    s.u_plus = Rat(-(7 * N - 9), 24);
    s.v_minus = Rat(-5 * (N - 1), 24);
    s.v_plus = Rat(7 * (N - 1), 24);
  } else {
    s.u_minus = Rat(N, 24);
    s.u_plus = Rat(N, 24);
    s.v_minus = Rat(N + 2, 24);
    s.v_plus = Rat(N + 2, 24);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Heights of pencils of hypersurfaces in a projective bundle.
// ---------------------------------------------------------------------------

struct FHeights {
  Rat F_plus, F_minus, F_stab;
};

// Closed coefficients F(d,N) such that each Griffiths height of the middle
// cohomology equals F * ht_int. All three lie in (1/12)Z; for even N they
// coincide.
inline FHeights F_heights(long d, long N) {
  if (d < 1 || N < 1) throw std::invalid_argument("F_heights: d and N must be >= 1");
  Rat dm1 = Rat(d - 1).pow(N);
  Rat pre = Rat(N + 1) / Rat(24 * d * d);
  FHeights out;
  if (N % 2) {
    out.F_plus = pre * (dm1 * Rat(7 * d * d * N - 7 * d * d - 2 * d * N - 2) + Rat(2 * (d * d - 1)));
    out.F_minus = pre * (dm1 * Rat(-5 * d * d * N + 5 * d * d - 2 * d * N - 2) + Rat(2 * (d * d - 1)));
    out.F_stab = pre * (dm1 * Rat(d * d * N - d * d - 2 * d * N - 2) + Rat(2 * (d * d - 1)));
  } else {
    Rat v = pre * (dm1 * Rat(d * d * N + 2 * d * d - 2 * d * N - 2) - Rat(2 * (d * d - 1)));
    out.F_plus = out.F_minus = out.F_stab = v;
  }
  for (const Rat* f : {&out.F_plus, &out.F_minus, &out.F_stab})
    if (!f->is_twelfth_integer())
      throw std::logic_error("F_heights: value " + f->str() + " escapes (1/12)Z");
  return out;
}

// ---------------------------------------------------------------------------
// Pencil descriptions and reports.
// ---------------------------------------------------------------------------

struct PencilSpec {
  long N = 1;       // ambient relative dimension (fiber dimension of P(E))
  long d = 1;       // relative degree of the hypersurface
  Rat deg_e;        // deg E
  Rat deg_m;        // deg M
  Sign variant = Sign::minus;

  void validate() const {
    if (N < 1 || d < 1) throw std::invalid_argument("PencilSpec: N and d must be >= 1");
  }
};

struct HeightReport {
  Rat ht_int;
  Rat sigma_count;
  Rat ht_plus, ht_minus, ht_stab;
  CurveClass curve_class_plus, curve_class_minus;
  std::vector<std::string> notices;
};

inline HeightReport pe_pencil_report(const PencilSpec& spec) {
  spec.validate();
  const long N = spec.N, d = spec.d;
  HeightReport r;
  r.ht_int = spec.deg_m - Rat(d, N + 1) * spec.deg_e;
  r.sigma_count = Rat(d - 1).pow(N) * (Rat(N + 1) * spec.deg_m - Rat(d) * spec.deg_e);
  FHeights f = F_heights(d, N);
  r.ht_plus = f.F_plus * r.ht_int;
  r.ht_minus = f.F_minus * r.ht_int;
  r.ht_stab = f.F_stab * r.ht_int;
  CurveClass unit_class(Rat(0), Rat(1), -Rat(d, N + 1));
  r.curve_class_plus = unit_class.scale(f.F_plus);
  r.curve_class_minus = unit_class.scale(f.F_minus);
  if (!r.sigma_count.is_nonnegative_integer())
    r.notices.push_back("sigma_count " + r.sigma_count.str() +
                        " is not a non-negative integer; the input data is not geometric");
  return r;
}

// ---------------------------------------------------------------------------
// Linear pencils and Lefschetz pencils on a variety with Chow ring Q[x]/(x^(N+1)).
// ---------------------------------------------------------------------------

struct LinearPencilReport {
  Rat sigma_count;
  Rat ht_plus, ht_minus;
};

// A pencil cut on V by M-twisted sections of fiber degree delta:
//   |Sigma| = delta * Int_V (1 - c1(M))^-2 c(Omega^1_V)
//   ht_pm  = (delta/12) Int_V (1 - c1(M))^-2 c1 c(Omega^1_V)
//            + (-1)^(N+1) (delta/12) chi_top(V) + v_N^pm |Sigma|,
// with chi_top(V) derived internally as (-1)^N Int_V c_N(Omega^1_V).
inline LinearPencilReport linear_pencil_report(const PnClass& c_omega_v, const PnClass& c1_m,
                                               long delta, long N) {
  if (delta < 1) throw std::invalid_argument("linear_pencil_report: delta must be >= 1");
  if (N < 1) throw std::invalid_argument("linear_pencil_report: N must be >= 1");
  if (c_omega_v.dim() != N || c1_m.dim() != N)
    throw std::invalid_argument("linear_pencil_report: dimension mismatch");
  if (!(c1_m == c1_m.component(1)))
    throw std::invalid_argument("linear_pencil_report: c1(M) must be homogeneous of degree 1");

  PnClass one = c_omega_v.unit();
  PnClass inv2 = (one - c1_m).inv().pow(2);
  LinearPencilReport r;
  r.sigma_count = Rat(delta) * pn_integrate(inv2 * c_omega_v);
  Rat chi_top = neg_one_pow(N) * pn_integrate(c_omega_v.component(static_cast<int>(N)));
  Rat main = Rat(delta, 12) * pn_integrate(inv2 * c_omega_v.component(1) * c_omega_v);
  Rat euler_term = neg_one_pow(N + 1) * Rat(delta, 12) * chi_top;
  ShiftCoeffs s = shift_coeffs(N);
  r.ht_plus = main + euler_term + s.v_plus * r.sigma_count;
  r.ht_minus = main + euler_term + s.v_minus * r.sigma_count;
  return r;
}

// Specialization to a pencil of hyperplane sections: delta = 1, M = O_V(1).
inline LinearPencilReport lefschetz_report(long n, const PnClass& c_omega_v,
                                           const PnClass& c1_ov1) {
  return linear_pencil_report(c_omega_v, c1_ov1, 1, n);
}

// ---------------------------------------------------------------------------
// Localized terms for fibrations with normal-crossing fibers.
// ---------------------------------------------------------------------------

struct StrataComponent {
  std::string id;
  long multiplicity = 1;        // m_i >= 1
  long chi_open = 0;            // chi_top of the open stratum
  std::optional<long> v;        // coefficient of the component in div(canonical section)
  // Integral over the component of c1 of its normal bundle against c_{N-2}
  // of its dual log 1-forms; optional, used only to cross-check the second
  // expression for the localized term.
  std::optional<Rat> chern_integral;
};

struct StrataPair {
  std::string i, j;             // component ids, any order
  long chi_open = 0;            // chi_top of the open double stratum
};

// Strata data of one singular fiber: components with multiplicities and open
// Euler characteristics, plus the pairwise double strata.
struct StrataSpec {
  long N = 1;                   // dimension of the total space
  std::vector<StrataComponent> components;
  std::vector<StrataPair> pairs;

  void validate() const {
    if (N < 1) throw std::invalid_argument("StrataSpec: N must be >= 1");
    for (const auto& c : components) {
      if (c.multiplicity < 1)
        throw std::invalid_argument("StrataSpec: multiplicity of '" + c.id + "' must be >= 1");
      if (c.id.empty()) throw std::invalid_argument("StrataSpec: empty component id");
    }
    for (std::size_t a = 0; a < components.size(); ++a)
      for (std::size_t b = a + 1; b < components.size(); ++b)
        if (components[a].id == components[b].id)
          throw std::invalid_argument("StrataSpec: duplicate component id '" + components[a].id + "'");
    for (const auto& p : pairs) {
      if (p.i == p.j) throw std::invalid_argument("StrataSpec: pair with identical ids '" + p.i + "'");
      find(p.i);
      find(p.j);
    }
    for (std::size_t a = 0; a < pairs.size(); ++a)
      for (std::size_t b = a + 1; b < pairs.size(); ++b) {
        bool same = (pairs[a].i == pairs[b].i && pairs[a].j == pairs[b].j) ||
                    (pairs[a].i == pairs[b].j && pairs[a].j == pairs[b].i);
        if (same)
          throw std::invalid_argument("StrataSpec: duplicate pair ('" + pairs[a].i + "','" +
                                      pairs[a].j + "')");
      }
  }

  const StrataComponent& find(const std::string& id) const {
    for (const auto& c : components)
      if (c.id == id) return c;
    throw std::invalid_argument("StrataSpec: unknown component id '" + id + "'");
  }
};

// Localized term of the alternating height sum at one degenerate fiber:
//   alpha_x = (N-1)/4 sum_i (m_i - 1) chi_i
//           + 1/12 sum_{i<j} (3 - m_i/m_j - m_j/m_i) chi_ij,
// where i<j refers to the lexicographic order on component ids (pairs given
// in either order are normalized). The value always lies in (1/12)Z.
inline Rat dnc_alpha_x(const StrataSpec& strata) {
  strata.validate();
  Rat first(0);
  for (const auto& c : strata.components)
    first += Rat(c.multiplicity - 1) * Rat(c.chi_open);
  first *= Rat(strata.N - 1, 4);
  Rat second(0);
  for (const auto& p : strata.pairs) {
    Rat mi(strata.find(p.i).multiplicity), mj(strata.find(p.j).multiplicity);
    second += (Rat(3) - mi / mj - mj / mi) * Rat(p.chi_open);
  }
  Rat alpha = first + second * Rat(1, 12);
  if (!alpha.is_twelfth_integer())
    throw std::logic_error("dnc_alpha_x: value " + alpha.str() + " escapes (1/12)Z");
  return alpha;
}

// Second expression for the localized term, exposing its (1/12)Z integrality:
//   alpha_x = 1/12 sum_i [3(N-1)(m_i - 1) chi_i + I_i] + 1/4 sum_{i<j} chi_ij,
// where I_i is the normal-bundle integral carried by component i. Available
// only when every component supplies its integral (there is no way to derive
// them from the chi data); returns nothing otherwise.
inline std::optional<Rat> dnc_alpha_x_z12(const StrataSpec& strata) {
  strata.validate();
  Rat first(0);
  for (const auto& c : strata.components) {
    if (!c.chern_integral.has_value()) return std::nullopt;
    first += Rat(3 * (strata.N - 1)) * Rat(c.multiplicity - 1) * Rat(c.chi_open) + *c.chern_integral;
  }
  Rat second(0);
  for (const auto& p : strata.pairs) second += Rat(p.chi_open);
  return first * Rat(1, 12) + second * Rat(1, 4);
}

// Localized term at one fiber of a pencil with trivial canonical bundle on
// the smooth fibers:
//   beta_x = 1/12 sum_i [3(N-1)(m_i - 1) - v_i] chi_i
//          + 1/12 sum_{i<j} (3 - m_i/m_j - m_j/m_i) chi_ij.
inline Rat cy_beta_x(const StrataSpec& strata) {
  strata.validate();
  Rat first(0);
  for (const auto& c : strata.components) {
    if (!c.v.has_value())
      throw std::invalid_argument("cy_beta_x: component '" + c.id + "' is missing its v coefficient");
    first += (Rat(3 * (strata.N - 1)) * Rat(c.multiplicity - 1) - Rat(*c.v)) * Rat(c.chi_open);
  }
  Rat second(0);
  for (const auto& p : strata.pairs) {
    Rat mi(strata.find(p.i).multiplicity), mj(strata.find(p.j).multiplicity);
    second += (Rat(3) - mi / mj - mj / mi) * Rat(p.chi_open);
  }
  return (first + second) * Rat(1, 12);
}

// Alternating sum of the heights of a pencil with Calabi-Yau smooth fibers:
//   -(1/12) deg L * chi_top(generic fiber) + sum over degenerate fibers of beta_x.
inline Rat cy_alt_sum(const Rat& deg_l, long chi_eta, const std::vector<StrataSpec>& fibers) {
  Rat acc = -Rat(1, 12) * deg_l * Rat(chi_eta);
  for (const auto& f : fibers) acc += cy_beta_x(f);
  return acc;
}

// ---------------------------------------------------------------------------
// Extension shifts between the upper/lower/stable heights.
// ---------------------------------------------------------------------------

enum class ShiftVariant { plus_minus, stab_minus };

// Height difference caused by the choice of extension, for the cohomological
// degree n of an N-dimensional total space with sigma non-degenerate critical
// points: zero unless n = N-1 with N odd.
inline Rat extension_shift(long n, long N, const Rat& sigma, ShiftVariant variant) {
  if (n != N - 1 || N % 2 == 0) return Rat(0);
  return (variant == ShiftVariant::plus_minus ? Rat(N - 1, 2) : Rat(N - 1, 4)) * sigma;
}

// ---------------------------------------------------------------------------
// Structure coefficients of the blow-up comparison and of the projective-
// bundle expansions.
// ---------------------------------------------------------------------------

struct StructuralCoeffs {
  std::vector<Rat> alpha;  // alpha[r-1] = alpha(N,r), r = 1..N
  Rat beta;
  Rat a_N;
  Rat a_Nd, b_Nd, c_Nd;
};

// alpha(N,r): the correction to c_r when passing from the relative tangent
// class to relative log 1-forms on the blow-up of one non-degenerate critical
// point; the y-coefficient inside is computed by direct series expansion.
inline Rat structural_alpha(long N, long r) {
  return neg_one_pow(r - 1) *
         (binomial(N, r - 1) - Rat(4) * frac_coeff(N, N - r + 2, Rat(2), false));
}

// beta(N): the matching correction to c_1 c_{N-1}.
inline Rat structural_beta(long N) {
  Rat bracket = Rat(N * N * N - 4 * N * N + 4 * N - 2) + neg_one_pow(N + 1) * Rat(N - 2);
  return neg_one_pow(N) * Rat(1, 2) * bracket;
}

// a_N: the correction to c_{N-1} + c_1 c_{N-2} under the blow-up.
inline Rat structural_a_N(long N) {
  if (N == 1) return Rat(0);
  return neg_one_pow(N) * Rat(N * (N - 3), 2) + neg_one_pow(N) * Rat(N * (N - 1) * (N - 1) * (N - 5), 6);
}

inline StructuralCoeffs structural_coeffs(long N, long d) {
  if (N < 1 || d < 1) throw std::invalid_argument("structural_coeffs: N and d must be >= 1");
  StructuralCoeffs out;
  out.alpha.reserve(static_cast<std::size_t>(N));
  for (long r = 1; r <= N; ++r) out.alpha.push_back(structural_alpha(N, r));
  out.beta = structural_beta(N);
  out.a_N = structural_a_N(N);
  Rat dm1N = Rat(d - 1).pow(N);
  out.a_Nd = Rat(N + 1, d) * (-Rat(d - 1).pow(N + 1) + neg_one_pow(N + 1));
  out.b_Nd = Rat(N + 1) / Rat(d * d) * (-dm1N * Rat(d * N + 1) + neg_one_pow(N));
  out.c_Nd = Rat(1, d) * (-dm1N * Rat(d - N - 2) + neg_one_pow(N + 1) * Rat(N + 2));
  return out;
}

}  // namespace griff
