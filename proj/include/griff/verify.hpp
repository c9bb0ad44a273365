#pragma once

#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "griff/chow.hpp"
#include "griff/coeffs.hpp"
#include "griff/formulas.hpp"
#include "griff/kclass.hpp"
#include "griff/multipoly.hpp"
#include "griff/rat.hpp"

namespace griff {

// ---------------------------------------------------------------------------
// Reports.
// ---------------------------------------------------------------------------

enum class SuiteStatus { PASS, FAIL, DISCREPANCY };

inline const char* to_string(SuiteStatus s) {
  switch (s) {
    case SuiteStatus::PASS: return "PASS";
    case SuiteStatus::FAIL: return "FAIL";
    case SuiteStatus::DISCREPANCY: return "DISCREPANCY";
  }
  return "?";
}

struct Witness {
  std::string input;
  std::string expected;
  std::string actual;
};

struct Report {
  std::string suite;
  SuiteStatus status = SuiteStatus::PASS;
  long checks_run = 0;
  std::vector<Witness> witnesses;

  Report() = default;
  explicit Report(std::string suite_name) : suite(std::move(suite_name)) {}
  Report(std::string suite_name, SuiteStatus st, long checks, std::vector<Witness> w)
      : suite(std::move(suite_name)), status(st), checks_run(checks), witnesses(std::move(w)) {}
};

struct SuiteParams {
  std::map<std::string, long> bounds;

  long get(const std::string& key, long fallback) const {
    auto it = bounds.find(key);
    return it == bounds.end() ? fallback : it->second;
  }
  // Callers use max-n to cap (never raise) the default sweep bound.
  long capped(long fallback) const {
    long v = get("max-n", fallback);
    return std::min(v, fallback);
  }
};

namespace detail {

template <typename T>
std::string show(const T& v) {
  if constexpr (std::is_same_v<T, Rat>) {
    return v.str();
  } else if constexpr (requires { v.str(); }) {
    return v.str();
  } else {
    std::ostringstream os;
    os << v;
    return os.str();
  }
}

template <typename T>
void expect_eq(Report& rep, const T& actual, const T& expected, const std::string& input) {
  ++rep.checks_run;
  if (actual == expected) return;
  rep.status = SuiteStatus::FAIL;
  rep.witnesses.push_back({input, show(expected), show(actual)});
}

// Evaluate a truncated series at a ring element (0-degree part included).
template <GradedRing R>
R eval_series_at(const PowerSeries& s, const R& x) {
  R acc = x.zero_like();
  for (int k = s.trunc(); k >= 0; --k) acc = acc * x + x.unit().scale(s[k]);
  return acc;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Individual suites.
// ---------------------------------------------------------------------------

namespace suites {

// Both closed forms of the fraction-coefficient identities against the direct
// truncated expansion, over the full sample grid of n, r and a.
inline Report formal_coeffs(const SuiteParams& p) {
  Report rep{"formal-coeffs"};
  long max_n = p.capped(25);
  const std::vector<Rat> samples = {Rat(1), Rat(-1), Rat(2), Rat(-2), Rat(3), Rat(5), Rat(7, 2)};
  for (long n = 0; n <= max_n; ++n) {
    for (long r = 0; r <= n; ++r) {
      for (const Rat& a : samples) {
        std::string at = "(n,r,a)=(" + std::to_string(n) + "," + std::to_string(r) + "," + a.str() + ")";
        detail::expect_eq(rep, frac_coeff_closed(n, r, a, false), frac_coeff(n, r, a, false),
                          "simple closed form at " + at);
        detail::expect_eq(rep, frac_coeff_closed(n, r, a, true), frac_coeff(n, r, a, true),
                          "corrected squared closed form at " + at);
      }
    }
  }
  return rep;
}

// Documents that the squared-denominator closed form with its final printed
// summation bound (k <= n) disagrees with the expansion at (n,r,a) = (2,1,2):
// the bound drops the k = n+1 term. The expected outcome is DISCREPANCY with
// exactly that witness; the residue-form expression is reported alongside the
// oracle (it agrees as printed). Anything else - the deviating sum agreeing,
// the residue form drifting, or the corrected bound drifting - is a FAIL.
inline Report squared_closed_as_printed(const SuiteParams&) {
  Report rep{"squared-closed-as-printed"};
  const long n = 2, r = 1;
  const Rat a(2);
  Rat oracle = frac_coeff(n, r, a, true);
  Rat printed_sum = squared_closed_printed_sum(n, r, a);
  Rat printed_residue = squared_closed_printed_residue(n, r, a);
  Rat corrected = frac_coeff_closed_squared(n, r, a);
  rep.checks_run = 4;
  if (printed_sum == oracle || printed_residue != oracle || corrected != oracle) {
    rep.status = SuiteStatus::FAIL;
    rep.witnesses.push_back({"(n,r,a)=(2,1,2) unexpected agreement or closed-form drift",
                             oracle.str(),
                             "sum=" + printed_sum.str() + " residue=" + printed_residue.str() +
                                 " corrected=" + corrected.str()});
    return rep;
  }
  rep.status = SuiteStatus::DISCREPANCY;
  rep.witnesses.push_back(
      {"(n,r,a)=(2,1,2), printed final sum (bound k <= n)", oracle.str(), printed_sum.str()});
  rep.witnesses.push_back(
      {"(n,r,a)=(2,1,2), printed residue-form expression (agrees as printed)", oracle.str(),
       printed_residue.str()});
  return rep;
}

// rho of a line bundle is td(-c1), checked in one-variable root models.
inline Report rho_line(const SuiteParams& p) {
  Report rep{"rho-line"};
  long max_t = p.capped(12);
  for (int t = 1; t <= static_cast<int>(max_t); ++t) {
    MultiPoly x = MultiPoly::variable(1, t, 0);
    for (long q : {1L, -1L, 2L, 3L}) {
      MultiPoly c1 = x.scale(Rat(q));
      auto L = KClass<MultiPoly>::line_bundle(c1);
      MultiPoly expected = detail::eval_series_at(td_series(t), c1.scale(Rat(-1)));
      detail::expect_eq(rep, rho_of(L), expected,
                        "rho(L) vs td(-c1), c1=" + std::to_string(q) + "x, top degree " + std::to_string(t));
    }
  }
  return rep;
}

// rho(V) agrees with c_{r-1} - (r/2) c_r + (1/12) c_1 c_r through codimension
// r+1, on rank-r root models with top degree r+2.
inline Report rho_split(const SuiteParams& p) {
  Report rep{"rho-split"};
  long max_r = p.capped(6);
  for (int r = 1; r <= static_cast<int>(max_r); ++r) {
    int top = r + 2;
    MultiPoly total = MultiPoly::constant(r, top, Rat(1));
    for (int i = 0; i < r; ++i)
      total = total * (MultiPoly::constant(r, top, Rat(1)) + MultiPoly::variable(r, top, i));
    KClass<MultiPoly> v(r, total);
    MultiPoly rho = rho_of(v);
    MultiPoly rho_r = rho_r_of(v, r);
    for (int k = 0; k <= r + 1; ++k)
      detail::expect_eq(rep, rho.component(k), rho_r.component(k),
                        "rho vs rho_r, rank " + std::to_string(r) + ", codim " + std::to_string(k));
  }
  return rep;
}

// Multiplicativity of phi_y on split root models.
inline Report phi_mult(const SuiteParams& p) {
  Report rep{"phi-mult"};
  long max_total = p.capped(6);
  for (int r1 = 1; r1 < static_cast<int>(max_total); ++r1) {
    for (int r2 = 1; r1 + r2 <= static_cast<int>(max_total); ++r2) {
      int vars = r1 + r2, top = r1 + r2;
      auto root_bundle = [&](int from, int count) {
        MultiPoly total = MultiPoly::constant(vars, top, Rat(1));
        for (int i = from; i < from + count; ++i)
          total = total * (MultiPoly::constant(vars, top, Rat(1)) + MultiPoly::variable(vars, top, i));
        return KClass<MultiPoly>(count, total);
      };
      auto V = root_bundle(0, r1), W = root_bundle(r1, r2);
      auto lhs = phi_y_of(V + W);
      auto fv = phi_y_of(V), fw = phi_y_of(W);
      std::vector<MultiPoly> rhs(static_cast<std::size_t>(r1 + r2) + 1, MultiPoly(vars, top));
      for (std::size_t i = 0; i < fv.size(); ++i)
        for (std::size_t j = 0; j < fw.size(); ++j) rhs[i + j] = rhs[i + j] + fv[i] * fw[j];
      for (std::size_t k = 0; k < rhs.size(); ++k)
        detail::expect_eq(rep, lhs.at(k), rhs[k],
                          "phi_y(V+W) vs phi_y(V)phi_y(W), ranks (" + std::to_string(r1) + "," +
                              std::to_string(r2) + "), y^" + std::to_string(k));
    }
  }
  return rep;
}

namespace pe_detail {

inline std::string at(long N, long d) {
  return "(N,d)=(" + std::to_string(N) + "," + std::to_string(d) + ")";
}

inline PEClass sigma_class(const PEGenerators& g, int N) {
  PEClass one = g.h.unit();
  return ((one - g.c1_L).inv() * g.cOmega_pi).component(N + 1);
}

inline PEClass quotient_class(const PEGenerators& g, int N) {
  PEClass one = g.h.unit();
  return ((one - g.c1_L).inv() * g.cOmega_pi.component(1) * g.cOmega_pi).component(N + 1);
}

inline PEClass c1_cN_class(const PEGenerators& g, int N) {
  return (g.c1_L * g.cOmega_pi.component(N)).component(N + 1);
}

}  // namespace pe_detail

// The critical locus of a degree-d horizontal hypersurface, expanded
// symbolically in the projective-bundle Chow model, against its closed form.
inline Report pe_sigma(const SuiteParams& p) {
  Report rep{"pe-sigma"};
  long max_N = p.capped(8);
  long max_d = p.get("max-d", 10);
  for (long N = 1; N <= max_N; ++N) {
    for (long d = 1; d <= max_d; ++d) {
      PEGenerators g = pe_generators(static_cast<int>(N), Rat(d));
      PEClass lhs = pe_detail::sigma_class(g, static_cast<int>(N));
      PEClass bracket = g.h.scale(Rat(d - 1)) + g.m.scale(Rat(N + 1)) - g.e;
      PEClass rhs = (g.h.pow(static_cast<int>(N)) * bracket).scale(Rat(d - 1).pow(N));
      detail::expect_eq(rep, lhs, rhs, "critical-locus class at " + pe_detail::at(N, d));
    }
  }
  return rep;
}

// c1(L) c_N of relative 1-forms in the bundle model vs its closed form.
inline Report pe_c1cN(const SuiteParams& p) {
  Report rep{"pe-c1cN"};
  long max_N = p.capped(8);
  for (long N = 1; N <= max_N; ++N) {
    for (long d = 1; d <= N + 3; ++d) {
      PEGenerators g = pe_generators(static_cast<int>(N), Rat(d));
      PEClass lhs = pe_detail::c1_cN_class(g, static_cast<int>(N));
      PEClass bracket = g.h.scale(Rat(d * (N + 1))) + g.m.scale(Rat(N + 1)) + g.e.scale(Rat(d * N));
      PEClass rhs = (g.h.pow(static_cast<int>(N)) * bracket).scale(neg_one_pow(N));
      detail::expect_eq(rep, lhs, rhs, "c1*cN class at " + pe_detail::at(N, d));
    }
  }
  return rep;
}

// The quotient expansion (1 - c1 L)^-1 c1 c(Omega) against the closed
// coefficients a_{N,d}, b_{N,d}, c_{N,d}.
inline Report pe_quotient(const SuiteParams& p) {
  Report rep{"pe-quotient"};
  long max_N = p.capped(8);
  for (long N = 1; N <= max_N; ++N) {
    for (long d = 1; d <= N + 3; ++d) {
      PEGenerators g = pe_generators(static_cast<int>(N), Rat(d));
      StructuralCoeffs sc = structural_coeffs(N, d);
      PEClass lhs = pe_detail::quotient_class(g, static_cast<int>(N));
      PEClass bracket = g.h.scale(sc.a_Nd) + g.m.scale(sc.b_Nd) + g.e.scale(sc.c_Nd);
      PEClass rhs = g.h.pow(static_cast<int>(N)) * bracket;
      detail::expect_eq(rep, lhs, rhs, "quotient expansion at " + pe_detail::at(N, d));
    }
  }
  return rep;
}

// Full re-derivation of the closed height coefficients for pencils of
// hypersurfaces in a projective bundle: assemble the middle-cohomology height
// from the three pushed-forward classes (the ambient bundle contributes
// trivial heights), and compare with F(d,N) (m - d/(N+1) e) as an identity of
// curve classes. Also re-checks the pushforward of the critical locus.
inline Report pe_derivation(const SuiteParams& p) {
  Report rep{"pe-derivation"};
  long max_N = p.capped(8);
  for (long N = 1; N <= max_N; ++N) {
    ShiftCoeffs sh = shift_coeffs(N);
    for (long d = 1; d <= N + 3; ++d) {
      PEGenerators g = pe_generators(static_cast<int>(N), Rat(d));
      CurveClass s = pe_push(pe_detail::sigma_class(g, static_cast<int>(N)));
      CurveClass a = pe_push(pe_detail::quotient_class(g, static_cast<int>(N)));
      CurveClass b = pe_push(pe_detail::c1_cN_class(g, static_cast<int>(N)));

      CurveClass sigma_expected(Rat(0), Rat(d - 1).pow(N) * Rat(N + 1), -Rat(d - 1).pow(N) * Rat(d));
      detail::expect_eq(rep, s, sigma_expected, "pushforward of the critical locus at " + pe_detail::at(N, d));

      FHeights f = F_heights(d, N);
      CurveClass unit_class(Rat(0), Rat(1), -Rat(d, N + 1));
      Rat twelfth(1, 12);
      CurveClass gk_plus = a.scale(twelfth) - b.scale(twelfth) + s.scale(sh.v_plus);
      CurveClass gk_minus = a.scale(twelfth) - b.scale(twelfth) + s.scale(sh.v_minus);
      detail::expect_eq(rep, gk_plus, unit_class.scale(f.F_plus),
                        "derived upper height class at " + pe_detail::at(N, d));
      detail::expect_eq(rep, gk_minus, unit_class.scale(f.F_minus),
                        "derived lower height class at " + pe_detail::at(N, d));
    }
  }
  return rep;
}

// Chern classes of the blow-up of a point: per-degree expansion of
// (1 + eta)(1 - eta)^N - 1 against (-1)^r [ binom(N,r) - binom(N,r-1) ].
inline Report blowup_cr(const SuiteParams& p) {
  Report rep{"blowup-cr"};
  long max_N = p.capped(20);
  for (long N = 1; N <= max_N; ++N) {
    int t = static_cast<int>(N) + 1;
    PowerSeries one_minus = binomial_series(N, Rat(-1), t);
    PowerSeries eta = PowerSeries::variable(t);
    PowerSeries expansion = (PowerSeries::one(t) + eta) * one_minus - PowerSeries::one(t);
    for (long r = 1; r <= N + 1; ++r) {
      Rat expected = neg_one_pow(r) * (binomial(N, r) - binomial(N, r - 1));
      detail::expect_eq(rep, expansion[static_cast<int>(r)], expected,
                        "blow-up c_" + std::to_string(r) + " correction, N=" + std::to_string(N));
    }
  }
  return rep;
}

// Structure coefficients around one blown-up critical point: the quadric
// Euler characteristic, alpha(N,N-1) in closed form, the two expressions for
// beta(N), and the assembly of a_N from the per-degree corrections.
inline Report blowup_quadric_beta(const SuiteParams& p) {
  Report rep{"blowup-quadric-beta"};
  long max_N = p.capped(30);
  for (long N = 1; N <= max_N; ++N) {
    std::string at = "N=" + std::to_string(N);
    if (N >= 2) {
      // chi of a smooth quadric in projective (N-1)-space, from the degree
      // coefficient of its pushed tangent classes.
      Rat chi = Rat(2) * frac_coeff(N, 2, Rat(2), false);
      detail::expect_eq(rep, chi, Rat(1, 2) * (neg_one_pow(N) + Rat(2 * N - 1)),
                        "quadric Euler characteristic, " + at);

      Rat alpha = structural_alpha(N, N - 1);
      Rat alpha_closed =
          neg_one_pow(N) * Rat(1, 2) * (Rat(-N * N + 3 * N - 1) - neg_one_pow(N + 1));
      detail::expect_eq(rep, alpha, alpha_closed, "alpha(N,N-1) closed form, " + at);

      Rat beta_assembled = -Rat(N - 2) * alpha + neg_one_pow(N) * Rat(N * (N - 3), 2);
      detail::expect_eq(rep, structural_beta(N), beta_assembled, "beta(N) two expressions, " + at);

      // The bookkeeping identity tying beta to the final double-point term.
      Rat lhs = Rat(1, 2) * (Rat(N * N * N - 4 * N * N + 4 * N - 2) + neg_one_pow(N + 1) * Rat(N - 2) -
                             Rat(N * (N - 1) * (N - 3)));
      detail::expect_eq(rep, lhs, Rat(N - 2) * (Rat(1) - neg_one_pow(N)) * Rat(1, 2),
                        "beta bookkeeping identity, " + at);
    }
    if (N >= 3) {
      Rat cN1 = neg_one_pow(N - 1) * (binomial(N, N - 1) - binomial(N, N - 2));
      Rat cN2 = neg_one_pow(N - 2) * (binomial(N, N - 2) - binomial(N, N - 3));
      detail::expect_eq(rep, cN1, neg_one_pow(N) * Rat(N * (N - 3), 2), "c_{N-1} correction, " + at);
      detail::expect_eq(rep, cN2, neg_one_pow(N + 1) * Rat(N * (N - 1) * (N - 5), 6),
                        "c_{N-2} correction, " + at);
      detail::expect_eq(rep, structural_a_N(N), cN1 - Rat(N - 1) * cN2, "a_N assembly, " + at);
    }
    if (N == 2) detail::expect_eq(rep, structural_a_N(2), Rat(-2), "a_2 value");
    if (N == 1) detail::expect_eq(rep, structural_a_N(1), Rat(0), "a_1 value");
  }
  return rep;
}

// Strata data of one ordinary double point after blowing up: exceptional
// projective space with multiplicity 2 meeting the proper transform in a
// quadric.
inline StrataSpec odp_strata(long N) {
  StrataSpec s;
  s.N = N;
  long chi_open_E = (N % 2) ? 1 : 0;                // (1 - (-1)^N)/2
  long chi_quadric = ((N % 2 ? -1 : 1) + 2 * N - 1) / 2;
  s.components.push_back({"E", 2, chi_open_E, std::nullopt});
  s.components.push_back({"W", 1, 7, std::nullopt});  // chi of W never enters (m=1)
  s.pairs.push_back({"E", "W", chi_quadric});
  return s;
}

// Assembly of the per-node coefficient u from the localized term of the
// blown-up fibration plus the pushforward correction, against the closed
// tables.
inline Report u_arith(const SuiteParams& p) {
  Report rep{"u-arith"};
  long max_N = p.capped(30);
  for (long N = 1; N <= max_N; ++N) {
    std::string at = "N=" + std::to_string(N);
    Rat alpha = dnc_alpha_x(odp_strata(N));
    Rat alpha_closed = Rat(1, 48) * (Rat(6 * N - 7) * (Rat(1) - neg_one_pow(N)) + Rat(2 * N));
    detail::expect_eq(rep, alpha, alpha_closed, "double-point localized term, " + at);

    ShiftCoeffs sh = shift_coeffs(N);
    Rat u_minus = alpha - Rat(1, 24) * Rat(N - 2) * (Rat(1) - neg_one_pow(N));
    detail::expect_eq(rep, u_minus, sh.u_minus, "u_minus assembly, " + at);
    Rat u_minus_closed = Rat(1, 48) * (Rat(4 * N - 3) * (Rat(1) - neg_one_pow(N)) + Rat(2 * N));
    detail::expect_eq(rep, u_minus_closed, sh.u_minus, "u_minus single closed form, " + at);

    Rat eta = (N % 2) ? Rat(1) : Rat(0);
    detail::expect_eq(rep, u_minus - eta * Rat(N - 1, 2), sh.u_plus, "u_plus from u_minus, " + at);
  }
  return rep;
}

// v = (-1)^N u + 1/12, for both extension choices.
inline Report v_from_u(const SuiteParams& p) {
  Report rep{"v-from-u"};
  long max_N = p.capped(50);
  for (long N = 1; N <= max_N; ++N) {
    std::string at = "N=" + std::to_string(N);
    ShiftCoeffs sh = shift_coeffs(N);
    detail::expect_eq(rep, neg_one_pow(N) * sh.u_minus + Rat(1, 12), sh.v_minus, "v_minus from u_minus, " + at);
    detail::expect_eq(rep, neg_one_pow(N) * sh.u_plus + Rat(1, 12), sh.v_plus, "v_plus from u_plus, " + at);
    Rat u_minus_closed = Rat(1, 48) * (Rat(4 * N - 3) * (Rat(1) - neg_one_pow(N)) + Rat(2 * N));
    detail::expect_eq(rep, u_minus_closed, sh.u_minus, "u_minus closed form, " + at);
  }
  return rep;
}

// Equivalence of the two degree-2 expressions for the Todd-class ratio, in a
// symbol model whose basis is the double strata [D_ij]: substituting the
// multiplicity relation
//   m_i c1(N_i) = - sum_{j != i} m_j [D_ij]
// into the normal-bundle form
//   1/12 sum_i i_* c1(N_i) + 1/4 sum_{i<j} [D_ij]
// must reproduce the pure-multiplicity form
//   1/12 sum_{i<j} (3 - m_i/m_j - m_j/m_i) [D_ij].
inline Report td_ratio_deg2(const SuiteParams& p) {
  Report rep{"td-ratio-deg2"};
  long tuples = std::max<long>(p.get("tuples", 120), 100);
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<int> size_dist(2, 6);
  std::uniform_int_distribution<long> mult_dist(1, 9);
  using PairClass = std::map<std::pair<int, int>, Rat>;
  auto add = [](PairClass& cls, int i, int j, const Rat& c) {
    auto key = std::minmax(i, j);
    auto [it, inserted] = cls.try_emplace(key, c);
    if (!inserted) it->second += c;
  };
  for (long t = 0; t < tuples; ++t) {
    int k = size_dist(rng);
    std::vector<Rat> m(static_cast<std::size_t>(k));
    for (auto& mi : m) mi = Rat(mult_dist(rng));

    PairClass lhs, rhs;
    for (int i = 0; i < k; ++i) {
      // i_* c1(N_i) rewritten through the relation, divided by m_i.
      for (int j = 0; j < k; ++j)
        if (j != i)
          add(lhs, i, j,
              Rat(1, 12) * (-m[static_cast<std::size_t>(j)] / m[static_cast<std::size_t>(i)]));
    }
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        add(lhs, i, j, Rat(1, 4));
        const Rat &mi = m[static_cast<std::size_t>(i)], &mj = m[static_cast<std::size_t>(j)];
        add(rhs, i, j, Rat(1, 12) * (Rat(3) - mi / mj - mj / mi));
      }
    ++rep.checks_run;
    if (!(lhs == rhs)) {
      rep.status = SuiteStatus::FAIL;
      rep.witnesses.push_back({"Todd-ratio degree-2 classes, tuple " + std::to_string(t),
                               "equal coefficient maps", "mismatch"});
    }
  }
  return rep;
}

// A bidegree-(d,1) hypersurface in P^N x P^1 evaluated both as a linear
// pencil on P^N and as a pencil in a trivial projective bundle: the critical
// count and both heights must agree (and the count is (N+1)(d-1)^N).
inline Report cross_linear_pe(const SuiteParams& p) {
  Report rep{"cross-linear-pe"};
  long max_N = p.capped(6);
  long max_d = p.get("max-d", 8);
  for (long N = 1; N <= max_N; ++N) {
    PnClass c_omega = pn_omega_total_chern(static_cast<int>(N));
    for (long d = 1; d <= max_d; ++d) {
      std::string at = pe_detail::at(N, d);
      PencilSpec spec{N, d, Rat(0), Rat(1), Sign::minus};
      HeightReport pe = pe_pencil_report(spec);
      PnClass c1m = PnClass::x_power(static_cast<int>(N), 1).scale(Rat(d));
      LinearPencilReport lin = linear_pencil_report(c_omega, c1m, 1, N);
      detail::expect_eq(rep, lin.sigma_count, pe.sigma_count, "critical count, two routes, " + at);
      detail::expect_eq(rep, lin.sigma_count, Rat(N + 1) * Rat(d - 1).pow(N),
                        "critical count closed form, " + at);
      detail::expect_eq(rep, lin.ht_plus, pe.ht_plus, "upper height, two routes, " + at);
      detail::expect_eq(rep, lin.ht_minus, pe.ht_minus, "lower height, two routes, " + at);
      if (N == 2 && d == 3)
        detail::expect_eq(rep, lin.ht_minus, Rat(1), "plane-cubic lower height");
    }
  }
  return rep;
}

// With unit multiplicities and vanishing v the Calabi-Yau localized term
// reduces to one twelfth of the Euler characteristic of the open double
// stratum; the plain localized term agrees.
inline Report cy_semistable(const SuiteParams& p) {
  Report rep{"cy-semistable"};
  long cases = p.get("cases", 60);
  std::mt19937_64 rng(0x2545f4914f6cdd1dULL);
  std::uniform_int_distribution<int> size_dist(1, 6);
  std::uniform_int_distribution<long> chi_dist(-9, 9);
  std::uniform_int_distribution<long> n_dist(2, 8);
  for (long c = 0; c < cases; ++c) {
    StrataSpec s;
    s.N = n_dist(rng);
    int k = size_dist(rng);
    for (int i = 0; i < k; ++i)
      s.components.push_back({"c" + std::to_string(i), 1, chi_dist(rng), 0});
    long chi_double = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        long chi = chi_dist(rng);
        chi_double += chi;
        s.pairs.push_back({"c" + std::to_string(i), "c" + std::to_string(j), chi});
      }
    std::string at = "case " + std::to_string(c);
    detail::expect_eq(rep, cy_beta_x(s), Rat(chi_double, 12), "semistable beta, " + at);
    detail::expect_eq(rep, dnc_alpha_x(s), Rat(chi_double, 12), "semistable alpha, " + at);
  }
  return rep;
}

}  // namespace suites

// ---------------------------------------------------------------------------
// Registry.
// ---------------------------------------------------------------------------

inline const std::vector<std::pair<std::string, Report (*)(const SuiteParams&)>>& suite_registry() {
  static const std::vector<std::pair<std::string, Report (*)(const SuiteParams&)>> reg = {
      {"formal-coeffs", &suites::formal_coeffs},
      {"squared-closed-as-printed", &suites::squared_closed_as_printed},
      {"rho-line", &suites::rho_line},
      {"rho-split", &suites::rho_split},
      {"phi-mult", &suites::phi_mult},
      {"pe-sigma", &suites::pe_sigma},
      {"pe-c1cN", &suites::pe_c1cN},
      {"pe-quotient", &suites::pe_quotient},
      {"pe-derivation", &suites::pe_derivation},
      {"blowup-cr", &suites::blowup_cr},
      {"blowup-quadric-beta", &suites::blowup_quadric_beta},
      {"u-arith", &suites::u_arith},
      {"v-from-u", &suites::v_from_u},
      {"td-ratio-deg2", &suites::td_ratio_deg2},
      {"cross-linear-pe", &suites::cross_linear_pe},
      {"cy-semistable", &suites::cy_semistable},
  };
  return reg;
}

inline std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : suite_registry()) names.push_back(name);
  return names;
}

inline Report run_suite(const std::string& name, const SuiteParams& params = {}) {
  for (const auto& [n, fn] : suite_registry())
    if (n == name) return fn(params);
  throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
}

// A suite outcome is acceptable when it passes, or when it is the documented
// deviation with exactly the recorded witnesses: at (n,r,a)=(2,1,2) the
// printed final sum gives 3 against the oracle's -1, while the residue-form
// expression agrees at -1.
inline bool report_acceptable(const Report& rep) {
  if (rep.suite == "squared-closed-as-printed") {
    if (rep.status != SuiteStatus::DISCREPANCY || rep.witnesses.size() != 2) return false;
    const Witness& w0 = rep.witnesses[0];
    const Witness& w1 = rep.witnesses[1];
    return w0.input.find("(n,r,a)=(2,1,2)") != std::string::npos && w0.expected == "-1" &&
           w0.actual == "3" && w1.expected == "-1" && w1.actual == "-1";
  }
  return rep.status == SuiteStatus::PASS && rep.witnesses.empty();
}

}  // namespace griff
