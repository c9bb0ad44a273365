#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "griff/chow.hpp"
#include "griff/kclass.hpp"
#include "griff/rat.hpp"

namespace griff {

// ---------------------------------------------------------------------------
// Abstract syntax.
//
// expr   := term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := atom ('^' int)? ('[' int ']')?
// atom   := '(' expr ')' | ident '(' expr ')' | generator | rational
//
// Generators: h m e L Om Tpi (projective-bundle model), x Om (projective
// space). Functions: c, c<k>, td, ch, inv, push, integrate.
// ---------------------------------------------------------------------------

struct ClassExpr;
using ExprPtr = std::shared_ptr<const ClassExpr>;

struct ClassExpr {
  enum class Kind { Lit, Gen, Call, Bin, Pow, Comp };

  Kind kind;
  Rat lit;           // Lit
  std::string name;  // Gen: generator name; Call: function name ("c3" keeps ck=3)
  int ck = -1;       // Call: k for the c_k family, -1 otherwise
  char op = 0;       // Bin
  ExprPtr a, b;      // children
  long expo = 0;     // Pow
  int comp = 0;      // Comp

  static ExprPtr literal(Rat v) {
    auto e = std::make_shared<ClassExpr>();
    e->kind = Kind::Lit;
    e->lit = std::move(v);
    return e;
  }
  static ExprPtr generator(std::string n) {
    auto e = std::make_shared<ClassExpr>();
    e->kind = Kind::Gen;
    e->name = std::move(n);
    return e;
  }
  static ExprPtr call(std::string n, int ck, ExprPtr arg) {
    auto e = std::make_shared<ClassExpr>();
    e->kind = Kind::Call;
    e->name = std::move(n);
    e->ck = ck;
    e->a = std::move(arg);
    return e;
  }
  static ExprPtr bin(char op, ExprPtr l, ExprPtr r) {
    auto e = std::make_shared<ClassExpr>();
    e->kind = Kind::Bin;
    e->op = op;
    e->a = std::move(l);
    e->b = std::move(r);
    return e;
  }
  static ExprPtr power(ExprPtr base, long k) {
    auto e = std::make_shared<ClassExpr>();
    e->kind = Kind::Pow;
    e->a = std::move(base);
    e->expo = k;
    return e;
  }
  static ExprPtr select(ExprPtr base, int k) {
    auto e = std::make_shared<ClassExpr>();
    e->kind = Kind::Comp;
    e->a = std::move(base);
    e->comp = k;
    return e;
  }
};

inline bool expr_equal(const ExprPtr& x, const ExprPtr& y) {
  if (!x || !y) return x == y;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case ClassExpr::Kind::Lit: return x->lit == y->lit;
    case ClassExpr::Kind::Gen: return x->name == y->name;
    case ClassExpr::Kind::Call:
      return x->name == y->name && x->ck == y->ck && expr_equal(x->a, y->a);
    case ClassExpr::Kind::Bin:
      return x->op == y->op && expr_equal(x->a, y->a) && expr_equal(x->b, y->b);
    case ClassExpr::Kind::Pow: return x->expo == y->expo && expr_equal(x->a, y->a);
    case ClassExpr::Kind::Comp: return x->comp == y->comp && expr_equal(x->a, y->a);
  }
  return false;
}

// Deterministic rendering; reparsing the output yields a structurally
// identical tree.
inline std::string print_class_expr(const ExprPtr& e) {
  auto wrap = [](const ExprPtr& c) {
    std::string s = print_class_expr(c);
    switch (c->kind) {
      case ClassExpr::Kind::Lit:
      case ClassExpr::Kind::Gen:
      case ClassExpr::Kind::Call: return s;
      default: return "(" + s + ")";
    }
  };
  switch (e->kind) {
    case ClassExpr::Kind::Lit: return e->lit.str();
    case ClassExpr::Kind::Gen: return e->name;
    case ClassExpr::Kind::Call: return e->name + "(" + print_class_expr(e->a) + ")";
    case ClassExpr::Kind::Bin:
      return "(" + print_class_expr(e->a) + " " + e->op + " " + print_class_expr(e->b) + ")";
    case ClassExpr::Kind::Pow: return wrap(e->a) + "^" + std::to_string(e->expo);
    case ClassExpr::Kind::Comp: return wrap(e->a) + "[" + std::to_string(e->comp) + "]";
  }
  return "";
}

// ---------------------------------------------------------------------------
// Parsing.
// ---------------------------------------------------------------------------

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

namespace detail {

inline const std::vector<std::string>& known_generators() {
  static const std::vector<std::string> g = {"h", "m", "e", "L", "Om", "Tpi", "x"};
  return g;
}

inline bool is_known_generator(const std::string& s) {
  for (const auto& g : known_generators())
    if (g == s) return true;
  return false;
}

inline bool is_known_function(const std::string& s, int* ck) {
  *ck = -1;
  if (s == "c" || s == "td" || s == "ch" || s == "inv" || s == "push" || s == "integrate")
    return true;
  if (s.size() >= 2 && s[0] == 'c') {
    for (std::size_t i = 1; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    long k = std::stol(s.substr(1));
    if (k < 0 || k > 1000) return false;
    *ck = static_cast<int>(k);
    return true;
  }
  return false;
}

class Parser {
 public:
  explicit Parser(std::string text) : text_(std::move(text)) {}

  ExprPtr parse() {
    ExprPtr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                                   text_[pos_] == '\r'))
      ++pos_;
  }

  bool peek_char(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek_char(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c, const char* what) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "' (" + what + ")", pos_);
    ++pos_;
  }

  ExprPtr parse_expr() {
    ExprPtr e = parse_term();
    for (;;) {
      if (accept('+')) {
        e = ClassExpr::bin('+', e, parse_term());
      } else if (accept('-')) {
        e = ClassExpr::bin('-', e, parse_term());
      } else {
        return e;
      }
    }
  }

  ExprPtr parse_term() {
    ExprPtr e = parse_factor();
    while (accept('*')) e = ClassExpr::bin('*', e, parse_factor());
    return e;
  }

  ExprPtr parse_factor() {
    ExprPtr e = parse_atom();
    if (accept('^')) e = ClassExpr::power(e, parse_int());
    if (accept('[')) {
      long k = parse_int();
      expect(']', "closing component selector");
      e = ClassExpr::select(e, static_cast<int>(k));
    }
    return e;
  }

  long parse_int() {
    skip_ws();
    std::size_t start = pos_;
    bool neg = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    std::size_t digits = 0;
    long v = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1000000) throw ParseError("integer too large", start);
      ++pos_;
      ++digits;
    }
    if (digits == 0) throw ParseError("expected integer", start);
    return neg ? -v : v;
  }

  ExprPtr parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr e = parse_expr();
      expect(')', "closing parenthesis");
      return e;
    }
    if (c >= '0' && c <= '9') return parse_rational();
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) return parse_ident();
    throw ParseError("unexpected character", pos_);
  }

  ExprPtr parse_rational() {
    std::size_t start = pos_;
    std::string num;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') num += text_[pos_++];
    if (pos_ < text_.size() && text_[pos_] == '/') {
      std::size_t save = pos_;
      ++pos_;
      std::string den;
      while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') den += text_[pos_++];
      if (den.empty()) throw ParseError("expected denominator digits", pos_);
      if (Rat::parse(den).is_zero()) throw ParseError("zero denominator", save + 1);
      return ClassExpr::literal(Rat::parse(num + "/" + den));
    }
    (void)start;
    return ClassExpr::literal(Rat::parse(num));
  }

  ExprPtr parse_ident() {
    std::size_t start = pos_;
    std::string name;
    while (pos_ < text_.size() &&
           ((text_[pos_] >= 'a' && text_[pos_] <= 'z') || (text_[pos_] >= 'A' && text_[pos_] <= 'Z') ||
            (text_[pos_] >= '0' && text_[pos_] <= '9')))
      name += text_[pos_++];
    if (peek_char('(')) {
      int ck = -1;
      if (!is_known_function(name, &ck))
        throw ParseError("unknown identifier '" + name + "'", start);
      expect('(', "function call");
      ExprPtr arg = parse_expr();
      expect(')', "closing parenthesis");
      int k = ck;
      if (name == "c1") k = 1;  // canonical: c1 is the k=1 member of the family
      return ClassExpr::call(name, k, arg);
    }
    if (!is_known_generator(name)) throw ParseError("unknown identifier '" + name + "'", start);
    return ClassExpr::generator(name);
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ExprPtr parse_class_expr(const std::string& text) {
  return detail::Parser(text).parse();
}

// ---------------------------------------------------------------------------
// Evaluation.
// ---------------------------------------------------------------------------

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PeModel {
  int N = 1;
  long d = 1;
  std::optional<Rat> deg_e, deg_m;  // needed only for integrate
};

struct PnModel {
  int n = 1;
};

template <GradedRing R>
using EvalValue = std::variant<Rat, R, KClass<R>, CurveClass>;

namespace detail {

template <GradedRing R>
struct EvalCtx {
  std::vector<std::pair<std::string, EvalValue<R>>> generators;
  std::optional<Rat> deg_e, deg_m;
  std::vector<std::string>* notices = nullptr;

  void notice(const std::string& msg) const {
    if (notices) notices->push_back(msg);
  }

  const EvalValue<R>* lookup(const std::string& name) const {
    for (const auto& [n, v] : generators)
      if (n == name) return &v;
    return nullptr;
  }
};

template <GradedRing R>
EvalValue<R> eval_node(const ExprPtr& e, const EvalCtx<R>& ctx) {
  using V = EvalValue<R>;
  switch (e->kind) {
    case ClassExpr::Kind::Lit:
      return V(e->lit);
    case ClassExpr::Kind::Gen: {
      const V* v = ctx.lookup(e->name);
      if (!v) throw EvalError("generator '" + e->name + "' is not available in this model");
      return *v;
    }
    case ClassExpr::Kind::Bin: {
      V lhs = eval_node(e->a, ctx);
      V rhs = eval_node(e->b, ctx);
      char op = e->op;
      if (std::holds_alternative<Rat>(lhs) && std::holds_alternative<Rat>(rhs)) {
        const Rat &x = std::get<Rat>(lhs), &y = std::get<Rat>(rhs);
        if (op == '+') return V(x + y);
        if (op == '-') return V(x - y);
        return V(x * y);
      }
      if (std::holds_alternative<KClass<R>>(lhs) || std::holds_alternative<KClass<R>>(rhs)) {
        if (!std::holds_alternative<KClass<R>>(lhs) || !std::holds_alternative<KClass<R>>(rhs) ||
            op == '*')
          throw EvalError("K-classes combine only with K-classes and only under + and -");
        return V(kclass_combine(std::get<KClass<R>>(lhs), std::get<KClass<R>>(rhs), op));
      }
      if (std::holds_alternative<CurveClass>(lhs) || std::holds_alternative<CurveClass>(rhs))
        throw EvalError("pushed-forward classes do not take part in arithmetic");
      auto promote = [](const V& v, const R& shape) -> R {
        if (std::holds_alternative<R>(v)) return std::get<R>(v);
        return shape.unit().scale(std::get<Rat>(v));
      };
      const R& shape = std::holds_alternative<R>(lhs) ? std::get<R>(lhs) : std::get<R>(rhs);
      R x = promote(lhs, shape), y = promote(rhs, shape);
      if (op == '+') return V(x + y);
      if (op == '-') return V(x - y);
      return V(x * y);
    }
    case ClassExpr::Kind::Pow: {
      V base = eval_node(e->a, ctx);
      long k = e->expo;
      if (std::holds_alternative<Rat>(base)) return V(std::get<Rat>(base).pow(k));
      if (std::holds_alternative<R>(base)) {
        const R& r = std::get<R>(base);
        if (k < 0 && r.constant_coeff().is_zero())
          throw EvalError("negative power of a non-unit class");
        return V(r.pow(static_cast<int>(k)));
      }
      throw EvalError("power applies to rationals and ring classes only");
    }
    case ClassExpr::Kind::Comp: {
      V base = eval_node(e->a, ctx);
      if (!std::holds_alternative<R>(base))
        throw EvalError("component selector applies to ring classes only");
      const R& r = std::get<R>(base);
      if (e->comp < 0 || e->comp > r.top_degree())
        ctx.notice("component index " + std::to_string(e->comp) +
                   " is outside 0.." + std::to_string(r.top_degree()) + "; treated as zero");
      return V(r.component(e->comp));
    }
    case ClassExpr::Kind::Call: {
      V arg = eval_node(e->a, ctx);
      const std::string& fn = e->name;
      if (fn == "c" || fn == "td" || fn == "ch" || e->ck >= 0) {
        if (!std::holds_alternative<KClass<R>>(arg))
          throw EvalError("'" + fn + "' expects a K-class argument (L, Om, Tpi or a combination)");
        const KClass<R>& k = std::get<KClass<R>>(arg);
        if (fn == "c") return V(k.total_chern());
        if (fn == "td") return V(todd_of(k));
        if (fn == "ch") return V(ch_of(k));
        return V(k.chern(e->ck));
      }
      if (fn == "inv") {
        if (std::holds_alternative<Rat>(arg)) return V(std::get<Rat>(arg).inv());
        if (std::holds_alternative<R>(arg)) return V(std::get<R>(arg).inv());
        throw EvalError("'inv' expects a rational or a ring class");
      }
      if (fn == "push") {
        if constexpr (std::is_same_v<R, PEClass>) {
          if (!std::holds_alternative<R>(arg)) throw EvalError("'push' expects a ring class");
          return V(pe_push(std::get<R>(arg)));
        } else {
          throw EvalError("'push' is available only in the projective-bundle model");
        }
      }
      if (fn == "integrate") {
        if (!std::holds_alternative<R>(arg)) throw EvalError("'integrate' expects a ring class");
        if constexpr (std::is_same_v<R, PEClass>) {
          if (!ctx.deg_e || !ctx.deg_m)
            throw EvalError("'integrate' in the projective-bundle model needs --deg-e and --deg-m");
          return V(curve_degree(pe_push(std::get<R>(arg)), *ctx.deg_e, *ctx.deg_m));
        } else {
          return V(pn_integrate(std::get<R>(arg)));
        }
      }
      throw EvalError("unknown function '" + fn + "'");
    }
  }
  throw EvalError("malformed expression tree");
}

}  // namespace detail

inline EvalValue<PEClass> eval_class_expr(const ExprPtr& e, const PeModel& model,
                                          std::vector<std::string>* notices = nullptr) {
  detail::EvalCtx<PEClass> ctx;
  PEGenerators g = pe_generators(model.N, Rat(model.d));
  ctx.generators.emplace_back("h", g.h);
  ctx.generators.emplace_back("m", g.m);
  ctx.generators.emplace_back("e", g.e);
  ctx.generators.emplace_back("L", KClass<PEClass>::line_bundle(g.c1_L));
  ctx.generators.emplace_back("Om", pe_omega_kclass(g, model.N));
  ctx.generators.emplace_back("Tpi", pe_tangent_kclass(g, model.N));
  ctx.deg_e = model.deg_e;
  ctx.deg_m = model.deg_m;
  ctx.notices = notices;
  return detail::eval_node(e, ctx);
}

inline EvalValue<PnClass> eval_class_expr(const ExprPtr& e, const PnModel& model,
                                          std::vector<std::string>* notices = nullptr) {
  detail::EvalCtx<PnClass> ctx;
  ctx.generators.emplace_back("x", PnClass::x_power(model.n, 1));
  ctx.generators.emplace_back("Om", pn_omega_kclass(model.n));
  ctx.notices = notices;
  return detail::eval_node(e, ctx);
}

// Rendering of evaluation results for the command line.
template <GradedRing R>
std::string render_value(const EvalValue<R>& v) {
  if (std::holds_alternative<Rat>(v)) return std::get<Rat>(v).str();
  if (std::holds_alternative<CurveClass>(v)) return std::get<CurveClass>(v).str();
  if (std::holds_alternative<KClass<R>>(v)) {
    const auto& k = std::get<KClass<R>>(v);
    return "K-class(rank " + std::to_string(k.rank()) + ", c = " + k.total_chern().str() + ")";
  }
  return std::get<R>(v).str();
}

}  // namespace griff
