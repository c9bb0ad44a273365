#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

namespace griff {

// Exact rational number: always in lowest terms, denominator > 0, zero is 0/1.
// Thin value wrapper around GMP's mpq_class so nothing else in the library
// touches GMP types directly.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT: implicit by design
  Rat(int n) : v_(n) {}                             // NOLINT

  Rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  // Accepts "p" or "p/q" with optional leading '-'. Rejects everything else.
  static Rat parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Rat: empty literal");
    std::size_t i = (text[0] == '-') ? 1 : 0;
    if (i == text.size()) throw std::invalid_argument("Rat: bad literal '" + text + "'");
    bool seen_slash = false;
    bool digits_before = false, digits_after = false;
    for (; i < text.size(); ++i) {
      char c = text[i];
      if (c == '/') {
        if (seen_slash) throw std::invalid_argument("Rat: bad literal '" + text + "'");
        seen_slash = true;
      } else if (c >= '0' && c <= '9') {
        (seen_slash ? digits_after : digits_before) = true;
      } else {
        throw std::invalid_argument("Rat: bad literal '" + text + "'");
      }
    }
    if (!digits_before || (seen_slash && !digits_after))
      throw std::invalid_argument("Rat: bad literal '" + text + "'");
    Rat r;
    r.v_ = mpq_class(text);
    if (r.v_.get_den() == 0) throw std::invalid_argument("Rat: zero denominator in '" + text + "'");
    r.v_.canonicalize();
    return r;
  }

  bool is_zero() const { return v_ == 0; }
  int sign() const { return sgn(v_); }

  bool is_integer() const { return v_.get_den() == 1; }
  bool is_nonnegative_integer() const { return is_integer() && v_ >= 0; }

  // Whether 12*this is an integer, i.e. this lies in (1/12)Z.
  bool is_twelfth_integer() const {
    mpq_class t = v_ * 12;
    t.canonicalize();
    return t.get_den() == 1;
  }

  // Exact conversion; throws unless the value is an integer that fits a long.
  long to_long() const {
    if (!is_integer()) throw std::domain_error("Rat: " + str() + " is not an integer");
    if (!v_.get_num().fits_slong_p()) throw std::domain_error("Rat: " + str() + " out of long range");
    return v_.get_num().get_si();
  }

  std::string numerator_str() const { return v_.get_num().get_str(); }
  std::string denominator_str() const { return v_.get_den().get_str(); }

  // Renders "p" when the denominator is 1, otherwise "p/q".
  std::string str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  Rat operator-() const { return Rat(-v_); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
  friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
  friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
  friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  Rat inv() const {
    if (is_zero()) throw std::domain_error("Rat: inverse of zero");
    return Rat(1) / *this;
  }

  Rat pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Rat acc(1), base = *this;
    while (e > 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

 private:
  explicit Rat(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

inline Rat binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rat(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rat::parse(b.get_str());
}

inline Rat factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rat::parse(f.get_str());
}

// (-1)^n as a Rat, without materializing a power.
inline Rat neg_one_pow(long n) { return (n % 2 == 0) ? Rat(1) : Rat(-1); }

}  // namespace griff
