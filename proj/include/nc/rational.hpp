// Exact scalar types: rationals, Gaussian rationals, and values extended
// with a point at infinity.
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace nc {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline std::string to_string(const Rational& q) { return q.str(); }

// Parses "p", "-p/q" etc.  Throws std::invalid_argument on malformed input.
inline Rational rational_from_string(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  }
}

// a + b*i with exact rational a, b.  Canonical form is inherited from
// mpq_rational (reduced, positive denominator); equality is structural.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT(implicit)
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long r) : re(r) {}  // NOLINT(implicit)

  static GaussianRational unit_im() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return {re, -im}; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational n = b.re * b.re + b.im * b.im;
    if (n == 0) throw std::domain_error("division by zero Gaussian rational");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
  GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
  GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }

  GaussianRational pow(unsigned k) const {
    GaussianRational acc{Rational(1)};
    GaussianRational base = *this;
    while (k) {
      if (k & 1u) acc *= base;
      base *= base;
      k >>= 1u;
    }
    return acc;
  }

  // |a+bi|^2, an exact rational.
  Rational norm2() const { return re * re + im * im; }

  std::string str() const {
    if (im == 0) return to_string(re);
    std::string s;
    if (re != 0) s += to_string(re);
    if (im > 0 && re != 0) s += "+";
    if (im == -1) {
      s += "-";
    } else if (im != 1) {
      s += to_string(im) + "*";
    }
    s += "i";
    return s;
  }
};

// T plus a single point at infinity, used for orders of vanishing and axis
// intercepts.  Infinity compares greater than every finite value.
template <class T>
class Extended {
 public:
  Extended() : inf_(true) {}
  Extended(T v) : inf_(false), val_(std::move(v)) {}  // NOLINT(implicit)
  static Extended infinity() { return Extended(); }

  bool is_inf() const { return inf_; }
  bool is_finite() const { return !inf_; }
  const T& value() const {
    if (inf_) throw std::domain_error("value() on infinite Extended");
    return val_;
  }

  friend bool operator==(const Extended& a, const Extended& b) {
    if (a.inf_ != b.inf_) return false;
    return a.inf_ || a.val_ == b.val_;
  }
  friend bool operator<(const Extended& a, const Extended& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.val_ < b.val_;
  }
  friend bool operator<=(const Extended& a, const Extended& b) { return a < b || a == b; }
  friend bool operator>(const Extended& a, const Extended& b) { return b < a; }
  friend bool operator>=(const Extended& a, const Extended& b) { return b <= a; }

  friend Extended min(const Extended& a, const Extended& b) { return a < b ? a : b; }
  friend Extended max(const Extended& a, const Extended& b) { return a < b ? b : a; }

  std::string str() const {
    if (inf_) return "inf";
    if constexpr (std::is_same_v<T, Rational>) return val_.str();
    else return std::to_string(val_);
  }

 private:
  bool inf_;
  T val_{};
};

using ExtendedInt = Extended<std::int64_t>;
using ExtendedRat = Extended<Rational>;

// ord / ord(curve), infinity-aware; the denominator is always finite and
// positive for curve orders.
inline ExtendedRat extended_ratio(const ExtendedInt& num, std::int64_t den) {
  if (den <= 0) throw std::domain_error("ratio with nonpositive denominator");
  if (num.is_inf()) return ExtendedRat::infinity();
  return ExtendedRat(Rational(num.value(), den));
}

}  // namespace nc
