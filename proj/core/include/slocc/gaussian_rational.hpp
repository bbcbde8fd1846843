#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace slocc {

using Rational = mpq_class;
using Integer = mpz_class;

class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised by every text parser in the library; `token()` is the offending input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::string token)
      : std::invalid_argument(message + ": '" + token + "'"), token_(std::move(token)) {}
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

/// An element re + im*i of Q(i). Both parts are kept in lowest terms with a
/// positive denominator, so equality is structural.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(int value) : re_(value) {}   // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im = 0);
  /// num/den as a real Gaussian rational; throws ArithmeticError for den = 0.
  static GaussianRational ratio(long num, long den);

  static GaussianRational imaginary_unit() { return {0, 1}; }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& rhs);
  GaussianRational& operator-=(const GaussianRational& rhs);
  GaussianRational& operator*=(const GaussianRational& rhs);
  GaussianRational& operator/=(const GaussianRational& rhs);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Canonical text form; see `parse` for the grammar.
  std::string to_string() const;

  /// RAT := ['-'] DIGITS ['/' DIGITS]
  /// GR  := RAT | [RAT] ('+'|'-') [RAT] 'i' | ['-'] [RAT] 'i'
  static GaussianRational parse(std::string_view text);

  std::size_t hash() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

using GR = GaussianRational;

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// "Positive" in the sense used for Weyl chambers over C: re > 0, or re = 0 and im > 0.
bool is_positive(const GaussianRational& z);

/// Fixed total order used for canonical parameter tuples: positive values
/// first (ascending re, then im), then zero, then negative values (ascending
/// magnitude, i.e. -1 before -2).
std::strong_ordering canonical_compare(const GaussianRational& a, const GaussianRational& b);

/// Square root inside Q(i), if one exists. Of the two roots the positive one
/// (in the sense of `is_positive`) is returned.
std::optional<GaussianRational> exact_sqrt(const GaussianRational& z);

std::optional<Rational> exact_sqrt(const Rational& q);

/// Gaussian integer, used by the fraction-free algorithms (Groebner bases and
/// row echelon forms) to keep coefficient growth in check.
struct GaussianInteger {
  Integer re{0};
  Integer im{0};

  GaussianInteger() = default;
  GaussianInteger(Integer r, Integer i = 0) : re(std::move(r)), im(std::move(i)) {}  // NOLINT

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_unit() const;
  Integer norm() const { return re * re + im * im; }
  GaussianInteger conj() const { return {re, -im}; }

  friend GaussianInteger operator+(const GaussianInteger& a, const GaussianInteger& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianInteger operator-(const GaussianInteger& a, const GaussianInteger& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianInteger operator*(const GaussianInteger& a, const GaussianInteger& b);
  GaussianInteger operator-() const { return {-re, -im}; }
  friend bool operator==(const GaussianInteger& a, const GaussianInteger& b) {
    return a.re == b.re && a.im == b.im;
  }

  GaussianRational to_rational() const { return {Rational(re), Rational(im)}; }
};

/// Exact quotient; throws ArithmeticError when `b` does not divide `a`.
GaussianInteger exact_div(const GaussianInteger& a, const GaussianInteger& b);
bool divides(const GaussianInteger& b, const GaussianInteger& a);
/// Euclidean remainder with the rounded quotient; the remainder has smaller norm than b.
GaussianInteger gauss_mod(const GaussianInteger& a, const GaussianInteger& b);
/// A gcd normalised into the first quadrant (re > 0, im >= 0); gcd(0,0) = 0.
GaussianInteger gauss_gcd(GaussianInteger a, GaussianInteger b);
/// The unit u with u*z in the first quadrant.
GaussianInteger normalizing_unit(const GaussianInteger& z);

/// Least common multiple of the denominators of re and im.
Integer denominator_lcm(const GaussianRational& z);

}  // namespace slocc

template <>
struct std::hash<slocc::GaussianRational> {
  std::size_t operator()(const slocc::GaussianRational& z) const { return z.hash(); }
};
