#pragma once

#include <string>
#include <utility>
#include <vector>

#include "slocc/gaussian_rational.hpp"

namespace slocc {

/// Dense univariate polynomial over Q(i), coefficients low degree first,
/// with no trailing zeros (the zero polynomial has no coefficients).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<GaussianRational> coeffs);
  UniPoly(const GaussianRational& constant);  // NOLINT(google-explicit-constructor)

  /// The polynomial T.
  static UniPoly indeterminate();
  /// c * T^k.
  static UniPoly monomial(const GaussianRational& c, int k);

  const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
  /// -1 for zero.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const GaussianRational& leading() const;
  GaussianRational coefficient(int k) const;

  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const GaussianRational& c);
  UniPoly operator-() const;
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  GaussianRational eval(const GaussianRational& t) const;
  UniPoly derivative() const;
  UniPoly monic() const;

  std::string to_string(const std::string& var = "T") const;

 private:
  void trim();
  std::vector<GaussianRational> coeffs_;
};

/// Quotient and remainder; throws ArithmeticError on division by zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

struct ExtendedGcd {
  UniPoly g;  // monic
  UniPoly s;
  UniPoly t;  // s*a + t*b = g
};
ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b);

/// f / gcd(f, f'), monic. Throws ArithmeticError for f = 0.
UniPoly squarefree_part(const UniPoly& f);

/// All roots of f lying in Q(i), without multiplicity, in canonical order.
/// Candidates come from the Gaussian-integer divisors of the constant and
/// leading coefficients of the primitive integral multiple of f.
std::vector<GaussianRational> gaussian_rational_roots(const UniPoly& f);

/// Gaussian-integer divisors of z up to units, normalised into the first
/// quadrant. Throws ArithmeticError for z = 0.
std::vector<GaussianInteger> gaussian_divisors(const GaussianInteger& z);

}  // namespace slocc
