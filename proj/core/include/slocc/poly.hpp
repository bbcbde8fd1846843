#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "slocc/gaussian_rational.hpp"

namespace slocc {

constexpr int kMaxVars = 24;

enum class MonomialOrder { degrevlex, lex, block };

/// Exponent vector with a cached total degree. Variables beyond the ambient
/// ring's count are always zero, so monomials from rings of different size
/// compare consistently.
class Monomial {
 public:
  Monomial() { exps_.fill(0); }
  static Monomial variable(int k, unsigned power = 1);

  unsigned operator[](int k) const { return exps_[static_cast<std::size_t>(k)]; }
  void set(int k, unsigned e);
  unsigned degree() const { return degree_; }

  bool divides(const Monomial& other) const;
  /// other / this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxVars> exps_{};
  unsigned degree_ = 0;
};

/// Variable count plus monomial order. For MonomialOrder::block the first
/// `block_size` variables form the eliminated block; both blocks are ordered
/// degrevlex internally.
class Ring {
 public:
  Ring() = default;
  explicit Ring(int nvars, MonomialOrder order = MonomialOrder::degrevlex, int block_size = 0);
  Ring(std::vector<std::string> names, MonomialOrder order = MonomialOrder::degrevlex, int block_size = 0);

  int nvars() const { return nvars_; }
  MonomialOrder order() const { return order_; }
  int block_size() const { return block_size_; }
  const std::string& name(int k) const { return names_[static_cast<std::size_t>(k)]; }
  const std::vector<std::string>& names() const { return names_; }

  /// Same variables, different order.
  Ring with_order(MonomialOrder order, int block_size = 0) const;

  /// Negative, zero or positive as a is smaller, equal to or larger than b.
  int compare(const Monomial& a, const Monomial& b) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.nvars_ == b.nvars_ && a.order_ == b.order_ && a.block_size_ == b.block_size_;
  }

 private:
  int nvars_ = 0;
  MonomialOrder order_ = MonomialOrder::degrevlex;
  int block_size_ = 0;
  std::vector<std::string> names_;
};

struct Term {
  Monomial monomial;
  GaussianRational coeff;
};

/// Sparse polynomial over Q(i); terms sorted strictly descending in the
/// ring's order, no zero coefficients.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(Ring ring) : ring_(std::move(ring)) {}
  MultiPoly(Ring ring, const GaussianRational& constant);
  /// Terms in any order; like monomials are merged and zeros dropped.
  MultiPoly(Ring ring, std::vector<Term> terms);

  static MultiPoly variable(const Ring& ring, int k);
  /// Parses sums of products such as "l1^4*l2^2 - 1/4*D^2 + (x1 + i*x2)^2" with
  /// variable names from the ring; "i" is the imaginary unit unless it names a
  /// variable. Throws ParseError naming the offending token.
  static MultiPoly parse(const Ring& ring, std::string_view text);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Highest total degree; -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  const Term& leading_term() const;

  /// Coefficient of `m`, zero if absent.
  GaussianRational coefficient(const Monomial& m) const;

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const GaussianRational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const GaussianRational& c) { return a *= c; }
  friend MultiPoly operator*(const GaussianRational& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly times_term(const Monomial& m, const GaussianRational& c) const;
  MultiPoly pow(unsigned e) const;

  GaussianRational eval(std::span<const GaussianRational> point) const;
  MultiPoly partial_derivative(int k) const;
  /// Replaces variable k by values[k] (polynomials over a common target ring).
  MultiPoly substitute(std::span<const MultiPoly> values, const Ring& target) const;
  /// Re-sorts the terms for another ring with the same variable count.
  MultiPoly in_ring(const Ring& ring) const;

  /// Leading coefficient scaled to one.
  MultiPoly monic() const;

  std::string to_string() const;

 private:
  void check_ring(const MultiPoly& other) const;
  void normalize_terms();

  Ring ring_;
  std::vector<Term> terms_;
};

MultiPoly pow(const MultiPoly& p, unsigned e);

}  // namespace slocc

template <>
struct std::hash<slocc::Monomial> {
  std::size_t operator()(const slocc::Monomial& m) const { return m.hash(); }
};
