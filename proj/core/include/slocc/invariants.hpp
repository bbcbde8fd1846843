#pragma once

#include <array>
#include <string>
#include <vector>

#include "slocc/check.hpp"
#include "slocc/lie_algebra.hpp"
#include "slocc/poly.hpp"

namespace slocc {

/// F(x) = (H(x), L(x), M(x), D(x)).
struct InvariantSignature {
  GaussianRational H, L, M, D;

  const GaussianRational& operator[](int k) const;
  bool is_zero() const { return H.is_zero() && L.is_zero() && M.is_zero() && D.is_zero(); }
  friend bool operator==(const InvariantSignature&, const InvariantSignature&) = default;
  /// "(H, L, M, D)" with canonical Gaussian-rational strings.
  std::string to_string() const;
};

/// The generating invariants H, L, M, D of degrees 2, 4, 4, 6 as polynomials
/// in x1..x16, where x_k is the amplitude of b_k.
class InvariantSet {
 public:
  static const InvariantSet& instance();
  static constexpr std::array<const char*, 4> names{"H", "L", "M", "D"};

  const Ring& ring() const { return ring_; }
  const std::array<MultiPoly, 4>& polynomials() const { return polys_; }
  const MultiPoly& operator[](int k) const { return polys_[static_cast<std::size_t>(k)]; }

 private:
  InvariantSet();
  Ring ring_;
  std::array<MultiPoly, 4> polys_;
};

const InvariantSet& load_invariants();
InvariantSignature evaluate_signature(const StateVector& x);

/// Ring of family parameters l1..l4.
const Ring& parameter_ring();
/// Ring with variables H, L, M, D.
const Ring& signature_ring();

/// For every g0 basis element X and invariant P: sum_k (X.x)_k dP/dx_k = 0.
CheckReport check_infinitesimal_invariance();

/// F evaluated on the parametrised canonical set of a family (1..11), as
/// polynomials in l1..l4.
std::array<MultiPoly, 4> symbolic_family_values(int label);
/// The tabulated values for families 1..10 (family 11 is zero).
std::array<MultiPoly, 4> tabulated_family_values(int label);
/// symbolic_family_values agrees with tabulated_family_values for 1..10.
CheckReport check_family_values();

/// Generators of the relation ideal for families 2..10 (ring H, L, M, D).
std::vector<MultiPoly> relation_generators(int label);
/// Each generator vanishes on the tabulated family values.
CheckReport check_relations(int label);
CheckReport check_all_relations();

}  // namespace slocc
