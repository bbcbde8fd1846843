#pragma once

#include <vector>

#include "slocc/lie_algebra.hpp"

namespace slocc {

/// x = s + n with s semisimple, n nilpotent, [s, n] = 0, both in g1.
struct JordanPair {
  StateVector s;
  StateVector n;
  friend bool operator==(const JordanPair&, const JordanPair&) = default;
};

/// The semisimple part of ad(x) is found by Newton iteration on the
/// squarefree part of the characteristic polynomial, modulo the
/// characteristic polynomial; n is then the unique element of g1 with
/// ad(n) = ad(x) - S. Throws std::logic_error if any identity fails.
JordanPair jordan_decompose(const StateVector& x);

/// The squarefree part of the characteristic polynomial annihilates ad(x).
bool is_semisimple(const StateVector& x);
/// ad(x) has characteristic polynomial T^28; cross-checked against F(x) = 0
/// (std::logic_error on disagreement).
bool is_nilpotent(const StateVector& x);

struct CentralizerInfo {
  std::vector<LieElement> basis;  // even basis vectors first
  int dim = 0;
  int dim_even = 0;
  int dim_odd = 0;
  int derived_dim = 0;  // dimension of [z, z]
};

CentralizerInfo centralizer(const StateVector& x);

/// Ranks of ad(x)^k for k = 1, 2, ... up to the first k where the rank stops
/// changing.
std::vector<int> ad_rank_sequence(const StateVector& x);

}  // namespace slocc
