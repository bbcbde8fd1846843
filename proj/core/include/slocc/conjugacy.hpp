#pragma once

#include <array>
#include <atomic>
#include <optional>
#include <string>
#include <vector>

#include "slocc/groebner.hpp"
#include "slocc/invariants.hpp"
#include "slocc/lie_algebra.hpp"

namespace slocc {

enum class Answer { yes, no, unknown };
enum class Route { identical, invariant_criterion, prefilter, groebner };

std::string to_string(Answer a);
std::string to_string(Route r);

/// Orbit-invariant fingerprint of a state.
struct FilterSignature {
  bool nilpotent = false;
  bool semisimple = false;
  /// (dim z_g, dim z_g0, dim z_g1, dim [z_g, z_g]).
  std::array<int, 4> dims{};
  std::vector<int> ad_ranks;
  InvariantSignature invariants;

  friend bool operator==(const FilterSignature&, const FilterSignature&) = default;
  std::string to_string() const;
};

FilterSignature prefilter_signature(const StateVector& x);

struct ConjugacyLimits {
  GroebnerLimits groebner;
  bool want_witness = false;
  int witness_attempts = 8;
};

struct ConjugacyVerdict {
  Answer answer = Answer::unknown;
  Route route = Route::groebner;
  /// When present, group_act(*witness, a) == b.
  std::optional<SL2Quad> witness;
  /// Set by s_conjugate: the permutation sigma with sym4_act(sigma, a) ~ b.
  std::optional<Perm4> permutation;
  GBStats stats;
};

/// Ring with variables a11 a12 a21 a22 b11 ... d22 (A = [[a11, a12], [a21, a22]]).
const Ring& conjugacy_ring();

/// The equations (A (x) B) a = b (C^-1 (x) D^-1)^T, with the inverses written
/// as adjugates, together with det A = ... = det D = 1. Their common zeros are
/// exactly the g in SL(2)^4 with g.a = b.
Ideal conjugacy_system(const StateVector& a, const StateVector& b);

/// Decides whether b lies in the SL(2)^4-orbit of a.
ConjugacyVerdict g0_conjugate(const StateVector& a, const StateVector& b, const ConjugacyLimits& limits = {});

/// Decides whether b lies in the Sym4 x SL(2)^4-orbit of a.
ConjugacyVerdict s_conjugate(const StateVector& a, const StateVector& b, const ConjugacyLimits& limits = {});

/// Best effort: a point of the conjugacy variety found by fixing the
/// unknowns one at a time to small values. Every returned quad is verified.
std::optional<SL2Quad> find_witness(const StateVector& a, const StateVector& b, const GroebnerLimits& limits,
                                    int attempts, unsigned seed = 1);

}  // namespace slocc
