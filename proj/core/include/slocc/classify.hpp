#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slocc/catalog.hpp"
#include "slocc/conjugacy.hpp"
#include "slocc/jordan.hpp"

namespace slocc {

enum class Exactness { exact, partial };
std::string to_string(Exactness e);

/// Family parameters with a given invariant signature.
struct ParameterSolutions {
  /// All solutions in Q(i), closed under the family's Gamma group.
  std::vector<std::vector<GaussianRational>> solutions;
  /// Set when no solution lies in Q(i), e.g. "l1^2 = i".
  std::string symbolic;
};

/// Inverts the family's row of invariant values. Throws
/// std::invalid_argument if the signature violates a relation of the family.
ParameterSolutions semisimple_parameters(int family, const InvariantSignature& sig, const GroebnerLimits& limits = {});

/// Family 1..11 of a semisimple element, from the dimensions of its
/// centraliser and of the derived centraliser, then the vanishing pattern of
/// the invariants.
int semisimple_family(const StateVector& s);
int semisimple_family(int centralizer_dim, int derived_dim, const InvariantSignature& sig);

/// Lexicographically smallest image of the parameters under the family's
/// Gamma group.
std::vector<GaussianRational> canonical_parameters(int family, const std::vector<GaussianRational>& lambda);

/// The finite group acting on parameters for S-conjugacy of family i
/// (i = 1, 2, 3, 4, 7, 10), as matrices acting on column vectors.
const std::vector<Matrix>& s_parameter_group(int family);

struct SNormalForm {
  std::string s_class;   // "N3", "SS4", "MT7.2"
  std::string d_family;  // "D1".."D9"
  int family = 0;        // the family of the S-class representative
  std::vector<GaussianRational> parameters;
};

/// Transfers a semisimple or mixed class to the family of its S-class
/// representative and reduces the parameters under the S-parameter group.
SNormalForm s_normal_form(const OrbitClassLabel& label);

struct ClassificationReport {
  StateVector input;
  JordanPair jordan;
  InvariantSignature signature;
  OrbitClassLabel label;  // parameters in Gamma-normal form when exact
  std::optional<StateVector> normal_form;
  const StabilizerDescriptor* stabilizer = nullptr;
  Exactness exactness = Exactness::partial;
  std::optional<SNormalForm> s_form;
  /// Candidate nilpotent orbits (nilpotent) or j values (mixed) left when
  /// the class could not be pinned down.
  std::vector<int> candidates;
  std::string symbolic_parameters;
  std::vector<std::string> notes;
};

ClassificationReport classify_state(const StateVector& x, const ConjugacyLimits& limits = {});

/// Points of a zero-dimensional ideal with all coordinates in Q(i), from a
/// lex Groebner basis. nullopt when the basis cannot be computed within the
/// limits or the ideal is not zero-dimensional.
std::optional<std::vector<std::vector<GaussianRational>>> gaussian_rational_points(const Ideal& ideal,
                                                                                   const GroebnerLimits& limits = {});

}  // namespace slocc
