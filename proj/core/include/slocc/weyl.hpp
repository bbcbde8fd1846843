#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slocc/gaussian_rational.hpp"
#include "slocc/lie_algebra.hpp"

namespace slocc {

/// Values (alpha(u1), ..., alpha(u4)) of a root.
using Root = std::array<int, 4>;
/// Coordinates (l1, ..., l4) of l1*u1 + ... + l4*u4 in the Cartan subspace.
using CartanPoint = std::array<GaussianRational, 4>;
/// Subset of the 24 roots, bit k for root index k.
using RootMask = std::uint32_t;

constexpr int kNumRoots = 24;
constexpr int kNumFamilies = 11;

/// 4x4 matrix with entries in (1/2)Z acting on Cartan coordinates.
class WeylElement {
 public:
  WeylElement();  // identity
  static WeylElement from_twice(const std::array<int, 16>& twice);
  /// Throws std::invalid_argument unless every entry lies in (1/2)Z.
  static WeylElement from_matrix(const Matrix& m);

  Rational entry(int r, int c) const;
  Matrix matrix() const;
  const std::array<int, 16>& twice() const { return twice_; }
  bool is_identity() const { return *this == WeylElement(); }

  CartanPoint apply(const CartanPoint& p) const;
  /// The transpose; the inverse for every element of W (which is orthogonal).
  WeylElement transpose() const;

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;

  /// Row-major, e.g. "[[1,0,0,0],[0,-1/2,...],...]".
  std::string to_string() const;

 private:
  std::array<int, 16> twice_{};
};

struct SubsystemClass {
  RootMask representative = 0;
  int size = 0;         // number of roots
  int rank = 0;
  int class_size = 0;   // number of W-conjugates
  bool complete = false;
  std::string type;     // "empty", "A1", "2A1", "A2", "3A1", "A3", "4A1" or "D4"
  int label = 0;        // 1..11 for complete classes, 0 otherwise
};

struct GammaGroup {
  int label = 0;
  std::vector<WeylElement> generators;
  std::vector<WeylElement> elements;
  int order() const { return static_cast<int>(elements.size()); }
};

struct FamilyMatch {
  int label = 0;
  WeylElement w;  // w * p lies in the canonical set of the family
};

/// Root system of g relative to the Cartan subspace spanned by u1..u4, the
/// Weyl group and the eleven complete root subsystems. Everything is computed
/// from the structure constants on first use and then immutable.
class RootSystem {
 public:
  static const RootSystem& instance();

  const std::vector<Root>& roots() const { return roots_; }
  int index_of(const Root& r) const;  // -1 if not a root
  bool is_positive(int k) const { return positive_[k]; }
  const std::array<int, 4>& simple_roots() const { return simple_; }
  /// h_alpha in Cartan coordinates, normalised to alpha(h_alpha) = 2.
  const std::array<Rational, 4>& coroot(int k) const { return coroots_[k]; }
  /// A nonzero root vector x_alpha in g.
  const LieElement& root_vector(int k) const { return root_vectors_[k]; }
  GaussianRational evaluate(int k, const CartanPoint& p) const;

  WeylElement reflection(int k) const;
  const std::vector<WeylElement>& group() const { return group_; }
  /// Image of root k under w (w acts on roots by the inverse transpose).
  int act_on_root(const WeylElement& w, int k) const;
  RootMask act_on_mask(const WeylElement& w, RootMask m) const;

  /// Smallest set of roots containing m that is closed under negation and
  /// under addition within the root system.
  RootMask closure(RootMask m) const;
  /// Span of m intersected with the root system.
  RootMask span_closure(RootMask m) const;
  bool is_complete(RootMask m) const { return span_closure(m) == m; }
  std::string type_of(RootMask m) const;
  int rank_of(RootMask m) const;

  /// Annihilator {alpha : alpha(p) = 0}.
  RootMask annihilator(const CartanPoint& p) const;

  /// All root subsystems up to W-conjugacy, sorted by size.
  const std::vector<SubsystemClass>& subsystem_classes() const { return classes_; }
  /// The canonical complete subsystem of a family (1..11).
  RootMask canonical_subsystem(int label) const;

  /// Subgroup of W generated by the reflections in m.
  std::vector<WeylElement> reflection_subgroup(RootMask m) const;
  /// {w : w(m) = m}.
  std::vector<WeylElement> setwise_stabilizer(RootMask m) const;
  std::vector<WeylElement> point_stabilizer(const CartanPoint& p) const;

 private:
  RootSystem();
  void compute_roots();
  void generate_group();
  void enumerate_subsystems();
  int permutation_index(const WeylElement& w) const;

  std::vector<Root> roots_;
  std::vector<bool> positive_;
  std::array<int, 4> simple_{};
  std::vector<std::array<Rational, 4>> coroots_;
  std::vector<LieElement> root_vectors_;
  std::vector<std::vector<int>> sums_;  // sums_[i][j] = index of root_i + root_j, or -1
  std::vector<WeylElement> group_;
  std::vector<std::array<std::int8_t, kNumRoots>> perms_;  // parallel to group_
  std::vector<SubsystemClass> classes_;
  std::array<RootMask, kNumFamilies + 1> canonical_{};
};

std::vector<WeylElement> generate_weyl_group();
std::vector<SubsystemClass> enumerate_complete_subsystems();

/// Number of parameters of family i (4, 3, 2, 2, 2, 2, 1, 1, 1, 1, 0).
int family_parameter_count(int label);
/// The point of the family's canonical set with the given parameters.
CartanPoint family_point(int label, const std::vector<GaussianRational>& lambda);
/// Inverse of family_point, when p lies in the span of the family's set.
std::optional<std::vector<GaussianRational>> family_parameters(int label, const CartanPoint& p);
/// p in the canonical set h_Pi (all roots of Pi vanish) and no other root vanishes.
bool in_canonical_open_set(int label, const CartanPoint& p);
/// The condensed polynomial conditions on the parameters (cross-check of the above).
bool family_condition(int label, const std::vector<GaussianRational>& lambda);
/// Human-readable form of family_condition, e.g. "l1*l2*(l1+l2) != 0".
std::string family_condition_text(int label);

FamilyMatch identify_family(const CartanPoint& p);
GammaGroup gamma_group(int label);
/// Images of the parameters under the family's Gamma group (with repetitions removed).
std::vector<std::vector<GaussianRational>> gamma_orbit(int label, const std::vector<GaussianRational>& lambda);
std::optional<WeylElement> w_reduce(const CartanPoint& p, const CartanPoint& q);

/// Lexicographic comparison of tuples under canonical_compare.
std::strong_ordering compare_tuples(const std::vector<GaussianRational>& a, const std::vector<GaussianRational>& b);

std::string to_string(const CartanPoint& p);

}  // namespace slocc
