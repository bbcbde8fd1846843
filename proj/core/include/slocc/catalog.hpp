#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "slocc/check.hpp"
#include "slocc/lie_algebra.hpp"

namespace slocc {

enum class ClassKind { nilpotent, semisimple, mixed };
enum class Level { G0, S };

std::string to_string(ClassKind k);

/// A G0-level class: nilpotent orbit k (1..31), semisimple family i (1..11;
/// family 11 is the zero element and coincides with nilpotent orbit 31, so it
/// is not counted separately), or mixed (i, j).
struct OrbitClassLabel {
  ClassKind kind = ClassKind::nilpotent;
  int family = 0;  // semisimple and mixed
  int index = 0;   // orbit number (nilpotent) or j (mixed)
  std::vector<GaussianRational> parameters;
  std::optional<std::string> s_class;

  /// "nilpotent/k", "semisimple/i" or "mixed/i,j".
  std::string name() const;
  /// Inverse of name(); throws std::invalid_argument.
  static OrbitClassLabel parse(const std::string& name);
  bool same_class(const OrbitClassLabel& other) const {
    return kind == other.kind && family == other.family && index == other.index;
  }
};

struct StabilizerDescriptor {
  bool tabulated = false;
  std::string anchor;
  std::string identity_component;  // symbolic shape, "1" when trivial
  std::vector<std::string> parameter_names;
  std::vector<bool> parameter_nonzero;  // domain C^x when true, C otherwise
  int identity_component_dim = 0;
  std::vector<std::string> generator_text;
  std::vector<SL2Quad> component_generators;
  /// Element of the identity component at the given parameters.
  std::function<SL2Quad(std::span<const GaussianRational>)> identity_element;
};

struct CatalogEntry {
  Level level = Level::G0;
  std::string name;  // G0: OrbitClassLabel::name(); S: "N3", "SS4", "MT7.2", ...
  OrbitClassLabel label;  // the G0 class of the representative
  std::string anchor;
  std::string description;  // the representative as a formula in l1..l4
  int parameter_count = 0;
  std::vector<GaussianRational> default_parameters;
  std::string constraint;  // parameter conditions, empty when none
  std::string s_class;
  std::string d_family;  // "D1".."D9"
  StabilizerDescriptor stabilizer;
};

struct Census {
  int nilpotent = 0;
  int semisimple = 0;
  int mixed = 0;
  int total() const { return nilpotent + semisimple + mixed; }
};

/// The classification tables as queryable data. Built once, read-only.
class Catalog {
 public:
  static const Catalog& instance();

  const std::vector<CatalogEntry>& entries(Level level) const { return level == Level::G0 ? g0_ : s_; }
  /// Looks up a G0 name ("mixed/7,2") or an S name ("MT7.2"); nullptr if absent.
  const CatalogEntry* find(const std::string& name) const;
  Census census(Level level) const;

  /// Number of nilpotent parts for family i (0 outside 2..10).
  int mixed_count(int family) const;
  const StateVector& nilpotent_part(int family, int j) const;
  const StateVector& nilpotent_orbit(int k) const;
  /// The element N_k (k = 1..9) of the D-families.
  const StateVector& d_family_nilpotent(int k) const;
  /// k such that the given nilpotent orbit is S-conjugate to N_k.
  int orbit_n_family(int orbit) const;
  /// k such that n_{i,j} is S-conjugate to N_k; for families 5, 6, 8, 9 the
  /// value is carried over from the permuted family 4 or 7.
  int part_n_family(int family, int j) const;
  /// Whether part_n_family(i, j) is stated by the table (i = 2, 3, 4, 7, 10).
  bool part_n_family_tabulated(int family, int j) const;

 private:
  Catalog();
  void build_parts();
  void build_g0();
  void build_s();

  std::vector<StateVector> orbits_;
  std::vector<std::vector<StateVector>> parts_;  // parts_[i][j-1]
  std::vector<std::vector<int>> part_targets_;
  std::vector<StateVector> d_nilpotents_;
  std::vector<CatalogEntry> g0_;
  std::vector<CatalogEntry> s_;
};

/// Family of the S-class representing semisimple family i (5, 6 -> 4; 8, 9 -> 7).
int s_representative_family(int family);

/// The representative state. Parameters must satisfy the family conditions;
/// otherwise std::invalid_argument names the violated condition.
StateVector representative(const OrbitClassLabel& label, const std::vector<GaussianRational>& params);
StateVector representative(const OrbitClassLabel& label);

const StabilizerDescriptor& stabilizer_of(const OrbitClassLabel& label);
/// S-class name of a G0 class ("N3", "SS4", "MT7.2").
std::string s_class_of(const OrbitClassLabel& label);
/// The D-family tag "Dk" of a G0 class.
std::string d_family_of(const OrbitClassLabel& label);

Census list_classes(Level level);

/// Parses a tuple list such as "(J,J,J,J),(-I,I,-I,I)" over the symbols
/// I, J, K and L = D(i), each optionally negated.
std::vector<SL2Quad> parse_generators(const std::string& text);

/// Every component generator and sampled identity-component element fixes
/// the representative of its row, at every row of the three stabiliser tables.
CheckReport stabilizer_selfcheck();

}  // namespace slocc
