#pragma once

#include <functional>
#include <span>
#include <vector>

#include "slocc/lie_algebra.hpp"

namespace slocc::data {

struct NilpotentOrbitRow {
  const char* representative;
  int n_family;  // k with the orbit S-conjugate to N_k
};

struct MixedPartRow {
  int i;
  int j;
  const char* element;
  int n_family;  // 0 where the table has no entry
};

/// A parametrised identity component. Parameters flagged `nonzero` range
/// over C^x, the others over C.
struct ComponentRow {
  const char* text;
  std::vector<const char*> parameters;
  std::vector<bool> nonzero;
  int dim;
  std::function<SL2Quad(std::span<const GaussianRational>)> build;
};

struct StabilizerRow {
  const char* anchor;
  ComponentRow component;
  const char* generators;  // e.g. "(J,J,J,J),(-I,-I,I,I)"
};

struct MixedSClassRow {
  int i;
  int j;
  int n_family;
  StabilizerRow stabilizer;
};

struct NilpotentSClassRow {
  int n_family;
  int orbit;
  StabilizerRow stabilizer;
};

struct DFamilyRow {
  const char* anchor;
  const char* semisimple;  // in terms of a, b, c, d
  const char* nilpotent;
};

/// Index k-1 holds orbit k (1..31).
const std::vector<NilpotentOrbitRow>& nilpotent_orbit_rows();
/// All nilpotent parts n_{i,j}, i = 2..10, in table order.
const std::vector<MixedPartRow>& mixed_part_rows();
/// Index i-1 holds row i (1..10).
const std::vector<StabilizerRow>& semisimple_stabilizer_rows();
const std::vector<MixedSClassRow>& mixed_s_class_rows();
/// N2..N9 (N1 = 0 has the whole group as stabiliser).
const std::vector<NilpotentSClassRow>& nilpotent_s_class_rows();
/// Index k-1 holds D_k.
const std::vector<DFamilyRow>& d_family_rows();

struct SemisimpleSClassRow {
  int family;
  const char* group;  // the parameter group named by the table
};
const std::vector<SemisimpleSClassRow>& semisimple_s_class_rows();

}  // namespace slocc::data
