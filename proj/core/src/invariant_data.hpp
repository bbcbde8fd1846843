#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace slocc::data {

struct InvariantRecord {
  const char* name;
  int degree;
  int terms;
  std::uint64_t checksum;  // FNV-1a over the monomial list text
  const char* monomials;
};

const std::array<InvariantRecord, 4>& invariant_records();

/// Values (H, L, M, D) on the canonical set of each semisimple family, as
/// polynomials in l1..l4; index 0 is unused.
const std::array<std::array<const char*, 4>, 11>& family_value_rows();

/// Generators of the relation ideal among (H, L, M, D) for families 2..10;
/// rows 0, 1 are empty.
const std::array<std::vector<const char*>, 11>& relation_rows();

}  // namespace slocc::data
