#pragma once

#include <atomic>
#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "slocc/poly.hpp"

namespace slocc {

struct GroebnerLimits {
  std::size_t max_pairs = 1'000'000;
  /// Pairs whose lcm exceeds this total degree are not processed; meeting one
  /// before the computation finishes makes the result resource_exhausted.
  unsigned max_degree = 12;
  std::chrono::duration<double> time_budget{60.0};
  const std::atomic<bool>* cancel = nullptr;
};

enum class GBVerdict { trivial, proper, resource_exhausted };
enum class Membership { yes, no, unknown };

std::string to_string(GBVerdict v);
std::string to_string(Membership m);

struct GBStats {
  std::size_t pairs_processed = 0;
  std::size_t pairs_pruned = 0;
  std::size_t zero_reductions = 0;
  unsigned max_degree_reached = 0;
  std::size_t basis_size = 0;
  double seconds = 0;
  std::string exhausted_by;  // "pairs", "degree", "time", "cancelled" or empty

  std::string to_string() const;
};

/// Generators in a common ring; zero generators are dropped.
class Ideal {
 public:
  explicit Ideal(std::vector<MultiPoly> generators);
  Ideal(const Ring& ring, std::vector<MultiPoly> generators);

  const Ring& ring() const { return ring_; }
  const std::vector<MultiPoly>& generators() const { return generators_; }
  /// The same ideal with the generators re-sorted for another order.
  Ideal with_order(MonomialOrder order, int block_size = 0) const;

 private:
  Ring ring_;
  std::vector<MultiPoly> generators_;
};

struct GBResult {
  GBVerdict verdict = GBVerdict::resource_exhausted;
  /// Reduced basis, monic, sorted by descending leading monomial; {1} when trivial.
  std::vector<MultiPoly> basis;
  GBStats stats;
};

/// Buchberger's algorithm with the Gebauer-Moeller criteria and the normal
/// selection strategy, fraction-free over Z[i].
GBResult buchberger(const Ideal& ideal, const GroebnerLimits& limits = {});

/// yes iff 1 lies in the ideal. Stops as soon as a constant is produced.
Membership contains_one(const Ideal& ideal, const GroebnerLimits& limits = {}, GBStats* stats = nullptr);

/// The same computation modulo a prime p = 1 (mod 4). Advisory only: a
/// prediction of contains_one, or nullopt when exhausted or when the prime
/// divides a denominator.
std::optional<bool> predict_contains_one(const Ideal& ideal, const GroebnerLimits& limits = {});

/// Remainder of p on division by g (leading terms of g with respect to p's ring).
MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& g);

/// The polynomial S(f, g) = (L/lt f) f - (L/lt g) g with L the lcm of leading monomials.
MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g);

/// Buchberger's criterion: every S-polynomial reduces to zero.
bool is_groebner_basis(const std::vector<MultiPoly>& g);

}  // namespace slocc
