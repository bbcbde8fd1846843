#include "slocc/conjugacy.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "slocc/jordan.hpp"

namespace slocc {

std::string to_string(Answer a) {
  switch (a) {
    case Answer::yes: return "yes";
    case Answer::no: return "no";
    case Answer::unknown: return "unknown";
  }
  return "?";
}

std::string to_string(Route r) {
  switch (r) {
    case Route::identical: return "identical";
    case Route::invariant_criterion: return "invariant_criterion";
    case Route::prefilter: return "prefilter";
    case Route::groebner: return "groebner";
  }
  return "?";
}

std::string FilterSignature::to_string() const {
  std::ostringstream os;
  os << (nilpotent ? "nilpotent" : semisimple ? "semisimple" : "mixed") << " dims=(" << dims[0] << "," << dims[1]
     << "," << dims[2] << "," << dims[3] << ") ranks=[";
  for (std::size_t k = 0; k < ad_ranks.size(); ++k) os << (k ? "," : "") << ad_ranks[k];
  os << "] F=" << invariants.to_string();
  return os.str();
}

FilterSignature prefilter_signature(const StateVector& x) {
  FilterSignature sig;
  sig.invariants = evaluate_signature(x);
  sig.nilpotent = is_nilpotent(x);
  sig.semisimple = !sig.nilpotent ? is_semisimple(x) : x.is_zero();
  CentralizerInfo z = centralizer(x);
  sig.dims = {z.dim, z.dim_even, z.dim_odd, z.derived_dim};
  sig.ad_ranks = ad_rank_sequence(x);
  return sig;
}

const Ring& conjugacy_ring() {
  static const Ring ring(std::vector<std::string>{"a11", "a12", "a21", "a22", "b11", "b12", "b21", "b22", "c11", "c12",
                                                  "c21", "c22", "d11", "d12", "d21", "d22"});
  return ring;
}

namespace {

// Variable index of entry (r, c) of factor f.
int var(int f, int r, int c) { return 4 * f + 2 * r + c; }

int amp_index(int i1, int i2, int i3, int i4) {
  std::string bits{static_cast<char>('0' + i1), static_cast<char>('0' + i2), static_cast<char>('0' + i3),
                   static_cast<char>('0' + i4)};
  return StateVector::index_of(bits);
}

MultiPoly monomial(const Ring& ring, const GaussianRational& c, int v1, int v2) {
  Monomial m = Monomial::variable(v1);
  m = m * Monomial::variable(v2);
  return MultiPoly(ring, std::vector<Term>{{m, c}});
}

// Entry (r, c) of adj(X) for factor f, as a signed variable.
std::pair<int, int> adjugate_entry(int f, int r, int c) {
  if (r == 0 && c == 0) return {var(f, 1, 1), 1};
  if (r == 1 && c == 1) return {var(f, 0, 0), 1};
  if (r == 0 && c == 1) return {var(f, 0, 1), -1};
  return {var(f, 1, 0), -1};
}

SL2Quad quad_from_values(const std::array<GaussianRational, 16>& v) {
  std::array<Mat2, 4> f;
  for (int k = 0; k < 4; ++k) f[k] = Mat2{v[4 * k], v[4 * k + 1], v[4 * k + 2], v[4 * k + 3]};
  return SL2Quad(f);
}

// Value c when p is x_k - c (monic), otherwise nullopt.
std::optional<std::pair<int, GaussianRational>> linear_value(const MultiPoly& p) {
  const Term& lead = p.leading_term();
  if (lead.monomial.degree() != 1 || p.size() > 2) return std::nullopt;
  int k = 0;
  while (lead.monomial[k] == 0) ++k;
  if (p.size() == 1) return std::make_pair(k, GaussianRational(0));
  const Term& rest = p.terms()[1];
  if (rest.monomial.degree() != 0) return std::nullopt;
  return std::make_pair(k, -rest.coeff / lead.coeff);
}

}  // namespace

Ideal conjugacy_system(const StateVector& a, const StateVector& b) {
  const Ring& ring = conjugacy_ring();
  std::vector<MultiPoly> gens;
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2)
      for (int i3 = 0; i3 < 2; ++i3)
        for (int i4 = 0; i4 < 2; ++i4) {
          MultiPoly eq(ring);
          for (int j1 = 0; j1 < 2; ++j1)
            for (int j2 = 0; j2 < 2; ++j2) {
              const GaussianRational& c = a[amp_index(j1, j2, i3, i4)];
              if (!c.is_zero()) eq += monomial(ring, c, var(0, i1, j1), var(1, i2, j2));
            }
          for (int k3 = 0; k3 < 2; ++k3)
            for (int k4 = 0; k4 < 2; ++k4) {
              const GaussianRational& c = b[amp_index(i1, i2, k3, k4)];
              if (c.is_zero()) continue;
              auto [v3, s3] = adjugate_entry(2, i3, k3);
              auto [v4, s4] = adjugate_entry(3, i4, k4);
              eq -= monomial(ring, c * GaussianRational(s3 * s4), v3, v4);
            }
          gens.push_back(std::move(eq));
        }
  for (int f = 0; f < 4; ++f)
    gens.push_back(monomial(ring, 1, var(f, 0, 0), var(f, 1, 1)) - monomial(ring, 1, var(f, 0, 1), var(f, 1, 0)) -
                   MultiPoly(ring, GaussianRational(1)));
  return Ideal(ring, std::move(gens));
}

std::optional<SL2Quad> find_witness(const StateVector& a, const StateVector& b, const GroebnerLimits& limits,
                                    int attempts, unsigned seed) {
  const Ring& ring = conjugacy_ring();
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> small(-3, 3);
  Ideal base = conjugacy_system(a, b);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::vector<MultiPoly> gens = base.generators();
    bool failed = false;
    for (int step = 0; step <= 16 && !failed; ++step) {
      GBResult gb = buchberger(Ideal(ring, gens), limits);
      if (gb.verdict != GBVerdict::proper) {
        failed = true;
        break;
      }
      std::array<std::optional<GaussianRational>, 16> fixed;
      for (const auto& p : gb.basis)
        if (auto lv = linear_value(p)) fixed[lv->first] = lv->second;
      int free_var = -1;
      for (int k = 0; k < 16 && free_var < 0; ++k)
        if (!fixed[k]) free_var = k;
      if (free_var < 0) {
        std::array<GaussianRational, 16> values;
        for (int k = 0; k < 16; ++k) values[k] = *fixed[k];
        try {
          SL2Quad g = quad_from_values(values);
          if (group_act(g, a) == b) return g;
        } catch (const std::invalid_argument&) {
        }
        failed = true;
        break;
      }
      // Try 0 first on the first attempt, random small values afterwards.
      bool placed = false;
      for (int tries = 0; tries < 6 && !placed; ++tries) {
        int value = (attempt == 0 && tries == 0) ? 0 : small(rng);
        std::vector<MultiPoly> trial = gb.basis;
        trial.push_back(MultiPoly::variable(ring, free_var) - MultiPoly(ring, GaussianRational(value)));
        Membership m = contains_one(Ideal(ring, trial), limits);
        if (m == Membership::no) {
          gens = std::move(trial);
          placed = true;
        }
      }
      if (!placed) failed = true;
    }
  }
  return std::nullopt;
}

ConjugacyVerdict g0_conjugate(const StateVector& a, const StateVector& b, const ConjugacyLimits& limits) {
  ConjugacyVerdict v;
  if (a == b) {
    v.answer = Answer::yes;
    v.route = Route::identical;
    v.witness = SL2Quad();
    return v;
  }
  InvariantSignature fa = evaluate_signature(a);
  InvariantSignature fb = evaluate_signature(b);
  if (!(fa == fb)) {
    v.answer = Answer::no;
    v.route = Route::invariant_criterion;
    return v;
  }
  bool sa = is_semisimple(a);
  bool sb = is_semisimple(b);
  if (sa && sb) {
    v.answer = Answer::yes;
    v.route = Route::invariant_criterion;
  } else if (sa != sb || !(prefilter_signature(a) == prefilter_signature(b))) {
    v.answer = Answer::no;
    v.route = Route::prefilter;
    return v;
  } else {
    v.route = Route::groebner;
    Membership m = contains_one(conjugacy_system(a, b), limits.groebner, &v.stats);
    v.answer = m == Membership::yes ? Answer::no : m == Membership::no ? Answer::yes : Answer::unknown;
  }
  if (v.answer == Answer::yes && limits.want_witness)
    v.witness = find_witness(a, b, limits.groebner, limits.witness_attempts);
  return v;
}

ConjugacyVerdict s_conjugate(const StateVector& a, const StateVector& b, const ConjugacyLimits& limits) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  bool any_unknown = false;
  ConjugacyVerdict last;
  for (const Perm4& sigma : all_permutations()) {
    ConjugacyLimits branch = limits;
    auto elapsed = std::chrono::duration<double>(Clock::now() - start);
    branch.groebner.time_budget = std::max(limits.groebner.time_budget - elapsed, std::chrono::duration<double>(0));
    if (branch.groebner.time_budget.count() <= 0) {
      any_unknown = true;
      break;
    }
    ConjugacyVerdict v = g0_conjugate(sym4_act(sigma, a), b, branch);
    if (v.answer == Answer::yes) {
      v.permutation = sigma;
      return v;
    }
    if (v.answer == Answer::unknown) any_unknown = true;
    last = v;
  }
  last.answer = any_unknown ? Answer::unknown : Answer::no;
  last.witness.reset();
  return last;
}

}  // namespace slocc
