#include "slocc/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace slocc {

std::string to_string(GBVerdict v) {
  switch (v) {
    case GBVerdict::trivial: return "trivial";
    case GBVerdict::proper: return "proper";
    case GBVerdict::resource_exhausted: return "resource_exhausted";
  }
  return "?";
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::yes: return "yes";
    case Membership::no: return "no";
    case Membership::unknown: return "unknown";
  }
  return "?";
}

std::string GBStats::to_string() const {
  std::ostringstream os;
  os << "pairs_processed=" << pairs_processed << " pairs_pruned=" << pairs_pruned
     << " zero_reductions=" << zero_reductions << " max_degree=" << max_degree_reached
     << " basis_size=" << basis_size << " seconds=" << seconds;
  if (!exhausted_by.empty()) os << " exhausted_by=" << exhausted_by;
  return os.str();
}

Ideal::Ideal(std::vector<MultiPoly> generators) {
  if (generators.empty()) throw std::invalid_argument("ideal needs at least one generator");
  ring_ = generators.front().ring();
  for (auto& g : generators) {
    if (!(g.ring() == ring_)) throw std::invalid_argument("polynomial ring mismatch");
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

Ideal::Ideal(const Ring& ring, std::vector<MultiPoly> generators) : ring_(ring) {
  for (auto& g : generators) {
    if (!(g.ring() == ring_)) throw std::invalid_argument("polynomial ring mismatch");
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

Ideal Ideal::with_order(MonomialOrder order, int block_size) const {
  Ring r = ring_.with_order(order, block_size);
  std::vector<MultiPoly> gens;
  for (const auto& g : generators_) gens.push_back(g.in_ring(r));
  return Ideal(r, std::move(gens));
}

namespace {

using Clock = std::chrono::steady_clock;

std::uint32_t support_mask(const Monomial& m) {
  std::uint32_t mask = 0;
  for (int k = 0; k < kMaxVars; ++k)
    if (m[k] != 0) mask |= 1u << k;
  return mask;
}

template <class C>
struct GTerm {
  Monomial m;
  C c;
};

template <class C>
using GPoly = std::vector<GTerm<C>>;

// Coefficients in Z[i]; polynomials kept primitive with leading coefficient
// in the first quadrant.
struct ExactArith {
  using C = GaussianInteger;

  static bool zero(const C& c) { return c.is_zero(); }
  static bool one(const C& c) { return c.re == 1 && sgn(c.im) == 0; }
  static C mul(const C& a, const C& b) { return a * b; }
  static C sub(const C& a, const C& b) { return a - b; }
  static C neg(const C& a) { return -a; }

  // fp * p - fg * m * g cancels the term c of p against the leading lg of g.
  static void factors(const C& c, const C& lg, C& fp, C& fg) {
    if (lg.is_unit()) {
      fp = {1, 0};
      fg = exact_div(c, lg);
      return;
    }
    C h = gauss_gcd(c, lg);
    fp = exact_div(lg, h);
    fg = exact_div(c, h);
  }

  static void normalize(GPoly<C>& p) {
    if (p.empty()) return;
    C g;
    for (const auto& t : p) {
      g = gauss_gcd(g, t.c);
      if (g.is_unit()) break;
    }
    C u = normalizing_unit(p.front().c);
    if (!g.is_unit()) {
      for (auto& t : p) t.c = exact_div(t.c, g);
    }
    if (!one(u))
      for (auto& t : p) t.c = t.c * u;
  }

  static std::optional<GPoly<C>> convert(const MultiPoly& f) {
    Integer den = 1;
    for (const auto& t : f.terms()) den = lcm(den, denominator_lcm(t.coeff));
    GPoly<C> out;
    GaussianRational scale{Rational(den)};
    for (const auto& t : f.terms()) {
      GaussianRational s = t.coeff * scale;
      out.push_back({t.monomial, C{s.re().get_num(), s.im().get_num()}});
    }
    return out;
  }

  static GaussianRational to_gr(const C& c) { return c.to_rational(); }
};

// Coefficients in Z/p with p = 1 (mod 4), the image of i a fixed square root of -1.
struct ModArith {
  using C = std::uint64_t;
  static constexpr C P = 1'000'000'009ULL;

  static C power(C b, C e) {
    C r = 1;
    b %= P;
    while (e) {
      if (e & 1) r = r * b % P;
      b = b * b % P;
      e >>= 1;
    }
    return r;
  }
  static C inv(C a) { return power(a, P - 2); }
  static C sqrt_minus_one() {
    static const C value = [] {
      for (C c = 2;; ++c) {
        C t = power(c, (P - 1) / 4);
        if (t * t % P == P - 1) return t;
      }
    }();
    return value;
  }

  static bool zero(C c) { return c == 0; }
  static bool one(C c) { return c == 1; }
  static C mul(C a, C b) { return a * b % P; }
  static C sub(C a, C b) { return (a + P - b) % P; }
  static C neg(C a) { return (P - a) % P; }
  static void factors(C c, C lg, C& fp, C& fg) {
    fp = 1;
    fg = mul(c, inv(lg));
  }
  static void normalize(GPoly<C>& p) {
    if (p.empty() || p.front().c == 1) return;
    C s = inv(p.front().c);
    for (auto& t : p) t.c = mul(t.c, s);
  }

  static std::optional<C> reduce(const Rational& q) {
    Integer num = q.get_num(), den = q.get_den();
    C d = mpz_fdiv_ui(den.get_mpz_t(), P);
    if (d == 0) return std::nullopt;
    C n = mpz_fdiv_ui(num.get_mpz_t(), P);
    return mul(n, inv(d));
  }

  static std::optional<GPoly<C>> convert(const MultiPoly& f) {
    GPoly<C> out;
    for (const auto& t : f.terms()) {
      auto re = reduce(t.coeff.re());
      auto im = reduce(t.coeff.im());
      if (!re || !im) return std::nullopt;
      C c = (*re + mul(*im, sqrt_minus_one())) % P;
      if (c != 0) out.push_back({t.monomial, c});
    }
    return out;
  }

  static GaussianRational to_gr(C c) { return GaussianRational(Rational(static_cast<unsigned long>(c))); }
};

struct Pair {
  int i;
  int j;
  Monomial lcm;
};

enum class RunStatus { finished, trivial, exhausted };

template <class A>
class Engine {
 public:
  using C = typename A::C;

  Engine(const Ring& ring, const GroebnerLimits& limits, bool stop_at_constant)
      : ring_(ring), limits_(limits), stop_at_constant_(stop_at_constant), start_(Clock::now()) {}

  RunStatus run(const std::vector<GPoly<C>>& generators) {
    RunStatus status = RunStatus::finished;
    std::vector<GPoly<C>> gens = generators;
    // Low-degree generators first keeps early reductions cheap.
    std::stable_sort(gens.begin(), gens.end(), [&](const auto& a, const auto& b) {
      return ring_.compare(a.front().m, b.front().m) < 0;
    });
    for (auto& g : gens) {
      if (!reduce(g)) return finish(RunStatus::exhausted);
      if (g.empty()) continue;
      if (g.front().m.degree() == 0) return finish(RunStatus::trivial);
      insert(std::move(g));
    }
    while (!pairs_.empty()) {
      if (!within_limits()) return finish(RunStatus::exhausted);
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        const auto& a = pairs_[k].lcm;
        const auto& b = pairs_[best].lcm;
        if (a.degree() < b.degree() || (a.degree() == b.degree() && ring_.compare(a, b) < 0)) best = k;
      }
      Pair pair = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      if (pair.lcm.degree() > limits_.max_degree) {
        stats_.exhausted_by = "degree";
        return finish(RunStatus::exhausted);
      }
      ++stats_.pairs_processed;
      stats_.max_degree_reached = std::max(stats_.max_degree_reached, pair.lcm.degree());
      GPoly<C> s = spoly(polys_[pair.i].poly, polys_[pair.j].poly, pair.lcm);
      if (!reduce(s)) return finish(RunStatus::exhausted);
      if (s.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      if (s.front().m.degree() == 0) {
        status = RunStatus::trivial;
        if (stop_at_constant_) return finish(status);
      }
      insert(std::move(s));
      if (status == RunStatus::trivial) return finish(status);
    }
    return finish(status);
  }

  // Minimal basis (active elements), tail-reduced and made monic over Q(i).
  std::vector<MultiPoly> reduced_basis() {
    std::vector<int> active;
    for (int k = 0; k < static_cast<int>(polys_.size()); ++k)
      if (polys_[k].active) active.push_back(k);
    std::vector<MultiPoly> out;
    for (int k : active) {
      GPoly<C> p = polys_[k].poly;
      tail_reduce(p, k);
      std::vector<Term> terms;
      for (const auto& t : p) terms.push_back({t.m, A::to_gr(t.c)});
      out.push_back(MultiPoly(ring_, std::move(terms)).monic());
    }
    std::sort(out.begin(), out.end(), [&](const MultiPoly& a, const MultiPoly& b) {
      return ring_.compare(a.leading_term().monomial, b.leading_term().monomial) > 0;
    });
    return out;
  }

  GBStats stats() const { return stats_; }

 private:
  struct Entry {
    GPoly<C> poly;
    std::uint32_t mask;
    bool active;
  };

  RunStatus finish(RunStatus s) {
    stats_.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    stats_.basis_size = 0;
    for (const auto& e : polys_)
      if (e.active) ++stats_.basis_size;
    return s;
  }

  bool within_limits() {
    if (limits_.cancel != nullptr && limits_.cancel->load(std::memory_order_relaxed)) {
      stats_.exhausted_by = "cancelled";
      return false;
    }
    if (stats_.pairs_processed >= limits_.max_pairs) {
      stats_.exhausted_by = "pairs";
      return false;
    }
    if (Clock::now() - start_ > limits_.time_budget) {
      stats_.exhausted_by = "time";
      return false;
    }
    return true;
  }

  const Entry* find_divisor(const Monomial& t, int skip = -1) const {
    std::uint32_t mask = support_mask(t);
    const Entry* best = nullptr;
    for (int k = 0; k < static_cast<int>(polys_.size()); ++k) {
      const Entry& e = polys_[k];
      if (!e.active || k == skip || (e.mask & ~mask) != 0) continue;
      if (!e.poly.front().m.divides(t)) continue;
      if (best == nullptr || e.poly.size() < best->poly.size()) best = &e;
    }
    return best;
  }

  // fp * p - fg * m * g, where the term at position `pos` of p cancels.
  GPoly<C> combine(const GPoly<C>& p, std::size_t pos, const C& fp, const GPoly<C>& g, const Monomial& m,
                   const C& fg) const {
    GPoly<C> out;
    out.reserve(p.size() + g.size());
    bool scale_p = !A::one(fp);
    for (std::size_t k = 0; k < pos; ++k) out.push_back({p[k].m, scale_p ? A::mul(p[k].c, fp) : p[k].c});
    std::size_t i = pos + 1, j = 1;
    while (i < p.size() || j < g.size()) {
      int c;
      Monomial gm;
      if (j < g.size()) gm = g[j].m * m;
      if (i == p.size())
        c = -1;
      else if (j == g.size())
        c = 1;
      else
        c = ring_.compare(p[i].m, gm);
      if (c > 0) {
        out.push_back({p[i].m, scale_p ? A::mul(p[i].c, fp) : p[i].c});
        ++i;
      } else if (c < 0) {
        out.push_back({gm, A::neg(A::mul(g[j].c, fg))});
        ++j;
      } else {
        C v = A::sub(scale_p ? A::mul(p[i].c, fp) : p[i].c, A::mul(g[j].c, fg));
        if (!A::zero(v)) out.push_back({p[i].m, std::move(v)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  // Full reduction against the active basis; false when limits are hit.
  bool reduce(GPoly<C>& p, int skip = -1) {
    std::size_t pos = 0;
    int steps = 0;
    while (pos < p.size()) {
      const Entry* e = find_divisor(p[pos].m, skip);
      if (e == nullptr) {
        ++pos;
        continue;
      }
      C fp, fg;
      A::factors(p[pos].c, e->poly.front().c, fp, fg);
      Monomial m = e->poly.front().m.quotient_of(p[pos].m);
      p = combine(p, pos, fp, e->poly, m, fg);
      if (++steps % 16 == 0) A::normalize(p);
      if (!within_limits()) return false;
    }
    A::normalize(p);
    return true;
  }

  void tail_reduce(GPoly<C>& p, int self) {
    std::size_t pos = 1;
    while (pos < p.size()) {
      const Entry* e = find_divisor(p[pos].m, self);
      if (e == nullptr) {
        ++pos;
        continue;
      }
      C fp, fg;
      A::factors(p[pos].c, e->poly.front().c, fp, fg);
      Monomial m = e->poly.front().m.quotient_of(p[pos].m);
      p = combine(p, pos, fp, e->poly, m, fg);
    }
    A::normalize(p);
  }

  GPoly<C> spoly(const GPoly<C>& f, const GPoly<C>& g, const Monomial& lcm) const {
    C ff, fg;
    A::factors(f.front().c, g.front().c, ff, fg);
    // ff * (lcm/ltf) f - fg * (lcm/ltg) g; multiply f first, then cancel its head.
    Monomial mf = f.front().m.quotient_of(lcm);
    GPoly<C> lifted;
    lifted.reserve(f.size());
    for (const auto& t : f) lifted.push_back({t.m * mf, t.c});
    Monomial mg = g.front().m.quotient_of(lcm);
    return combine(lifted, 0, ff, g, mg, fg);
  }

  void insert(GPoly<C> h) {
    int hi = static_cast<int>(polys_.size());
    const Monomial lth = h.front().m;
    polys_.push_back({std::move(h), support_mask(lth), true});

    std::vector<Pair> candidates;
    for (int k = 0; k < hi; ++k)
      if (polys_[k].active) candidates.push_back({hi, k, lth.lcm(polys_[k].poly.front().m)});

    // Chain criterion among the new pairs.
    std::vector<Pair> kept;
    std::vector<bool> removed(candidates.size(), false);
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const auto& ltg = polys_[candidates[a].j].poly.front().m;
      bool keep = lth.coprime(ltg);
      if (!keep) {
        keep = true;
        for (std::size_t b = 0; b < candidates.size() && keep; ++b) {
          if (b == a || removed[b]) continue;
          if (candidates[b].lcm.divides(candidates[a].lcm) &&
              (!(candidates[b].lcm == candidates[a].lcm) || b < a))
            keep = false;
        }
      }
      if (keep)
        kept.push_back(candidates[a]);
      else {
        removed[a] = true;
        ++stats_.pairs_pruned;
      }
    }
    // Product criterion.
    std::vector<Pair> fresh;
    for (const auto& p : kept) {
      if (lth.coprime(polys_[p.j].poly.front().m))
        ++stats_.pairs_pruned;
      else
        fresh.push_back(p);
    }
    // Old pairs made redundant by h.
    std::vector<Pair> survivors;
    for (const auto& p : pairs_) {
      const Monomial& l = p.lcm;
      bool drop = lth.divides(l) && !(lth.lcm(polys_[p.i].poly.front().m) == l) &&
                  !(lth.lcm(polys_[p.j].poly.front().m) == l);
      if (drop)
        ++stats_.pairs_pruned;
      else
        survivors.push_back(p);
    }
    pairs_ = std::move(survivors);
    pairs_.insert(pairs_.end(), fresh.begin(), fresh.end());

    for (int k = 0; k < hi; ++k)
      if (polys_[k].active && lth.divides(polys_[k].poly.front().m)) polys_[k].active = false;
  }

  Ring ring_;
  GroebnerLimits limits_;
  bool stop_at_constant_;
  Clock::time_point start_;
  GBStats stats_;
  std::vector<Entry> polys_;
  std::vector<Pair> pairs_;
};

template <class A>
std::optional<std::vector<GPoly<typename A::C>>> convert_all(const Ideal& ideal) {
  std::vector<GPoly<typename A::C>> out;
  for (const auto& g : ideal.generators()) {
    auto p = A::convert(g);
    if (!p) return std::nullopt;
    if (p->empty()) continue;
    A::normalize(*p);
    out.push_back(std::move(*p));
  }
  return out;
}

}  // namespace

GBResult buchberger(const Ideal& ideal, const GroebnerLimits& limits) {
  GBResult result;
  if (ideal.generators().empty()) throw std::invalid_argument("ideal needs at least one generator");
  Engine<ExactArith> engine(ideal.ring(), limits, true);
  RunStatus status = engine.run(*convert_all<ExactArith>(ideal));
  result.stats = engine.stats();
  switch (status) {
    case RunStatus::trivial:
      result.verdict = GBVerdict::trivial;
      result.basis = {MultiPoly(ideal.ring(), GaussianRational(1))};
      break;
    case RunStatus::finished:
      result.verdict = GBVerdict::proper;
      result.basis = engine.reduced_basis();
      break;
    case RunStatus::exhausted:
      result.verdict = GBVerdict::resource_exhausted;
      break;
  }
  return result;
}

Membership contains_one(const Ideal& ideal, const GroebnerLimits& limits, GBStats* stats) {
  if (ideal.generators().empty()) return Membership::no;
  Engine<ExactArith> engine(ideal.ring(), limits, true);
  RunStatus status = engine.run(*convert_all<ExactArith>(ideal));
  if (stats != nullptr) *stats = engine.stats();
  switch (status) {
    case RunStatus::trivial: return Membership::yes;
    case RunStatus::finished: return Membership::no;
    case RunStatus::exhausted: return Membership::unknown;
  }
  return Membership::unknown;
}

std::optional<bool> predict_contains_one(const Ideal& ideal, const GroebnerLimits& limits) {
  if (ideal.generators().empty()) return false;
  auto gens = convert_all<ModArith>(ideal);
  if (!gens) return std::nullopt;
  Engine<ModArith> engine(ideal.ring(), limits, true);
  RunStatus status = engine.run(*gens);
  if (status == RunStatus::exhausted) return std::nullopt;
  return status == RunStatus::trivial;
}

MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& g) {
  for (const auto& q : g)
    if (!(q.ring() == p.ring())) throw std::invalid_argument("polynomial ring mismatch");
  MultiPoly rest = p;
  std::vector<Term> remainder;
  while (!rest.is_zero()) {
    const Term lead = rest.leading_term();
    const MultiPoly* divisor = nullptr;
    for (const auto& q : g)
      if (!q.is_zero() && q.leading_term().monomial.divides(lead.monomial)) {
        divisor = &q;
        break;
      }
    if (divisor == nullptr) {
      remainder.push_back(lead);
      rest -= MultiPoly(p.ring(), std::vector<Term>{lead});
      continue;
    }
    const Term& lq = divisor->leading_term();
    rest -= divisor->times_term(lq.monomial.quotient_of(lead.monomial), lead.coeff / lq.coeff);
  }
  return MultiPoly(p.ring(), std::move(remainder));
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
  const Term& a = f.leading_term();
  const Term& b = g.leading_term();
  Monomial l = a.monomial.lcm(b.monomial);
  return f.times_term(a.monomial.quotient_of(l), a.coeff.inverse()) -
         g.times_term(b.monomial.quotient_of(l), b.coeff.inverse());
}

bool is_groebner_basis(const std::vector<MultiPoly>& g) {
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!normal_form(s_polynomial(g[i], g[j]), g).is_zero()) return false;
  return true;
}

}  // namespace slocc
