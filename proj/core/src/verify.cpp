#include "slocc/verify.hpp"

#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "slocc/catalog.hpp"
#include "slocc/classify.hpp"
#include "slocc/invariants.hpp"
#include "slocc/jordan.hpp"
#include "slocc/weyl.hpp"

namespace slocc {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::partial: return "partial";
  }
  return "?";
}

namespace {

int severity(Outcome o) { return o == Outcome::pass ? 0 : o == Outcome::partial ? 1 : 2; }

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

class Recorder {
 public:
  explicit Recorder(std::string suite) { report_.suite = std::move(suite); }

  /// Runs `body`, which fills `detail` and returns the outcome. Exceptions fail the check.
  template <class F>
  void check(const std::string& name, const std::string& anchor, int criterion, F body) {
    CheckResult r;
    r.name = name;
    r.anchor = anchor;
    r.criterion = criterion;
    auto t0 = Clock::now();
    try {
      r.outcome = body(r.detail);
    } catch (const std::exception& e) {
      r.outcome = Outcome::fail;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = since(t0);
    report_.checks.push_back(std::move(r));
  }

  void runtime(const std::string& name, int criterion, double limit) {
    double total = since(start_);
    CheckResult r;
    r.name = name;
    r.anchor = "runtime";
    r.criterion = criterion;
    r.outcome = total < limit ? Outcome::pass : Outcome::fail;
    std::ostringstream os;
    os << total << " s (limit " << limit << " s)";
    r.detail = os.str();
    report_.checks.push_back(std::move(r));
  }

  SuiteReport finish() {
    report_.seconds = since(start_);
    return std::move(report_);
  }

 private:
  SuiteReport report_;
  Clock::time_point start_ = Clock::now();
};

Outcome from_bool(bool ok) { return ok ? Outcome::pass : Outcome::fail; }

Outcome from_report(const CheckReport& rep, std::string& detail) {
  detail = std::to_string(rep.checks) + " identities";
  if (!rep.failures.empty()) detail += ", " + std::to_string(rep.failures.size()) + " failed, first: " + rep.failures.front();
  return from_bool(rep.passed());
}

std::vector<GR> default_parameters(const OrbitClassLabel& label) {
  const CatalogEntry* e = Catalog::instance().find(label.name());
  if (!e) throw std::logic_error("no catalog entry " + label.name());
  return e->default_parameters;
}

OrbitClassLabel semisimple_label(int f) { return {ClassKind::semisimple, f, 0, {}, {}}; }

SuiteReport algebra_suite() {
  Recorder rec("algebra");
  rec.check("g is perfect of dimension 28", "construction:d4-grading", 1, [&](std::string& d) {
    const Algebra& alg = Algebra::instance();
    std::vector<Vector> brackets;
    for (int a = 0; a < kDim; ++a)
      for (int b = a + 1; b < kDim; ++b) brackets.push_back(alg.bracket(LieElement::basis(a), LieElement::basis(b)).coords());
    int r = span_rank(brackets);
    d = "rank of [g, g] = " + std::to_string(r);
    return from_bool(kDim == 28 && r == 28);
  });
  const Algebra& alg = Algebra::instance();
  rec.check("Jacobi identity on all basis triples", "construction:d4-grading", 1, [&](std::string& d) {
    long checked = 0;
    int bad = alg.jacobi_violations(&checked);
    d = std::to_string(checked) + " triples, " + std::to_string(bad) + " violations";
    return from_bool(bad == 0 && checked == 3276);
  });
  rec.check("Cartan subspace is abelian", "construction:cartan-subspace", 1, [&](std::string& d) {
    int bad = 0;
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j)
        if (!alg.bracket(LieElement::odd(cartan(i)), LieElement::odd(cartan(j))).is_zero()) ++bad;
    d = std::to_string(bad) + " nonzero brackets [u_i, u_j]";
    return from_bool(bad == 0);
  });
  rec.check("grading involution is an automorphism", "construction:d4-grading", 1,
            [&](std::string& d) {
              d = "theta = (1, -1)";
              return from_bool(alg.grading_is_automorphism());
            });
  rec.check("qubit permutations are automorphisms", "construction:sym4-action", 1, [&](std::string& d) {
    int ok = 0;
    auto perms = all_permutations();
    for (const auto& sigma : perms) ok += alg.is_automorphism(sigma) ? 1 : 0;
    d = std::to_string(ok) + "/" + std::to_string(perms.size());
    return from_bool(ok == 24 && perms.size() == 24);
  });
  rec.runtime("algebra runtime", 1, 10);
  return rec.finish();
}

SuiteReport weyl_suite() {
  Recorder rec("weyl");
  rec.check("Weyl group order", "table:semisimple-families", 2, [&](std::string& d) {
    const RootSystem& rs = RootSystem::instance();
    d = "|W| = " + std::to_string(rs.group().size()) + ", roots = " + std::to_string(rs.roots().size());
    return from_bool(rs.group().size() == 192 && rs.roots().size() == 24);
  });
  const RootSystem& rs = RootSystem::instance();
  rec.check("complete root subsystems", "table:semisimple-families", 2, [&](std::string& d) {
    std::multiset<std::string> complete;
    std::vector<std::string> other;
    for (const auto& c : rs.subsystem_classes()) {
      if (c.complete)
        complete.insert(c.type);
      else
        other.push_back(c.type);
    }
    const std::multiset<std::string> expected{"empty", "A1", "A2", "2A1", "2A1", "2A1", "A3", "A3", "A3", "3A1", "D4"};
    d = std::to_string(complete.size()) + " complete classes, " + std::to_string(other.size()) + " non-complete";
    return from_bool(complete == expected && other == std::vector<std::string>{"4A1"});
  });
  rec.check("canonical subsystem types per family", "table:semisimple-families", 2, [&](std::string& d) {
    const char* types[] = {"", "empty", "A1", "A2", "2A1", "2A1", "2A1", "A3", "A3", "A3", "3A1", "D4"};
    int bad = 0;
    for (int f = 1; f <= kNumFamilies; ++f)
      if (rs.type_of(rs.canonical_subsystem(f)) != types[f]) ++bad;
    d = std::to_string(bad) + " mismatches";
    return from_bool(bad == 0);
  });
  rec.check("Gamma group orders", "table:semisimple-families", 2, [&](std::string& d) {
    const int orders[] = {0, 192, 8, 2, 8, 8, 8, 2, 2, 2, 2, 1};
    int bad = 0;
    for (int f = 1; f <= kNumFamilies; ++f) {
      int o = gamma_group(f).order();
      d += (f > 1 ? "," : "") + std::to_string(o);
      if (o != orders[f]) ++bad;
    }
    return from_bool(bad == 0);
  });
  rec.runtime("weyl runtime", 2, 60);
  return rec.finish();
}

SuiteReport invariants_suite() {
  Recorder rec("invariants");
  rec.check("infinitesimal invariance", "table:invariants", 3, [&](std::string& d) {
    CheckReport r = check_infinitesimal_invariance();
    Outcome o = from_report(r, d);
    return r.checks == 48 ? o : Outcome::fail;
  });
  rec.check("invariants on the semisimple families", "table:invariant-values", 3, [&](std::string& d) {
    return from_report(check_family_values(), d);
  });
  rec.check("relation generators vanish", "table:invariant-relations", 3, [&](std::string& d) {
    return from_report(check_all_relations(), d);
  });
  rec.runtime("invariants runtime", 3, 120);
  return rec.finish();
}

SuiteReport catalog_suite() {
  Recorder rec("catalog");
  rec.check("G0 census 31 + 10 + 46", "catalog:census", 5, [&](std::string& d) {
    Census c = list_classes(Level::G0);
    d = std::to_string(c.nilpotent) + " + " + std::to_string(c.semisimple) + " + " + std::to_string(c.mixed);
    return from_bool(c.nilpotent == 31 && c.semisimple == 10 && c.mixed == 46 && c.total() == 87);
  });
  rec.check("S census 9 + 6 + 12", "catalog:census", 5, [&](std::string& d) {
    Census c = list_classes(Level::S);
    d = std::to_string(c.nilpotent) + " + " + std::to_string(c.semisimple) + " + " + std::to_string(c.mixed);
    return from_bool(c.nilpotent == 9 && c.semisimple == 6 && c.mixed == 12 && c.total() == 27);
  });
  rec.check("stabiliser self-check", "table:semisimple-centralisers", 6, [&](std::string& d) {
    auto t0 = Clock::now();
    Outcome o = from_report(stabilizer_selfcheck(), d);
    double t = since(t0);
    d += ", 4 identity-component samples per row, " + std::to_string(t) + " s (limit 60 s)";
    return t < 60 ? o : Outcome::fail;
  });
  return rec.finish();
}

SuiteReport nilpotent_suite(const ConjugacyLimits& limits) {
  Recorder rec("nilpotent");
  const Catalog& cat = Catalog::instance();
  rec.check("orbit representatives are nilpotent with F = 0", "table:nilpotent-orbits", 4, [&](std::string& d) {
    std::string bad;
    for (int k = 1; k <= 31; ++k) {
      const StateVector& x = cat.nilpotent_orbit(k);
      if (!is_nilpotent(x) || !evaluate_signature(x).is_zero()) bad += " " + std::to_string(k);
    }
    d = bad.empty() ? "31 representatives" : "failing:" + bad;
    return from_bool(bad.empty());
  });
  rec.check("nilpotent parts are nilpotent with F = 0", "list:nilpotent-parts", 4, [&](std::string& d) {
    std::string bad;
    int n = 0;
    for (int i = 2; i <= 10; ++i)
      for (int j = 1; j <= cat.mixed_count(i); ++j, ++n) {
        const StateVector& x = cat.nilpotent_part(i, j);
        if (!is_nilpotent(x) || !evaluate_signature(x).is_zero()) bad += " (" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
    d = bad.empty() ? std::to_string(n) + " parts" : "failing:" + bad;
    return from_bool(bad.empty() && n == 46);
  });

  std::vector<FilterSignature> sigs;
  for (int k = 1; k <= 31; ++k) sigs.push_back(prefilter_signature(cat.nilpotent_orbit(k)));
  std::vector<std::vector<int>> buckets;
  for (int k = 1; k <= 31; ++k) {
    bool placed = false;
    for (auto& b : buckets)
      if (sigs[static_cast<std::size_t>(b.front() - 1)] == sigs[static_cast<std::size_t>(k - 1)]) {
        b.push_back(k);
        placed = true;
        break;
      }
    if (!placed) buckets.push_back({k});
  }
  rec.check("filter signatures are orbit invariants", "table:nilpotent-orbits", 4, [&](std::string& d) {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> small(-2, 2);
    auto sl2 = [&] { return Mat2{1, small(rng), 0, 1} * Mat2{1, 0, small(rng), 1}; };
    int bad = 0;
    for (int k = 1; k <= 31; ++k) {
      SL2Quad g(sl2(), sl2(), sl2(), sl2());
      if (!(prefilter_signature(group_act(g, cat.nilpotent_orbit(k))) == sigs[static_cast<std::size_t>(k - 1)])) ++bad;
    }
    d = std::to_string(bad) + " changed under a random SL(2)^4 move";
    return from_bool(bad == 0);
  });
  rec.check("filter buckets", "table:nilpotent-orbits", 4, [&](std::string& d) {
    for (const auto& b : buckets) {
      d += d.empty() ? "{" : " {";
      for (std::size_t m = 0; m < b.size(); ++m) d += (m ? "," : "") + std::to_string(b[m]);
      d += "}";
    }
    return from_bool(buckets.size() > 1);
  });
  for (const auto& b : buckets) {
    if (b.size() < 2) continue;
    std::string name = "tied bucket";
    for (int k : b) name += " " + std::to_string(k);
    rec.check(name + " separated by Groebner bases", "table:nilpotent-orbits", 4, [&](std::string& d) {
      int yes = 0, unknown = 0, pairs = 0;
      double worst = 0;
      for (std::size_t p = 0; p < b.size(); ++p)
        for (std::size_t q = p + 1; q < b.size(); ++q, ++pairs) {
          GBStats stats;
          Membership m =
              contains_one(conjugacy_system(cat.nilpotent_orbit(b[p]), cat.nilpotent_orbit(b[q])), limits.groebner, &stats);
          worst = std::max(worst, stats.seconds);
          if (m == Membership::yes) ++yes;
          if (m == Membership::unknown) ++unknown;
        }
      std::ostringstream os;
      os << pairs << " pairs, 1 in ideal for " << yes << ", unknown " << unknown << ", slowest " << worst << " s";
      d = os.str();
      return from_bool(yes == pairs);
    });
  }
  return rec.finish();
}

SuiteReport jordan_suite() {
  Recorder rec("jordan");
  const Catalog& cat = Catalog::instance();
  rec.check("centraliser dimensions of the semisimple families", "table:semisimple-centralisers", 7,
            [&](std::string& d) {
              const int id_dims[] = {0, 0, 1, 3, 2, 2, 2, 6, 6, 6, 3};
              const int derived[] = {0, 0, 3, 8, 6, 6, 6, 15, 15, 15, 9};
              int bad = 0;
              for (int f = 1; f <= 10; ++f) {
                OrbitClassLabel label = semisimple_label(f);
                CentralizerInfo z = centralizer(representative(label, default_parameters(label)));
                int tab = stabilizer_of(label).identity_component_dim;
                d += (f > 1 ? " " : "") + std::to_string(z.dim_even) + "/" + std::to_string(z.derived_dim);
                if (z.dim_even != id_dims[f] || tab != id_dims[f] || z.derived_dim != derived[f]) ++bad;
              }
              return from_bool(bad == 0);
            });
  rec.check("Jordan decomposition of the mixed samples", "list:nilpotent-parts", 9, [&](std::string& d) {
    int ok = 0, n = 0;
    for (const auto& e : cat.entries(Level::G0)) {
      if (e.label.kind != ClassKind::mixed) continue;
      ++n;
      OrbitClassLabel ss = semisimple_label(e.label.family);
      StateVector s = representative(ss, e.default_parameters);
      StateVector nil = cat.nilpotent_part(e.label.family, e.label.index);
      if (jordan_decompose(s + nil) == JordanPair{s, nil}) ++ok;
    }
    d = std::to_string(ok) + "/" + std::to_string(n);
    return from_bool(ok == n && n == 46);
  });
  rec.check("ad-nilpotency agrees with F = 0 on random states", "property:nilpotent-cone", 9, [&](std::string& d) {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> pick(0, 15), count(1, 5), coeff(-2, 2);
    int nilpotent = 0, disagree = 0;
    for (int trial = 0; trial < 200; ++trial) {
      StateVector x;
      int terms = trial % 4 == 3 ? 16 : count(rng);
      for (int t = 0; t < terms; ++t) x[pick(rng)] += GR(Rational(coeff(rng)), Rational(trial % 3 == 0 ? coeff(rng) : 0));
      bool by_ad = false;
      try {
        by_ad = is_nilpotent(x);
      } catch (const std::logic_error&) {
        ++disagree;
        continue;
      }
      bool by_f = evaluate_signature(x).is_zero();
      if (by_ad != by_f) ++disagree;
      nilpotent += by_ad ? 1 : 0;
    }
    d = "200 states, " + std::to_string(nilpotent) + " nilpotent, " + std::to_string(disagree) + " disagreements";
    return from_bool(disagree == 0);
  });
  return rec.finish();
}

SuiteReport roundtrip_suite(const ConjugacyLimits& limits) {
  Recorder rec("roundtrip");
  for (const auto& e : Catalog::instance().entries(Level::G0)) {
    rec.check(e.name, e.anchor, 8, [&](std::string& d) {
      ClassificationReport r = classify_state(representative(e.label, e.default_parameters), limits);
      d = r.label.name() + ", " + to_string(r.exactness);
      return from_bool(r.label.same_class(e.label) && r.exactness == Exactness::exact);
    });
  }
  rec.runtime("roundtrip runtime", 8, 1800);
  return rec.finish();
}

SuiteReport stable_suite(const ConjugacyLimits& limits) {
  Recorder rec("stable");
  const Catalog& cat = Catalog::instance();
  ConjugacyLimits quiet = limits;
  quiet.want_witness = false;
  for (int i = 2; i <= 10; ++i)
    for (int j = 1; j <= cat.mixed_count(i); ++j) {
      int k = cat.part_n_family(i, j);
      std::string name = "n(" + std::to_string(i) + "," + std::to_string(j) + ") ~ N" + std::to_string(k);
      rec.check(name, "table:d-families#D" + std::to_string(k), 10, [&](std::string& d) {
        ConjugacyVerdict v = s_conjugate(cat.nilpotent_part(i, j), cat.d_family_nilpotent(k), quiet);
        std::ostringstream os;
        os << to_string(v.answer) << " via " << to_string(v.route);
        if (v.permutation) os << ", sigma = " << to_string(*v.permutation);
        if (!cat.part_n_family_tabulated(i, j)) os << ", target carried over from the permuted family";
        d = os.str();
        return v.answer == Answer::yes ? Outcome::pass : v.answer == Answer::unknown ? Outcome::partial : Outcome::fail;
      });
    }
  return rec.finish();
}

}  // namespace

Outcome SuiteReport::outcome() const {
  Outcome worst = Outcome::pass;
  for (const auto& c : checks)
    if (severity(c.outcome) > severity(worst)) worst = c.outcome;
  return worst;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"algebra", "weyl",   "invariants", "catalog",
                                              "nilpotent", "jordan", "roundtrip",  "stable"};
  return names;
}

SuiteReport run_suite(const std::string& name, const ConjugacyLimits& limits) {
  if (name == "algebra") return algebra_suite();
  if (name == "weyl") return weyl_suite();
  if (name == "invariants") return invariants_suite();
  if (name == "catalog") return catalog_suite();
  if (name == "nilpotent") return nilpotent_suite(limits);
  if (name == "jordan") return jordan_suite();
  if (name == "roundtrip") return roundtrip_suite(limits);
  if (name == "stable") return stable_suite(limits);
  throw std::invalid_argument("unknown suite: " + name);
}

Outcome criterion_outcome(const std::vector<SuiteReport>& reports, int criterion) {
  Outcome worst = Outcome::pass;
  bool seen = false;
  for (const auto& r : reports)
    for (const auto& c : r.checks)
      if (c.criterion == criterion) {
        seen = true;
        if (severity(c.outcome) > severity(worst)) worst = c.outcome;
      }
  return seen ? worst : Outcome::fail;
}

}  // namespace slocc
