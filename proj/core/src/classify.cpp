#include "slocc/classify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>
#include <map>
#include <stdexcept>

#include "slocc/unipoly.hpp"
#include "slocc/weyl.hpp"

namespace slocc {

using GR = GaussianRational;
using Params = std::vector<GR>;

std::string to_string(Exactness e) { return e == Exactness::exact ? "exact" : "partial"; }

namespace {

UniPoly restrict_to(const MultiPoly& p, int k, const Params& values) {
  std::vector<GR> coeffs;
  for (const Term& t : p.terms()) {
    GR c = t.coeff;
    for (int v = k + 1; v < p.ring().nvars(); ++v)
      for (unsigned e = 0; e < t.monomial[v]; ++e) c *= values[static_cast<std::size_t>(v)];
    std::size_t d = t.monomial[k];
    if (coeffs.size() <= d) coeffs.resize(d + 1);
    coeffs[d] += c;
  }
  return UniPoly(std::move(coeffs));
}

bool only_vars_from(const Monomial& m, int k) {
  for (int v = 0; v < k; ++v)
    if (m[v] != 0) return false;
  return true;
}

bool solve_level(const std::vector<MultiPoly>& basis, int k, Params& values, std::vector<Params>& out) {
  if (k < 0) {
    out.push_back(values);
    return true;
  }
  UniPoly g;
  bool bounded = false;
  for (const MultiPoly& p : basis) {
    const Monomial& lm = p.leading_term().monomial;
    if (!only_vars_from(lm, k) || lm[k] == 0) continue;
    if (lm.degree() == lm[k]) bounded = true;
    g = gcd(g, restrict_to(p, k, values));
  }
  if (!bounded) return false;
  if (g.degree() <= 0) return true;
  for (const GR& r : gaussian_rational_roots(g)) {
    values[static_cast<std::size_t>(k)] = r;
    if (!solve_level(basis, k - 1, values, out)) return false;
  }
  return true;
}

Monomial halved(const Monomial& m) {
  Monomial out;
  for (int v = 0; v < kMaxVars; ++v) {
    if (m[v] % 2 != 0) throw std::logic_error("odd exponent in an even family row");
    out.set(v, m[v] / 2);
  }
  return out;
}

std::string join(const std::vector<MultiPoly>& ps) {
  std::string s;
  for (const auto& p : ps) s += (s.empty() ? "" : ", ") + p.to_string();
  return s;
}

std::array<GR, 4> sig_array(const InvariantSignature& sig) { return {sig.H, sig.L, sig.M, sig.D}; }

void check_relations_at(int family, const InvariantSignature& sig) {
  if (family < 2 || family > 10) return;
  auto values = sig_array(sig);
  for (const MultiPoly& r : relation_generators(family))
    if (!r.eval(values).is_zero())
      throw std::invalid_argument("signature " + sig.to_string() + " violates the relation " + r.to_string() +
                                  " = 0 of family " + std::to_string(family));
}

bool matches(int family, const Params& lambda, const InvariantSignature& sig) {
  if (!in_canonical_open_set(family, family_point(family, lambda))) return false;
  return evaluate_signature(representative({ClassKind::semisimple, family, 0, {}, {}}, lambda)) == sig;
}

/// lambda_k with lambda_k^2 = p_k, or nullopt.
std::optional<Params> square_roots(const Params& p) {
  Params out;
  for (const GR& v : p) {
    auto r = exact_sqrt(v);
    if (!r) return std::nullopt;
    out.push_back(*r);
  }
  return out;
}

std::string squares_text(const Params& p) {
  std::string s;
  for (std::size_t k = 0; k < p.size(); ++k)
    s += (s.empty() ? "" : ", ") + ("l" + std::to_string(k + 1) + "^2 = ") + p[k].to_string();
  return s;
}

/// Solutions of the family's row by lex Groebner basis; `even` rows are solved
/// in p_k = l_k^2 first.
ParameterSolutions solve_by_groebner(int family, const InvariantSignature& sig, bool even,
                                     const GroebnerLimits& limits) {
  const int n = family_parameter_count(family);
  std::vector<std::string> names;
  for (int k = 1; k <= n; ++k) names.push_back((even ? "p" : "l") + std::to_string(k));
  Ring ring(names, MonomialOrder::lex);
  auto row = tabulated_family_values(family);
  auto values = sig_array(sig);
  std::vector<MultiPoly> eqs;
  for (int q = 0; q < 4; ++q) {
    std::vector<Term> terms;
    for (const Term& t : row[static_cast<std::size_t>(q)].terms())
      terms.push_back({even ? halved(t.monomial) : t.monomial, t.coeff});
    eqs.push_back(MultiPoly(ring, std::move(terms)) - MultiPoly(ring, values[static_cast<std::size_t>(q)]));
  }
  Ideal ideal(ring, eqs);
  GBResult gb = buchberger(ideal, limits);
  ParameterSolutions out;
  if (gb.verdict == GBVerdict::trivial)
    throw std::invalid_argument("signature " + sig.to_string() + " is not attained on family " +
                                std::to_string(family));
  if (gb.verdict != GBVerdict::proper) {
    out.symbolic = "lex basis not computed (" + gb.stats.exhausted_by + ")";
    return out;
  }
  Params values_buf(static_cast<std::size_t>(n));
  std::vector<Params> points;
  if (!solve_level(gb.basis, n - 1, values_buf, points)) {
    out.symbolic = join(gb.basis) + " = 0";
    return out;
  }
  std::string pending;
  for (const Params& pt : points) {
    auto lambda = even ? square_roots(pt) : std::optional<Params>(pt);
    if (!lambda) {
      if (pending.empty()) pending = squares_text(pt);
      continue;
    }
    if (matches(family, *lambda, sig)) {
      out.solutions = gamma_orbit(family, *lambda);
      return out;
    }
  }
  if (!pending.empty()) {
    out.symbolic = pending;
    return out;
  }
  if (points.empty()) {
    out.symbolic = join(gb.basis) + " = 0";
    return out;
  }
  throw std::invalid_argument("signature " + sig.to_string() + " has no parameters in the open set of family " +
                              std::to_string(family));
}

/// Roots of t^2 - b t + c.
std::optional<std::pair<GR, GR>> quadratic_roots(const GR& b, const GR& c) {
  auto r = exact_sqrt(b * b - GR(4) * c);
  if (!r) return std::nullopt;
  GR half = GR::ratio(1, 2);
  return std::pair{(b + *r) * half, (b - *r) * half};
}

ParameterSolutions closed_form(int family, const InvariantSignature& sig) {
  ParameterSolutions out;
  auto finish = [&](const Params& squares) {
    auto lambda = square_roots(squares);
    if (!lambda) {
      out.symbolic = squares_text(squares);
      return;
    }
    if (!matches(family, *lambda, sig))
      throw std::invalid_argument("signature " + sig.to_string() + " has no parameters in the open set of family " +
                                  std::to_string(family));
    out.solutions = gamma_orbit(family, *lambda);
  };
  switch (family) {
    case 10: finish({sig.H}); break;
    case 7:
    case 8:
    case 9: finish({sig.H * GR::ratio(1, 2)}); break;
    case 4:
    case 5:
    case 6: {
      GR c = family == 4 ? -sig.M : family == 5 ? sig.L : -sig.L;
      auto roots = quadratic_roots(sig.H, c);
      if (!roots) {
        out.symbolic = "l1^2, l2^2 roots of t^2 - (" + sig.H.to_string() + ")*t + (" + c.to_string() + ")";
        return out;
      }
      finish({roots->first, roots->second});
      break;
    }
    default: throw std::logic_error("no closed form for family " + std::to_string(family));
  }
  return out;
}

Matrix from_rows(int n, std::vector<GR> entries) { return Matrix(n, n, std::move(entries)); }

std::vector<Matrix> closure(const std::vector<Matrix>& gens) {
  int n = gens.front().rows();
  std::map<std::string, Matrix> seen;
  std::vector<Matrix> frontier{Matrix::identity(n)};
  seen.emplace(frontier.front().to_string(), frontier.front());
  while (!frontier.empty()) {
    std::vector<Matrix> next;
    for (const Matrix& m : frontier)
      for (const Matrix& g : gens) {
        Matrix p = g * m;
        if (seen.emplace(p.to_string(), p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  std::vector<Matrix> out;
  for (auto& [k, m] : seen) out.push_back(m);
  return out;
}

Matrix transposition_matrix(int n, int a, int b) {
  Matrix m = Matrix::identity(n);
  m(a, a) = 0;
  m(b, b) = 0;
  m(a, b) = 1;
  m(b, a) = 1;
  return m;
}

Matrix flip_matrix(int n, int a) {
  Matrix m = Matrix::identity(n);
  m(a, a) = -1;
  return m;
}

std::vector<Matrix> signed_permutation_generators(int n) {
  std::vector<Matrix> gens{flip_matrix(n, 0)};
  for (int a = 0; a + 1 < n; ++a) gens.push_back(transposition_matrix(n, a, a + 1));
  return gens;
}

std::vector<Matrix> build_s_group(int family) {
  switch (family) {
    case 1: {
      auto gens = signed_permutation_generators(4);
      GR h = GR::ratio(1, 2);
      gens.push_back(from_rows(4, {h, -h, -h, h, h, -h, h, -h, -h, -h, h, h, h, h, h, h}));
      return closure(gens);
    }
    case 2: return closure(signed_permutation_generators(3));
    case 3: return closure({from_rows(2, {0, 1, 1, 0}), from_rows(2, {1, 1, 0, -1})});
    case 4: return closure({from_rows(2, {-1, 0, 0, 1}), from_rows(2, {0, 1, 1, 0})});
    case 7:
    case 10: return closure({from_rows(1, {-1})});
    default: return {};
  }
}

Params apply(const Matrix& m, const Params& v) { return m * v; }

const std::vector<FilterSignature>& orbit_signatures() {
  static const std::vector<FilterSignature> sigs = [] {
    std::vector<FilterSignature> out;
    for (int k = 1; k <= 31; ++k) out.push_back(prefilter_signature(Catalog::instance().nilpotent_orbit(k)));
    return out;
  }();
  return sigs;
}

const FilterSignature& part_signature(int i, int j) {
  static const std::vector<std::vector<FilterSignature>> sigs = [] {
    const Catalog& cat = Catalog::instance();
    std::vector<std::vector<FilterSignature>> out(11);
    for (int f = 2; f <= 10; ++f)
      for (int k = 1; k <= cat.mixed_count(f); ++k) out[f].push_back(prefilter_signature(cat.nilpotent_part(f, k)));
    return out;
  }();
  return sigs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)];
}

/// Among the candidates, the one conjugate to x. When every other candidate
/// is excluded, the remaining one is taken by completeness of the list.
struct Resolution {
  std::optional<int> index;
  std::vector<int> open;
  std::string note;
};

/// Candidate tests run concurrently; the first yes cancels the others.
template <class Target>
Resolution resolve(const StateVector& x, const std::vector<int>& candidates, Target target,
                   const ConjugacyLimits& limits) {
  Resolution r;
  if (candidates.size() == 1) {
    r.index = candidates.front();
    r.note = "decided by the filter signature";
    return r;
  }
  std::atomic<bool> stop{false};
  ConjugacyLimits local = limits;
  local.want_witness = false;
  local.groebner.cancel = &stop;
  std::vector<std::future<ConjugacyVerdict>> tasks;
  for (int c : candidates)
    tasks.push_back(std::async(std::launch::async, [&, c] { return g0_conjugate(x, target(c), local); }));
  std::vector<std::optional<ConjugacyVerdict>> verdicts(tasks.size());
  for (std::size_t done = 0; done < tasks.size();) {
    if (limits.groebner.cancel && limits.groebner.cancel->load()) stop = true;
    for (std::size_t k = 0; k < tasks.size(); ++k) {
      if (verdicts[k] || tasks[k].wait_for(std::chrono::milliseconds(2)) != std::future_status::ready) continue;
      verdicts[k] = tasks[k].get();
      ++done;
      if (verdicts[k]->answer == Answer::yes) stop = true;
    }
  }
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    if (verdicts[k]->answer != Answer::yes) continue;
    r.index = candidates[k];
    r.note = "decided by " + to_string(verdicts[k]->route);
    return r;
  }
  for (std::size_t k = 0; k < tasks.size(); ++k)
    if (verdicts[k]->answer == Answer::unknown) r.open.push_back(candidates[k]);
  if (r.open.size() == 1) {
    r.index = r.open.front();
    r.note = "all other candidates excluded";
    r.open.clear();
  } else if (r.open.empty()) {
    throw std::logic_error("no candidate class is conjugate to " + x.to_string());
  }
  return r;
}

}  // namespace

std::optional<std::vector<Params>> gaussian_rational_points(const Ideal& ideal, const GroebnerLimits& limits) {
  Ideal lex = ideal.ring().order() == MonomialOrder::lex ? ideal : ideal.with_order(MonomialOrder::lex);
  GBResult gb = buchberger(lex, limits);
  if (gb.verdict == GBVerdict::trivial) return std::vector<Params>{};
  if (gb.verdict != GBVerdict::proper) return std::nullopt;
  int n = lex.ring().nvars();
  Params values(static_cast<std::size_t>(n));
  std::vector<Params> out;
  if (!solve_level(gb.basis, n - 1, values, out)) return std::nullopt;
  return out;
}

ParameterSolutions semisimple_parameters(int family, const InvariantSignature& sig, const GroebnerLimits& limits) {
  if (family < 1 || family > kNumFamilies) throw std::invalid_argument("family must be 1..11");
  check_relations_at(family, sig);
  if (family == 11) {
    if (!sig.is_zero()) throw std::invalid_argument("family 11 has signature zero");
    return {{Params{}}, {}};
  }
  if (family >= 4) return closed_form(family, sig);
  return solve_by_groebner(family, sig, family != 3, limits);
}

int semisimple_family(int centralizer_dim, int derived_dim, const InvariantSignature& sig) {
  auto triple = [&](int base) { return sig.L.is_zero() ? base : sig.M.is_zero() ? base + 1 : base + 2; };
  switch (centralizer_dim * 100 + derived_dim) {
    case 400: return 1;
    case 603: return 2;
    case 1008: return 3;
    case 806: return triple(4);
    case 1615: return triple(7);
    case 1009: return 10;
    case 2828: return 11;
    default:
      throw std::invalid_argument("centraliser dimensions (" + std::to_string(centralizer_dim) + ", " +
                                  std::to_string(derived_dim) + ") match no semisimple family");
  }
}

int semisimple_family(const StateVector& s) {
  if (s.is_zero()) return 11;
  CentralizerInfo z = centralizer(s);
  return semisimple_family(z.dim, z.derived_dim, evaluate_signature(s));
}

Params canonical_parameters(int family, const Params& lambda) {
  auto orbit = gamma_orbit(family, lambda);
  return *std::min_element(orbit.begin(), orbit.end(),
                           [](const Params& a, const Params& b) { return compare_tuples(a, b) < 0; });
}

const std::vector<Matrix>& s_parameter_group(int family) {
  static const std::map<int, std::vector<Matrix>> groups = [] {
    std::map<int, std::vector<Matrix>> out;
    for (int f : {1, 2, 3, 4, 7, 10}) out[f] = build_s_group(f);
    return out;
  }();
  auto it = groups.find(family);
  if (it == groups.end()) throw std::invalid_argument("no S-parameter group for family " + std::to_string(family));
  return it->second;
}

SNormalForm s_normal_form(const OrbitClassLabel& label) {
  SNormalForm out;
  out.s_class = s_class_of(label);
  out.d_family = d_family_of(label);
  if (label.kind == ClassKind::nilpotent) return out;
  out.family = s_representative_family(label.family);
  out.parameters = label.parameters;
  if (out.family == 11 || label.parameters.empty()) return out;
  for (const Matrix& m : s_parameter_group(out.family)) {
    Params img = apply(m, label.parameters);
    if (compare_tuples(img, out.parameters) < 0) out.parameters = std::move(img);
  }
  return out;
}

ClassificationReport classify_state(const StateVector& x, const ConjugacyLimits& limits) {
  const Catalog& cat = Catalog::instance();
  ClassificationReport rep;
  rep.input = x;
  rep.jordan = jordan_decompose(x);
  rep.signature = evaluate_signature(x);
  const StateVector& s = rep.jordan.s;
  const StateVector& n = rep.jordan.n;

  if (s.is_zero()) {
    rep.label.kind = ClassKind::nilpotent;
    FilterSignature sig = prefilter_signature(x);
    std::vector<int> candidates;
    for (int k = 1; k <= 31; ++k)
      if (orbit_signatures()[static_cast<std::size_t>(k - 1)] == sig) candidates.push_back(k);
    if (candidates.empty()) throw std::logic_error("nilpotent element matches no orbit signature");
    Resolution r = resolve(x, candidates, [&](int k) { return cat.nilpotent_orbit(k); }, limits);
    rep.notes.push_back(std::to_string(candidates.size()) + " orbit(s) share the filter signature");
    if (!r.index) {
      rep.candidates = r.open;
      rep.notes.push_back("Groebner basis exhausted its limits");
      return rep;
    }
    rep.notes.push_back(r.note);
    rep.label.index = *r.index;
    rep.exactness = Exactness::exact;
    rep.normal_form = cat.nilpotent_orbit(*r.index);
    rep.stabilizer = &stabilizer_of(rep.label);
    rep.label.s_class = s_class_of(rep.label);
    rep.s_form = s_normal_form(rep.label);
    return rep;
  }

  int family = semisimple_family(s);
  rep.label.family = family;
  rep.label.kind = n.is_zero() ? ClassKind::semisimple : ClassKind::mixed;
  ParameterSolutions sol = semisimple_parameters(family, rep.signature, limits.groebner);
  std::optional<StateVector> s_rec;
  if (!sol.solutions.empty()) {
    rep.label.parameters = canonical_parameters(family, sol.solutions.front());
    s_rec = representative({ClassKind::semisimple, family, 0, {}, {}}, rep.label.parameters);
  } else {
    rep.symbolic_parameters = sol.symbolic;
    rep.notes.push_back("parameters outside Q(i): " + sol.symbolic);
  }

  if (rep.label.kind == ClassKind::semisimple) {
    if (s_rec) {
      rep.exactness = Exactness::exact;
      rep.normal_form = s_rec;
    }
  } else {
    FilterSignature sig = prefilter_signature(n);
    std::vector<int> candidates;
    for (int j = 1; j <= cat.mixed_count(family); ++j)
      if (part_signature(family, j) == sig) candidates.push_back(j);
    if (candidates.empty()) throw std::logic_error("nilpotent part matches no n_{i,j} signature");
    rep.notes.push_back(std::to_string(candidates.size()) + " nilpotent part(s) share the filter signature");
    if (!s_rec) {
      rep.candidates = candidates;
      if (candidates.size() == 1) rep.label.index = candidates.front();
    } else {
      Resolution r =
          resolve(x, candidates, [&](int j) { return *s_rec + cat.nilpotent_part(family, j); }, limits);
      if (r.index) {
        rep.notes.push_back(r.note);
        rep.label.index = *r.index;
        rep.exactness = Exactness::exact;
        rep.normal_form = *s_rec + cat.nilpotent_part(family, *r.index);
      } else {
        rep.candidates = r.open;
        rep.notes.push_back("Groebner basis exhausted its limits");
      }
    }
  }
  if (rep.label.kind == ClassKind::semisimple || rep.label.index != 0) {
    rep.stabilizer = &stabilizer_of(rep.label);
    rep.label.s_class = s_class_of(rep.label);
    if (rep.exactness == Exactness::exact) rep.s_form = s_normal_form(rep.label);
  }
  return rep;
}

}  // namespace slocc
