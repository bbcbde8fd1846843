#include "slocc/weyl.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace slocc {

// ---------------------------------------------------------------- WeylElement

WeylElement::WeylElement() {
  for (int k = 0; k < 4; ++k) twice_[static_cast<std::size_t>(5 * k)] = 2;
}

WeylElement WeylElement::from_twice(const std::array<int, 16>& twice) {
  WeylElement w;
  w.twice_ = twice;
  return w;
}

WeylElement WeylElement::from_matrix(const Matrix& m) {
  if (m.rows() != 4 || m.cols() != 4) throw std::invalid_argument("Weyl element must be 4x4");
  std::array<int, 16> t{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      const auto& x = m(r, c);
      Rational doubled = 2 * x.re();
      if (!x.is_real() || doubled.get_den() != 1 || !doubled.get_num().fits_sint_p())
        throw std::invalid_argument("Weyl element entries must lie in (1/2)Z");
      t[static_cast<std::size_t>(4 * r + c)] = static_cast<int>(doubled.get_num().get_si());
    }
  return from_twice(t);
}

Rational WeylElement::entry(int r, int c) const { return Rational(twice_[static_cast<std::size_t>(4 * r + c)], 2); }

Matrix WeylElement::matrix() const {
  Matrix m(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = GaussianRational(entry(r, c));
  return m;
}

CartanPoint WeylElement::apply(const CartanPoint& p) const {
  CartanPoint out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      int t = twice_[static_cast<std::size_t>(4 * r + c)];
      if (t != 0) out[r] += GaussianRational(Rational(t, 2)) * p[c];
    }
  return out;
}

WeylElement WeylElement::transpose() const {
  WeylElement w;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) w.twice_[static_cast<std::size_t>(4 * r + c)] = twice_[static_cast<std::size_t>(4 * c + r)];
  return w;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  std::array<int, 16> t{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      int sum = 0;
      for (int k = 0; k < 4; ++k) sum += a.twice_[static_cast<std::size_t>(4 * r + k)] * b.twice_[static_cast<std::size_t>(4 * k + c)];
      if (sum % 2 != 0) throw std::invalid_argument("product leaves (1/2)Z");
      t[static_cast<std::size_t>(4 * r + c)] = sum / 2;
    }
  return WeylElement::from_twice(t);
}

std::string WeylElement::to_string() const {
  std::string s = "[";
  for (int r = 0; r < 4; ++r) {
    s += r ? ",[" : "[";
    for (int c = 0; c < 4; ++c) s += (c ? "," : "") + entry(r, c).get_str();
    s += "]";
  }
  return s + "]";
}

std::string to_string(const CartanPoint& p) {
  return "(" + p[0].to_string() + ", " + p[1].to_string() + ", " + p[2].to_string() + ", " + p[3].to_string() + ")";
}

std::strong_ordering compare_tuples(const std::vector<GaussianRational>& a, const std::vector<GaussianRational>& b) {
  for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k)
    if (auto c = canonical_compare(a[k], b[k]); c != 0) return c;
  return a.size() <=> b.size();
}

namespace {

std::vector<WeylElement> group_closure(const std::vector<WeylElement>& generators) {
  std::set<WeylElement> seen{WeylElement()};
  std::vector<WeylElement> frontier{WeylElement()};
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& x : frontier)
      for (const auto& g : generators) {
        WeylElement y = x * g;
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

Root negate(const Root& r) { return {-r[0], -r[1], -r[2], -r[3]}; }

}  // namespace

// ---------------------------------------------------------------- RootSystem

const RootSystem& RootSystem::instance() {
  static const RootSystem rs;
  return rs;
}

RootSystem::RootSystem() {
  compute_roots();
  generate_group();
  enumerate_subsystems();
}

int RootSystem::index_of(const Root& r) const {
  auto it = std::find(roots_.begin(), roots_.end(), r);
  return it == roots_.end() ? -1 : static_cast<int>(it - roots_.begin());
}

GaussianRational RootSystem::evaluate(int k, const CartanPoint& p) const {
  GaussianRational v;
  for (int j = 0; j < 4; ++j)
    if (roots_[k][j] != 0) v += GaussianRational(roots_[k][j]) * p[j];
  return v;
}

void RootSystem::compute_roots() {
  const Algebra& alg = Algebra::instance();
  // Distinct root values are separated by evaluating at a point whose
  // coordinates are powers of 5 (balanced base-5 digits in -2..2).
  const std::array<int, 4> weights{1, 5, 25, 125};
  StateVector p = cartan_element({GaussianRational(1), GaussianRational(5), GaussianRational(25), GaussianRational(125)});
  Matrix ad = alg.ad_matrix(p);
  UniPoly chi = characteristic_polynomial(ad);
  std::array<Matrix, 4> ad_u;
  for (int j = 0; j < 4; ++j) ad_u[j] = alg.ad_matrix(cartan(j + 1));

  std::vector<Root> found;
  std::vector<LieElement> vectors;
  for (int code = 0; code < 625; ++code) {
    Root t;
    int rest = code;
    for (int j = 0; j < 4; ++j) {
      t[j] = rest % 5 - 2;
      rest /= 5;
    }
    if (t == Root{0, 0, 0, 0}) continue;
    int value = 0;
    for (int j = 0; j < 4; ++j) value += weights[j] * t[j];
    if (!chi.eval(GaussianRational(value)).is_zero()) continue;
    auto space = nullspace(ad - Matrix::identity(kDim) * GaussianRational(value));
    if (space.size() != 1) throw std::logic_error("root space is not one-dimensional");
    LieElement x(space[0]);
    for (int j = 0; j < 4; ++j)
      if (!(LieElement(ad_u[j] * x.coords()) == GaussianRational(t[j]) * x))
        throw std::logic_error("root vector is not a common eigenvector of the Cartan subspace");
    found.push_back(t);
    vectors.push_back(x);
  }
  if (found.size() != static_cast<std::size_t>(kNumRoots) || nullspace(ad).size() != 4)
    throw std::logic_error("unexpected root decomposition");

  const std::array<Root, 4> simple{{{0, -2, 0, 0}, {1, 1, 1, 1}, {0, 0, -2, 0}, {0, 0, 0, -2}}};
  Matrix basis(4, 4);
  for (int j = 0; j < 4; ++j)
    for (int r = 0; r < 4; ++r) basis(r, j) = simple[j][r];
  Matrix to_simple = basis.inverse();
  auto positive = [&](const Root& r) {
    Vector v(4);
    for (int j = 0; j < 4; ++j) v[j] = r[j];
    Vector c = to_simple * v;
    bool all_nonneg = true, all_nonpos = true;
    for (const auto& x : c) {
      if (!x.is_real() || x.re().get_den() != 1) throw std::logic_error("root is not an integral combination of simple roots");
      all_nonneg = all_nonneg && sgn(x.re()) >= 0;
      all_nonpos = all_nonpos && sgn(x.re()) <= 0;
    }
    if (!all_nonneg && !all_nonpos) throw std::logic_error("root with mixed-sign simple coordinates");
    return all_nonneg;
  };

  // Positive roots first, sorted; root k + 12 is the negative of root k.
  std::vector<Root> pos;
  for (const auto& r : found)
    if (positive(r)) pos.push_back(r);
  std::sort(pos.begin(), pos.end(), std::greater<>());
  if (pos.size() != static_cast<std::size_t>(kNumRoots / 2)) throw std::logic_error("positive system has wrong size");
  roots_ = pos;
  for (const auto& r : pos) roots_.push_back(negate(r));
  positive_.assign(kNumRoots, false);
  for (int k = 0; k < kNumRoots / 2; ++k) positive_[k] = true;
  for (int j = 0; j < 4; ++j) {
    simple_[j] = index_of(simple[j]);
    if (simple_[j] < 0) throw std::logic_error("simple root missing");
  }
  for (const auto& r : roots_) root_vectors_.push_back(vectors[static_cast<std::size_t>(std::find(found.begin(), found.end(), r) - found.begin())]);

  coroots_.resize(kNumRoots);
  for (int k = 0; k < kNumRoots; ++k) {
    int neg = index_of(negate(roots_[k]));
    LieElement c = alg.bracket(root_vectors_[k], root_vectors_[neg]);
    StateVector odd = c.odd_part();
    CartanPoint coeffs{odd.at("0000"), odd.at("0110"), odd.at("0101"), odd.at("0011")};
    if (!(LieElement::odd(cartan_element(coeffs)) == c))
      throw std::logic_error("[x_a, x_-a] does not lie in the Cartan subspace");
    GaussianRational value = evaluate(k, coeffs);
    if (value.is_zero()) throw std::logic_error("root vanishes on its coroot");
    for (int j = 0; j < 4; ++j) {
      GaussianRational h = GaussianRational(2) * coeffs[j] / value;
      if (!h.is_real()) throw std::logic_error("coroot is not rational");
      coroots_[k][j] = h.re();
    }
  }

  sums_.assign(kNumRoots, std::vector<int>(kNumRoots, -1));
  for (int i = 0; i < kNumRoots; ++i)
    for (int j = 0; j < kNumRoots; ++j) {
      Root s;
      for (int t = 0; t < 4; ++t) s[t] = roots_[i][t] + roots_[j][t];
      sums_[i][j] = index_of(s);
    }
}

WeylElement RootSystem::reflection(int k) const {
  // s(l) = l - alpha(l) h_alpha
  Matrix m = Matrix::identity(4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) -= GaussianRational(Rational(coroots_[k][r] * roots_[k][c]));
  return WeylElement::from_matrix(m);
}

int RootSystem::act_on_root(const WeylElement& w, int k) const {
  // w^{-T} = w for orthogonal w.
  Root image;
  for (int r = 0; r < 4; ++r) {
    int sum = 0;
    for (int c = 0; c < 4; ++c) sum += w.twice()[static_cast<std::size_t>(4 * r + c)] * roots_[k][c];
    if (sum % 2 != 0) return -1;
    image[r] = sum / 2;
  }
  return index_of(image);
}

RootMask RootSystem::act_on_mask(const WeylElement& w, RootMask m) const {
  int idx = permutation_index(w);
  RootMask out = 0;
  for (int k = 0; k < kNumRoots; ++k)
    if (m & (1u << k)) {
      int image = idx >= 0 ? perms_[idx][k] : act_on_root(w, k);
      if (image < 0) throw std::invalid_argument("matrix does not permute the roots");
      out |= 1u << image;
    }
  return out;
}

int RootSystem::permutation_index(const WeylElement& w) const {
  auto it = std::lower_bound(group_.begin(), group_.end(), w);
  return it != group_.end() && *it == w ? static_cast<int>(it - group_.begin()) : -1;
}

void RootSystem::generate_group() {
  std::vector<WeylElement> gens;
  for (int j : simple_) gens.push_back(reflection(j));
  group_ = group_closure(gens);
  perms_.clear();
  for (const auto& w : group_) {
    if (!(w * w.transpose()).is_identity()) throw std::logic_error("Weyl group element is not orthogonal");
    std::array<std::int8_t, kNumRoots> perm{};
    for (int k = 0; k < kNumRoots; ++k) {
      int image = act_on_root(w, k);
      if (image < 0) throw std::logic_error("Weyl group element does not permute the roots");
      perm[k] = static_cast<std::int8_t>(image);
    }
    perms_.push_back(perm);
  }
}

RootMask RootSystem::closure(RootMask m) const {
  for (;;) {
    RootMask next = m;
    for (int i = 0; i < kNumRoots; ++i) {
      if (!(m & (1u << i))) continue;
      next |= 1u << (i < kNumRoots / 2 ? i + kNumRoots / 2 : i - kNumRoots / 2);
      for (int j = 0; j < kNumRoots; ++j)
        if ((m & (1u << j)) && sums_[i][j] >= 0) next |= 1u << sums_[i][j];
    }
    if (next == m) return m;
    m = next;
  }
}

int RootSystem::rank_of(RootMask m) const {
  std::vector<Vector> rows;
  for (int k = 0; k < kNumRoots; ++k)
    if (m & (1u << k)) rows.push_back({roots_[k][0], roots_[k][1], roots_[k][2], roots_[k][3]});
  return rows.empty() ? 0 : span_rank(rows);
}

RootMask RootSystem::span_closure(RootMask m) const {
  int r = rank_of(m);
  RootMask out = m;
  for (int k = 0; k < kNumRoots; ++k)
    if (!(m & (1u << k)) && rank_of(m | (1u << k)) == r) out |= 1u << k;
  return out;
}

std::string RootSystem::type_of(RootMask m) const {
  std::vector<int> members;
  for (int k = 0; k < kNumRoots; ++k)
    if (m & (1u << k)) members.push_back(k);
  if (members.empty()) return "empty";
  std::vector<int> component(kNumRoots, -1);
  std::map<std::string, int> counts;
  for (int start : members) {
    if (component[start] >= 0) continue;
    std::vector<int> stack{start};
    component[start] = start;
    int size = 0;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      ++size;
      for (int b : members) {
        if (component[b] >= 0) continue;
        Rational pairing = 0;
        for (int j = 0; j < 4; ++j) pairing += roots_[a][j] * coroots_[b][j];
        if (sgn(pairing) != 0) {
          component[b] = start;
          stack.push_back(b);
        }
      }
    }
    static const std::map<int, std::string> names{{2, "A1"}, {6, "A2"}, {12, "A3"}, {24, "D4"}};
    auto it = names.find(size);
    if (it == names.end()) throw std::logic_error("unexpected irreducible component");
    ++counts[it->second];
  }
  std::string s;
  for (const auto& [name, count] : counts) s += (s.empty() ? "" : "+") + (count > 1 ? std::to_string(count) : "") + name;
  return s;
}

RootMask RootSystem::annihilator(const CartanPoint& p) const {
  RootMask m = 0;
  for (int k = 0; k < kNumRoots; ++k)
    if (evaluate(k, p).is_zero()) m |= 1u << k;
  return m;
}

RootMask RootSystem::canonical_subsystem(int label) const {
  if (label < 1 || label > kNumFamilies) throw std::out_of_range("family label must be 1..11");
  return canonical_[label];
}

void RootSystem::enumerate_subsystems() {
  std::set<RootMask> all;
  for (RootMask s = 0; s < (1u << (kNumRoots / 2)); ++s) all.insert(closure(s));

  std::map<RootMask, std::vector<RootMask>> by_class;
  for (RootMask m : all) {
    RootMask best = m;
    for (std::size_t w = 0; w < group_.size(); ++w) {
      RootMask image = 0;
      for (int k = 0; k < kNumRoots; ++k)
        if (m & (1u << k)) image |= 1u << perms_[w][k];
      best = std::min(best, image);
    }
    by_class[best].push_back(m);
  }

  // Canonical subsystems: span closures of the listed simple roots.
  const std::array<std::vector<int>, kNumFamilies + 1> simple_lists{{{},
                                                                     {},
                                                                     {4},
                                                                     {2, 4},
                                                                     {1, 3},
                                                                     {1, 4},
                                                                     {3, 4},
                                                                     {1, 2, 3},
                                                                     {1, 2, 4},
                                                                     {2, 3, 4},
                                                                     {1, 3, 4},
                                                                     {1, 2, 3, 4}}};
  for (int label = 1; label <= kNumFamilies; ++label) {
    RootMask m = 0;
    for (int j : simple_lists[label]) m |= 1u << simple_[j - 1];
    canonical_[label] = span_closure(m);
  }

  classes_.clear();
  for (const auto& [key, members] : by_class) {
    SubsystemClass c;
    c.representative = key;
    c.class_size = static_cast<int>(members.size());
    for (int label = 1; label <= kNumFamilies; ++label)
      if (std::find(members.begin(), members.end(), canonical_[label]) != members.end()) {
        if (c.label != 0) throw std::logic_error("two canonical subsystems are W-conjugate");
        c.label = label;
        c.representative = canonical_[label];
      }
    c.size = std::popcount(c.representative);
    c.rank = rank_of(c.representative);
    c.complete = is_complete(c.representative);
    c.type = type_of(c.representative);
    if (c.complete != (c.label != 0)) throw std::logic_error("complete subsystem classes do not match the eleven families");
    classes_.push_back(c);
  }
  std::sort(classes_.begin(), classes_.end(), [](const auto& a, const auto& b) {
    return std::tie(a.size, a.label, a.representative) < std::tie(b.size, b.label, b.representative);
  });
}

std::vector<WeylElement> RootSystem::reflection_subgroup(RootMask m) const {
  std::vector<WeylElement> gens;
  for (int k = 0; k < kNumRoots; ++k)
    if (m & (1u << k)) gens.push_back(reflection(k));
  return group_closure(gens);
}

std::vector<WeylElement> RootSystem::setwise_stabilizer(RootMask m) const {
  std::vector<WeylElement> out;
  for (const auto& w : group_)
    if (act_on_mask(w, m) == m) out.push_back(w);
  return out;
}

std::vector<WeylElement> RootSystem::point_stabilizer(const CartanPoint& p) const {
  std::vector<WeylElement> out;
  for (const auto& w : group_)
    if (w.apply(p) == p) out.push_back(w);
  return out;
}

std::vector<WeylElement> generate_weyl_group() { return RootSystem::instance().group(); }

std::vector<SubsystemClass> enumerate_complete_subsystems() {
  std::vector<SubsystemClass> out;
  for (const auto& c : RootSystem::instance().subsystem_classes())
    if (c.complete) out.push_back(c);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.label < b.label; });
  return out;
}

// ---------------------------------------------------------------- families

namespace {

// Column k of the parametrisation: the Cartan coordinates contributed by lambda_k.
const std::array<std::vector<std::array<int, 4>>, kNumFamilies + 1>& family_columns() {
  static const std::array<std::vector<std::array<int, 4>>, kNumFamilies + 1> cols{{
      {},
      {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},
      {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}},
      {{1, -1, 0, 0}, {1, 0, -1, 0}},
      {{1, 0, 0, 0}, {0, 0, 0, 1}},
      {{1, 0, 0, 0}, {0, 0, 1, 0}},
      {{1, 0, 0, 0}, {0, 1, 0, 0}},
      {{1, 0, 0, -1}},
      {{1, 0, -1, 0}},
      {{1, -1, 0, 0}},
      {{1, 0, 0, 0}},
      {},
  }};
  return cols;
}

void check_label(int label) {
  if (label < 1 || label > kNumFamilies) throw std::out_of_range("family label must be 1..11");
}

WeylElement diag(int a, int b, int c, int d) {
  return WeylElement::from_twice({2 * a, 0, 0, 0, 0, 2 * b, 0, 0, 0, 0, 2 * c, 0, 0, 0, 0, 2 * d});
}

WeylElement integer_matrix(const std::array<int, 16>& m) {
  std::array<int, 16> t{};
  for (std::size_t k = 0; k < 16; ++k) t[k] = 2 * m[k];
  return WeylElement::from_twice(t);
}

std::vector<WeylElement> gamma_generators(int label) {
  switch (label) {
    case 1: {
      std::vector<WeylElement> gens;
      for (int j : RootSystem::instance().simple_roots()) gens.push_back(RootSystem::instance().reflection(j));
      return gens;
    }
    case 2:
      return {diag(1, 1, -1, -1), diag(1, -1, 1, -1), diag(1, -1, -1, 1),
              diag(-1, 1, 1, -1), diag(-1, 1, -1, 1), diag(-1, -1, 1, 1)};
    case 4:
      return {diag(1, 1, 1, -1), integer_matrix({0, 0, 0, -1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0})};
    case 5:
      return {diag(1, 1, -1, 1), integer_matrix({0, 0, -1, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, -1, 0, 0})};
    case 6:
      return {diag(-1, 1, 1, 1), integer_matrix({0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0})};
    case 11:
      return {};
    default:
      return {diag(-1, -1, -1, -1)};
  }
}

}  // namespace

int family_parameter_count(int label) {
  check_label(label);
  return static_cast<int>(family_columns()[label].size());
}

CartanPoint family_point(int label, const std::vector<GaussianRational>& lambda) {
  check_label(label);
  const auto& cols = family_columns()[label];
  if (lambda.size() != cols.size())
    throw std::invalid_argument("family " + std::to_string(label) + " takes " + std::to_string(cols.size()) + " parameters");
  CartanPoint p;
  for (std::size_t k = 0; k < cols.size(); ++k)
    for (int j = 0; j < 4; ++j)
      if (cols[k][j] != 0) p[j] += GaussianRational(cols[k][j]) * lambda[k];
  return p;
}

std::optional<std::vector<GaussianRational>> family_parameters(int label, const CartanPoint& p) {
  check_label(label);
  const auto& cols = family_columns()[label];
  if (cols.empty()) {
    bool zero = std::all_of(p.begin(), p.end(), [](const auto& x) { return x.is_zero(); });
    return zero ? std::optional<std::vector<GaussianRational>>(std::vector<GaussianRational>{}) : std::nullopt;
  }
  Matrix b(4, static_cast<int>(cols.size()));
  for (int k = 0; k < b.cols(); ++k)
    for (int j = 0; j < 4; ++j) b(j, k) = cols[static_cast<std::size_t>(k)][j];
  auto x = solve(b, Vector(p.begin(), p.end()));
  if (!x) return std::nullopt;
  return *x;
}

bool in_canonical_open_set(int label, const CartanPoint& p) {
  return RootSystem::instance().annihilator(p) == RootSystem::instance().canonical_subsystem(label);
}

bool family_condition(int label, const std::vector<GaussianRational>& l) {
  check_label(label);
  if (l.size() != static_cast<std::size_t>(family_parameter_count(label))) return false;
  auto nonzero = [&] { return std::none_of(l.begin(), l.end(), [](const auto& x) { return x.is_zero(); }); };
  switch (label) {
    case 1:
      if (!nonzero()) return false;
      for (int s2 : {-1, 1})
        for (int s3 : {-1, 1})
          for (int s4 : {-1, 1})
            if (l[0] == GaussianRational(s2) * l[1] + GaussianRational(s3) * l[2] + GaussianRational(s4) * l[3]) return false;
      return true;
    case 2:
      if (!nonzero()) return false;
      for (int s2 : {-1, 1})
        for (int s3 : {-1, 1})
          if (l[0] == GaussianRational(s2) * l[1] + GaussianRational(s3) * l[2]) return false;
      return true;
    case 3:
      return !(l[0] * l[1] * (l[0] + l[1])).is_zero();
    case 4:
    case 5:
    case 6:
      return nonzero() && l[0] != l[1] && l[0] != -l[1];
    case 11:
      return true;
    default:
      return nonzero();
  }
}

std::string family_condition_text(int label) {
  check_label(label);
  switch (label) {
    case 1: return "l1*l2*l3*l4 != 0 and l1 not in {+-l2+-l3+-l4}";
    case 2: return "l1*l2*l3 != 0 and l1 not in {+-l2+-l3}";
    case 3: return "l1*l2*(l1+l2) != 0";
    case 4:
    case 5:
    case 6: return "l1*l2 != 0 and l1 not in {+-l2}";
    case 11: return "none";
    default: return "l1 != 0";
  }
}

FamilyMatch identify_family(const CartanPoint& p) {
  const RootSystem& rs = RootSystem::instance();
  RootMask ann = rs.annihilator(p);
  for (int label = 1; label <= kNumFamilies; ++label) {
    RootMask target = rs.canonical_subsystem(label);
    if (std::popcount(target) != std::popcount(ann)) continue;
    for (const auto& w : rs.group())
      if (rs.act_on_mask(w, ann) == target) return {label, w};
  }
  throw std::logic_error("annihilator is not conjugate to a canonical subsystem");
}

GammaGroup gamma_group(int label) {
  check_label(label);
  const RootSystem& rs = RootSystem::instance();
  RootMask psi = rs.canonical_subsystem(label);
  auto normalizer = rs.setwise_stabilizer(psi);
  auto reflections = rs.reflection_subgroup(psi);
  GammaGroup g;
  g.label = label;
  g.generators = gamma_generators(label);
  for (const auto& x : g.generators)
    if (rs.act_on_mask(x, psi) != psi || !std::binary_search(rs.group().begin(), rs.group().end(), x))
      throw std::logic_error("Gamma generator does not normalise the reflection subgroup of family " + std::to_string(label));
  g.elements = group_closure(g.generators);
  for (const auto& x : g.elements)
    if (!x.is_identity() && std::binary_search(reflections.begin(), reflections.end(), x))
      throw std::logic_error("Gamma group of family " + std::to_string(label) + " meets the reflection subgroup");
  if (g.elements.size() * reflections.size() != normalizer.size())
    throw std::logic_error("Gamma group of family " + std::to_string(label) + " is not a complement");
  return g;
}

std::vector<std::vector<GaussianRational>> gamma_orbit(int label, const std::vector<GaussianRational>& lambda) {
  CartanPoint p = family_point(label, lambda);
  std::vector<std::vector<GaussianRational>> out;
  for (const auto& w : gamma_group(label).elements) {
    auto image = family_parameters(label, w.apply(p));
    if (!image) throw std::logic_error("Gamma group does not preserve the canonical set of family " + std::to_string(label));
    if (std::find(out.begin(), out.end(), *image) == out.end()) out.push_back(*image);
  }
  return out;
}

std::optional<WeylElement> w_reduce(const CartanPoint& p, const CartanPoint& q) {
  if (p == q) return WeylElement();
  for (const auto& w : RootSystem::instance().group())
    if (w.apply(p) == q) return w;
  return std::nullopt;
}

}  // namespace slocc
