#include "slocc/lie_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "slocc/poly.hpp"

namespace slocc {

Mat2 Mat2::inverse() const {
  GaussianRational dt = det();
  if (dt.is_zero()) throw ArithmeticError("singular 2x2 matrix");
  GaussianRational s = dt.inverse();
  return s * adjugate();
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

std::string Mat2::to_string() const {
  return "[[" + a.to_string() + ", " + b.to_string() + "], [" + c.to_string() + ", " + d.to_string() + "]]";
}

namespace mat {
Mat2 I() { return {}; }
Mat2 J() { return {0, 1, -1, 0}; }
Mat2 K() {
  GaussianRational i = GaussianRational::imaginary_unit();
  return {0, i, i, 0};
}
Mat2 D(const GaussianRational& u) { return {u, 0, 0, u.inverse()}; }
Mat2 D(const GaussianRational& u, const GaussianRational& v) { return {u, 0, v, u.inverse()}; }
Mat2 L(const GaussianRational& v) { return D(1, v); }
Mat2 L() { return D(GaussianRational::imaginary_unit()); }
Mat2 M(const GaussianRational& a, const GaussianRational& b) { return {a, b, b, a}; }
Mat2 sharp(const Mat2& x) { return {x.d, x.c, x.b, x.a}; }
}  // namespace mat

// ---------------------------------------------------------------- StateVector

int StateVector::index_of(std::string_view bits) {
  if (bits.size() != 4) throw ParseError("basis label must have four bits", std::string(bits));
  int value = 0;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw ParseError("basis label must have four bits", std::string(bits));
    value = 2 * value + (ch - '0');
  }
  return 15 - value;
}

std::string StateVector::bits_of(int k) {
  int value = 15 - k;
  std::string s(4, '0');
  for (int p = 0; p < 4; ++p) s[static_cast<std::size_t>(p)] = static_cast<char>('0' + ((value >> (3 - p)) & 1));
  return s;
}

StateVector StateVector::parse(std::string_view text) {
  static const Ring ring = [] {
    std::vector<std::string> names;
    for (int k = 0; k < kOddDim; ++k) names.push_back("e" + bits_of(k));
    for (int k = 1; k <= 4; ++k) names.push_back("u" + std::to_string(k));
    return Ring(names);
  }();
  MultiPoly p = MultiPoly::parse(ring, text);
  StateVector out;
  for (const Term& t : p.terms()) {
    if (t.monomial.degree() != 1) throw ParseError("state: expected a linear combination of basis states", std::string(text));
    int k = 0;
    while (t.monomial[k] == 0) ++k;
    if (k < kOddDim)
      out[k] += t.coeff;
    else
      out += t.coeff * cartan(k - kOddDim + 1);
  }
  return out;
}

StateVector StateVector::basis(std::string_view bits) {
  StateVector v;
  v.at(bits) = 1;
  return v;
}

bool StateVector::is_zero() const {
  return std::all_of(amp_.begin(), amp_.end(), [](const auto& x) { return x.is_zero(); });
}

StateVector& StateVector::operator+=(const StateVector& rhs) {
  for (int k = 0; k < kOddDim; ++k) amp_[k] += rhs.amp_[k];
  return *this;
}

StateVector& StateVector::operator-=(const StateVector& rhs) {
  for (int k = 0; k < kOddDim; ++k) amp_[k] -= rhs.amp_[k];
  return *this;
}

StateVector operator*(const GaussianRational& s, StateVector v) {
  for (auto& x : v.amp_) x *= s;
  return v;
}

StateVector StateVector::operator-() const { return GaussianRational(-1) * *this; }

std::string StateVector::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < kOddDim; ++k) {
    const auto& c = amp_[k];
    if (c.is_zero()) continue;
    std::string text = c.to_string();
    bool compound = !c.is_real() && sgn(c.re()) != 0;
    bool negative = !compound && text.front() == '-';
    if (negative) text.erase(0, 1);
    if (compound) text = "(" + text + ")";
    if (!first)
      os << (negative ? " - " : " + ");
    else if (negative)
      os << "-";
    first = false;
    if (text != "1") os << text << "*";
    os << "e" << bits_of(k);
  }
  return first ? "0" : os.str();
}

StateVector cartan(int k) {
  static const std::array<std::array<const char*, 2>, 4> pairs{
      {{"0000", "1111"}, {"0110", "1001"}, {"0101", "1010"}, {"0011", "1100"}}};
  if (k < 1 || k > 4) throw std::out_of_range("Cartan basis index must be 1..4");
  const auto& p = pairs[static_cast<std::size_t>(k - 1)];
  return StateVector::basis(p[0]) + StateVector::basis(p[1]);
}

StateVector cartan_element(const std::array<GaussianRational, 4>& lambda) {
  StateVector v;
  for (int k = 0; k < 4; ++k)
    if (!lambda[k].is_zero()) v += lambda[k] * cartan(k + 1);
  return v;
}

// ---------------------------------------------------------------- LieElement

namespace {

Mat2 even_basis_matrix(int slot) {
  switch (slot) {
    case 0: return {1, 0, 0, -1};
    case 1: return {0, 1, 0, 0};
    default: return {0, 0, 1, 0};
  }
}

}  // namespace

LieElement::LieElement(Vector coords) : coords_(std::move(coords)) {
  if (coords_.size() != static_cast<std::size_t>(kDim)) throw std::invalid_argument("Lie element needs 28 coordinates");
}

LieElement::LieElement(const G0Element& even, const StateVector& odd) : coords_(kDim) {
  for (int f = 0; f < 4; ++f) {
    const Mat2& x = even.factors[f];
    if (!x.trace().is_zero()) throw std::invalid_argument("sl(2) component must be traceless");
    coords_[3 * f] = x.a;
    coords_[3 * f + 1] = x.b;
    coords_[3 * f + 2] = x.c;
  }
  for (int k = 0; k < kOddDim; ++k) coords_[kEvenDim + k] = odd[k];
}

LieElement LieElement::basis(int k) {
  LieElement x;
  x.coords_[static_cast<std::size_t>(k)] = 1;
  return x;
}

G0Element LieElement::even_part() const {
  G0Element g;
  for (int f = 0; f < 4; ++f) g.factors[f] = Mat2{coords_[3 * f], coords_[3 * f + 1], coords_[3 * f + 2], -coords_[3 * f]};
  return g;
}

StateVector LieElement::odd_part() const {
  StateVector v;
  for (int k = 0; k < kOddDim; ++k) v[k] = coords_[kEvenDim + k];
  return v;
}

bool LieElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const auto& x) { return x.is_zero(); });
}

LieElement& LieElement::operator+=(const LieElement& rhs) {
  for (int k = 0; k < kDim; ++k) coords_[k] += rhs.coords_[k];
  return *this;
}

LieElement operator-(const LieElement& a, const LieElement& b) {
  LieElement r = a;
  for (int k = 0; k < kDim; ++k) r.coords_[k] -= b.coords_[k];
  return r;
}

LieElement operator*(const GaussianRational& s, const LieElement& x) {
  LieElement r = x;
  for (auto& c : r.coords_) c *= s;
  return r;
}

// ---------------------------------------------------------------- SL2Quad

SL2Quad::SL2Quad(const std::array<Mat2, 4>& factors) : factors_(factors) {
  for (const auto& m : factors_)
    if (!m.det().is_one()) throw std::invalid_argument("SL(2) factor must have determinant 1: " + m.to_string());
}

SL2Quad SL2Quad::inverse() const {
  return SL2Quad(factors_[0].adjugate(), factors_[1].adjugate(), factors_[2].adjugate(), factors_[3].adjugate());
}

SL2Quad operator*(const SL2Quad& g, const SL2Quad& h) {
  return SL2Quad(g[0] * h[0], g[1] * h[1], g[2] * h[2], g[3] * h[3]);
}

std::string SL2Quad::to_string() const {
  return "(" + factors_[0].to_string() + ", " + factors_[1].to_string() + ", " + factors_[2].to_string() + ", " +
         factors_[3].to_string() + ")";
}

namespace {

int bit_at(int k, int position) { return ((15 - k) >> (3 - position)) & 1; }
int flip_to(int k, int position, int bit) {
  int value = 15 - k;
  int mask = 1 << (3 - position);
  value = bit ? (value | mask) : (value & ~mask);
  return 15 - value;
}

// x acting on tensor position m.
StateVector act_on_position(const Mat2& x, int m, const StateVector& v) {
  StateVector out;
  const GaussianRational* entries[2][2] = {{&x.a, &x.b}, {&x.c, &x.d}};
  for (int k = 0; k < kOddDim; ++k) {
    if (v[k].is_zero()) continue;
    int t = bit_at(k, m);
    for (int s = 0; s < 2; ++s) {
      const GaussianRational& coeff = *entries[s][t];
      if (!coeff.is_zero()) out[flip_to(k, m, s)] += coeff * v[k];
    }
  }
  return out;
}

}  // namespace

StateVector group_act(const SL2Quad& g, const StateVector& x) {
  StateVector v = x;
  for (int m = 0; m < 4; ++m)
    if (!(g[m] == Mat2::identity())) v = act_on_position(g[m], m, v);
  return v;
}

G0Element group_act(const SL2Quad& g, const G0Element& x) {
  G0Element out;
  for (int m = 0; m < 4; ++m) out.factors[m] = g[m] * x.factors[m] * g[m].adjugate();
  return out;
}

// ---------------------------------------------------------------- Sym4

std::vector<Perm4> all_permutations() {
  std::vector<Perm4> out;
  Perm4 p{0, 1, 2, 3};
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Perm4 transposition(int p, int q) {
  Perm4 s{0, 1, 2, 3};
  std::swap(s[static_cast<std::size_t>(p - 1)], s[static_cast<std::size_t>(q - 1)]);
  return s;
}

std::string to_string(const Perm4& sigma) {
  std::string s = "[";
  for (int k = 0; k < 4; ++k) s += (k ? "," : "") + std::to_string(sigma[k] + 1);
  return s + "]";
}

StateVector sym4_act(const Perm4& sigma, const StateVector& x) {
  StateVector out;
  for (int k = 0; k < kOddDim; ++k) {
    if (x[k].is_zero()) continue;
    std::string old = StateVector::bits_of(k), now(4, '0');
    for (int p = 0; p < 4; ++p) now[static_cast<std::size_t>(p)] = old[static_cast<std::size_t>(sigma[p])];
    out.at(now) = x[k];
  }
  return out;
}

LieElement sym4_act(const Perm4& sigma, const LieElement& x) {
  G0Element even = x.even_part(), moved;
  for (int p = 0; p < 4; ++p) moved.factors[p] = even.factors[sigma[p]];
  return LieElement(moved, sym4_act(sigma, x.odd_part()));
}

// ---------------------------------------------------------------- Algebra

namespace {

using Sparse = std::vector<std::pair<int, GaussianRational>>;

void accumulate(Vector& out, const Sparse& s, const GaussianRational& scale) {
  for (const auto& [k, c] : s) out[k] += scale * c;
}

Sparse to_sparse(const Vector& v) {
  Sparse s;
  for (int k = 0; k < static_cast<int>(v.size()); ++k)
    if (!v[k].is_zero()) s.emplace_back(k, v[k]);
  return s;
}

// omega(e_s, e_t) with omega(e0, e1) = 1.
int omega(int s, int t) { return s == t ? 0 : (s == 0 ? 1 : -1); }

}  // namespace

const Algebra& Algebra::instance() {
  static const Algebra algebra;
  return algebra;
}

Algebra::Algebra() { build(); }

Sparse Algebra::odd_odd(int i, int j, const std::array<GaussianRational, 4>& c) const {
  Vector out(kDim);
  for (int m = 0; m < 4; ++m) {
    if (c[m].is_zero()) continue;
    int prod = 1;
    for (int k = 0; k < 4 && prod != 0; ++k)
      if (k != m) prod *= omega(bit_at(i, k), bit_at(j, k));
    if (prod == 0) continue;
    int s = bit_at(i, m), t = bit_at(j, m);
    GaussianRational scale = c[m] * GaussianRational(prod);
    // The symmetric pairing S(v, w)(z) = omega(v, z) w + omega(w, z) v as an sl(2) element.
    if (s == 0 && t == 0)
      out[3 * m + 1] += scale * GaussianRational(2);
    else if (s == 1 && t == 1)
      out[3 * m + 2] -= scale * GaussianRational(2);
    else
      out[3 * m] -= scale;
  }
  return to_sparse(out);
}

void Algebra::build() {
  table_.assign(static_cast<std::size_t>(kDim * kDim), {});
  // [g0, g0] and [g0, g1].
  for (int a = 0; a < kEvenDim; ++a) {
    Mat2 x = even_basis_matrix(a % 3);
    int fa = a / 3;
    for (int b = 0; b < kEvenDim; ++b) {
      if (b / 3 != fa) continue;
      Mat2 y = even_basis_matrix(b % 3);
      Mat2 z = x * y - y * x;
      Vector out(kDim);
      out[3 * fa] = z.a;
      out[3 * fa + 1] = z.b;
      out[3 * fa + 2] = z.c;
      table_[a * kDim + b] = to_sparse(out);
    }
    for (int k = 0; k < kOddDim; ++k) {
      StateVector v = act_on_position(x, fa, StateVector::basis(StateVector::bits_of(k)));
      Vector out(kDim);
      for (int j = 0; j < kOddDim; ++j) out[kEvenDim + j] = v[j];
      table_[a * kDim + kEvenDim + k] = to_sparse(out);
      for (auto& entry : out) entry = -entry;
      table_[(kEvenDim + k) * kDim + a] = to_sparse(out);
    }
  }

  // Solve for the contraction scalars: odd Jacobi identities and [u_i, u_j] = 0
  // are linear in them.
  std::array<std::vector<Sparse>, 4> unit;
  for (int m = 0; m < 4; ++m) {
    std::array<GaussianRational, 4> c{};
    c[m] = 1;
    unit[m].resize(kOddDim * kOddDim);
    for (int i = 0; i < kOddDim; ++i)
      for (int j = 0; j < kOddDim; ++j) unit[m][i * kOddDim + j] = odd_odd(i, j, c);
  }
  auto even_on_odd = [&](const Sparse& even, int k) {
    Vector out(kDim);
    for (const auto& [a, coeff] : even) accumulate(out, table_[a * kDim + kEvenDim + k], coeff);
    return out;
  };
  std::vector<Vector> rows;
  for (int i = 0; i < kOddDim; ++i)
    for (int j = i; j < kOddDim; ++j)
      for (int k = j; k < kOddDim; ++k) {
        std::array<Vector, 4> cols;
        for (int m = 0; m < 4; ++m) {
          Vector v(kDim);
          auto add = [&](int p, int q, int r) {
            Vector w = even_on_odd(unit[m][p * kOddDim + q], r);
            for (int t = 0; t < kDim; ++t) v[t] += w[t];
          };
          add(i, j, k);
          add(j, k, i);
          add(k, i, j);
          cols[m] = std::move(v);
        }
        for (int t = 0; t < kDim; ++t) {
          Vector row{cols[0][t], cols[1][t], cols[2][t], cols[3][t]};
          if (std::any_of(row.begin(), row.end(), [](const auto& x) { return !x.is_zero(); })) rows.push_back(row);
        }
      }
  for (int p = 1; p <= 4; ++p)
    for (int q = p + 1; q <= 4; ++q) {
      StateVector up = cartan(p), uq = cartan(q);
      std::array<Vector, 4> cols;
      for (int m = 0; m < 4; ++m) {
        cols[m] = Vector(kDim);
        for (int i = 0; i < kOddDim; ++i)
          for (int j = 0; j < kOddDim; ++j)
            if (!up[i].is_zero() && !uq[j].is_zero()) accumulate(cols[m], unit[m][i * kOddDim + j], up[i] * uq[j]);
      }
      for (int t = 0; t < kDim; ++t) rows.push_back({cols[0][t], cols[1][t], cols[2][t], cols[3][t]});
    }
  Matrix constraints(static_cast<int>(rows.size()), 4);
  for (int r = 0; r < constraints.rows(); ++r)
    for (int m = 0; m < 4; ++m) constraints(r, m) = rows[r][m];
  auto solutions = nullspace(constraints);
  if (solutions.size() != 1)
    throw std::logic_error("bracket scalars not determined uniquely (solution dimension " +
                           std::to_string(solutions.size()) + ")");
  std::array<GaussianRational, 4> c{};
  for (int m = 0; m < 4; ++m) c[m] = solutions[0][m];

  auto fill_odd = [&](const std::array<GaussianRational, 4>& scalars) {
    for (int i = 0; i < kOddDim; ++i)
      for (int j = 0; j < kOddDim; ++j) table_[(kEvenDim + i) * kDim + kEvenDim + j] = odd_odd(i, j, scalars);
  };
  fill_odd(c);
  Matrix ad = ad_matrix(cartan(1));
  GaussianRational t = (ad * ad).trace();
  if (t.is_zero()) throw std::logic_error("degenerate bracket: tr(ad(u1)^2) = 0");
  GaussianRational scale = GaussianRational(24) / t;
  for (auto& x : c) x *= scale;
  scalars_ = c;
  fill_odd(scalars_);
}

LieElement Algebra::bracket(const LieElement& x, const LieElement& y) const {
  Vector out(kDim);
  for (int a = 0; a < kDim; ++a) {
    if (x[a].is_zero()) continue;
    for (int b = 0; b < kDim; ++b) {
      if (y[b].is_zero()) continue;
      const auto& entry = table_[a * kDim + b];
      if (!entry.empty()) accumulate(out, entry, x[a] * y[b]);
    }
  }
  return LieElement(std::move(out));
}

Matrix Algebra::ad_matrix(const LieElement& x) const {
  Matrix m(kDim, kDim);
  for (int a = 0; a < kDim; ++a) {
    if (x[a].is_zero()) continue;
    for (int b = 0; b < kDim; ++b)
      for (const auto& [r, c] : table_[a * kDim + b]) m(r, b) += x[a] * c;
  }
  return m;
}

Matrix Algebra::odd_action(const LieElement& x) const {
  Matrix m(kOddDim, kOddDim);
  for (int a = 0; a < kEvenDim; ++a) {
    if (x[a].is_zero()) continue;
    for (int b = 0; b < kOddDim; ++b)
      for (const auto& [r, c] : table_[a * kDim + kEvenDim + b]) m(r - kEvenDim, b) += x[a] * c;
  }
  return m;
}

int Algebra::jacobi_violations(long* checked) const {
  int bad = 0;
  long count = 0;
  for (int a = 0; a < kDim; ++a)
    for (int b = a + 1; b < kDim; ++b)
      for (int c = b + 1; c < kDim; ++c) {
        LieElement x = LieElement::basis(a), y = LieElement::basis(b), z = LieElement::basis(c);
        LieElement sum = bracket(bracket(x, y), z) + bracket(bracket(y, z), x) + bracket(bracket(z, x), y);
        ++count;
        if (!sum.is_zero()) ++bad;
      }
  if (checked != nullptr) *checked = count;
  return bad;
}

bool Algebra::is_automorphism(const Perm4& sigma) const {
  std::vector<LieElement> images;
  for (int a = 0; a < kDim; ++a) images.push_back(sym4_act(sigma, LieElement::basis(a)));
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b)
      if (!(sym4_act(sigma, bracket(LieElement::basis(a), LieElement::basis(b))) == bracket(images[a], images[b])))
        return false;
  return true;
}

bool Algebra::grading_is_automorphism() const {
  auto theta = [](const LieElement& x) {
    Vector c = x.coords();
    for (int k = kEvenDim; k < kDim; ++k) c[k] = -c[k];
    return LieElement(std::move(c));
  };
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b) {
      LieElement x = LieElement::basis(a), y = LieElement::basis(b);
      if (!(theta(bracket(x, y)) == bracket(theta(x), theta(y)))) return false;
    }
  return true;
}

}  // namespace slocc
