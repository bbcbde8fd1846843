#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "slocc/gaussian_rational.hpp"
#include "slocc/matrix.hpp"

namespace slocc {

constexpr int kEvenDim = 12;
constexpr int kOddDim = 16;
constexpr int kDim = kEvenDim + kOddDim;

/// 2x2 matrix [[a, b], [c, d]] acting on column vectors, e0 = (1,0), e1 = (0,1).
struct Mat2 {
  GaussianRational a{1}, b{0}, c{0}, d{1};

  static Mat2 identity() { return {}; }
  GaussianRational det() const { return a * d - b * c; }
  GaussianRational trace() const { return a + d; }
  Mat2 transpose() const { return {a, c, b, d}; }
  /// Throws ArithmeticError when singular.
  Mat2 inverse() const;
  /// Adjugate; equals the inverse when det = 1.
  Mat2 adjugate() const { return {d, -b, -c, a}; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend Mat2 operator+(const Mat2& x, const Mat2& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }
  friend Mat2 operator*(const GaussianRational& s, const Mat2& x) { return {s * x.a, s * x.b, s * x.c, s * x.d}; }
  Mat2 operator-() const { return {-a, -b, -c, -d}; }
  friend bool operator==(const Mat2&, const Mat2&) = default;

  std::string to_string() const;
};

/// The matrices used to write stabilisers: I, J, K, D(u), D(u,v), L(v), L,
/// M(a,b) and A#.
namespace mat {
Mat2 I();
Mat2 J();                                                      // [[0,1],[-1,0]]
Mat2 K();                                                      // [[0,i],[i,0]]
Mat2 D(const GaussianRational& u);                             // diag(u, 1/u)
Mat2 D(const GaussianRational& u, const GaussianRational& v);  // [[u,0],[v,1/u]]
Mat2 L(const GaussianRational& v);                             // D(1, v)
Mat2 L();                                                      // D(i)
Mat2 M(const GaussianRational& a, const GaussianRational& b);  // [[a,b],[b,a]]
Mat2 sharp(const Mat2& x);                                     // [[d,c],[b,a]]
}  // namespace mat

/// Amplitudes of a four-qubit state; index k (0-based) holds the coefficient
/// of b_{k+1} = e_{binary(15-k)}, so index 0 is e1111 and index 15 is e0000.
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(const std::array<GaussianRational, kOddDim>& amplitudes) : amp_(amplitudes) {}

  /// e_{i1i2i3i4} from a 4-character bit string such as "1100".
  static StateVector basis(std::string_view bits);
  /// Index of e_{bits} in the b-ordering.
  static int index_of(std::string_view bits);
  /// Bit string of index k.
  static std::string bits_of(int k);
  /// A linear expression in e0000..e1111 and u1..u4, e.g. "e1100 + (1/2+i)*u1".
  /// Throws ParseError.
  static StateVector parse(std::string_view text);

  GaussianRational& operator[](int k) { return amp_[static_cast<std::size_t>(k)]; }
  const GaussianRational& operator[](int k) const { return amp_[static_cast<std::size_t>(k)]; }
  const std::array<GaussianRational, kOddDim>& amplitudes() const { return amp_; }
  GaussianRational& at(std::string_view bits) { return amp_[static_cast<std::size_t>(index_of(bits))]; }
  const GaussianRational& at(std::string_view bits) const { return amp_[static_cast<std::size_t>(index_of(bits))]; }

  bool is_zero() const;

  StateVector& operator+=(const StateVector& rhs);
  StateVector& operator-=(const StateVector& rhs);
  friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
  friend StateVector operator-(StateVector a, const StateVector& b) { return a -= b; }
  friend StateVector operator*(const GaussianRational& s, StateVector v);
  StateVector operator-() const;
  friend bool operator==(const StateVector&, const StateVector&) = default;

  /// For example "e1111 + e0000" or "(1/2+i)*e0110 - 3*e1001"; "0" for zero.
  std::string to_string() const;

 private:
  std::array<GaussianRational, kOddDim> amp_{};
};

/// The Cartan subspace basis u1..u4 (k = 1..4).
StateVector cartan(int k);
/// l1*u1 + l2*u2 + l3*u3 + l4*u4.
StateVector cartan_element(const std::array<GaussianRational, 4>& lambda);

/// Element of sl(2)^4, one traceless 2x2 matrix per tensor factor.
struct G0Element {
  std::array<Mat2, 4> factors{Mat2{0, 0, 0, 0}, Mat2{0, 0, 0, 0}, Mat2{0, 0, 0, 0}, Mat2{0, 0, 0, 0}};
  friend bool operator==(const G0Element&, const G0Element&) = default;
};

/// Element of g = g0 + g1 in the fixed basis: coordinates 0..11 are
/// (h, e, f) of factors 1..4, coordinates 12..27 are b1..b16.
class LieElement {
 public:
  LieElement() : coords_(kDim) {}
  explicit LieElement(Vector coords);
  LieElement(const G0Element& even, const StateVector& odd);
  static LieElement basis(int k);
  static LieElement odd(const StateVector& v) { return LieElement(G0Element{}, v); }

  const Vector& coords() const { return coords_; }
  const GaussianRational& operator[](int k) const { return coords_[static_cast<std::size_t>(k)]; }
  G0Element even_part() const;
  StateVector odd_part() const;
  bool is_zero() const;

  LieElement& operator+=(const LieElement& rhs);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(const LieElement& a, const LieElement& b);
  friend LieElement operator*(const GaussianRational& s, const LieElement& x);
  friend bool operator==(const LieElement&, const LieElement&) = default;

 private:
  Vector coords_;
};

/// Element of SL(2,C)^4.
class SL2Quad {
 public:
  SL2Quad() = default;
  /// Throws std::invalid_argument unless every determinant is 1.
  explicit SL2Quad(const std::array<Mat2, 4>& factors);
  SL2Quad(const Mat2& a, const Mat2& b, const Mat2& c, const Mat2& d) : SL2Quad(std::array<Mat2, 4>{a, b, c, d}) {}

  const Mat2& operator[](int k) const { return factors_[static_cast<std::size_t>(k)]; }
  const std::array<Mat2, 4>& factors() const { return factors_; }
  SL2Quad inverse() const;
  friend SL2Quad operator*(const SL2Quad& g, const SL2Quad& h);
  friend bool operator==(const SL2Quad&, const SL2Quad&) = default;

  std::string to_string() const;

 private:
  std::array<Mat2, 4> factors_{};
};

/// (A (x) B (x) C (x) D) x, with factor 1 acting on the first tensor position.
StateVector group_act(const SL2Quad& g, const StateVector& x);
/// Conjugation g X g^-1 on each factor, so brackets are preserved.
G0Element group_act(const SL2Quad& g, const G0Element& x);

/// A permutation of the four tensor positions, sigma[k] in 0..3 (0-based).
using Perm4 = std::array<int, 4>;
std::vector<Perm4> all_permutations();
/// Transposition of 1-based positions p and q.
Perm4 transposition(int p, int q);
std::string to_string(const Perm4& sigma);

/// Position k of the image receives the old tensor index at position sigma[k].
StateVector sym4_act(const Perm4& sigma, const StateVector& x);
LieElement sym4_act(const Perm4& sigma, const LieElement& x);

/// The graded Lie algebra with g0 = sl(2)^4 and g1 = (C^2)^{(x)4}. The
/// structure constants are computed once; the scalars multiplying the
/// factor contractions in [g1, g1] are the unique solution, up to scale, of
/// the Jacobi identity together with [u_i, u_j] = 0. The scale makes
/// tr(ad(u1)^2) = 24, so the roots take integer values on u1..u4.
class Algebra {
 public:
  static const Algebra& instance();

  LieElement bracket(const LieElement& x, const LieElement& y) const;
  /// Column j is [x, basis_j].
  Matrix ad_matrix(const LieElement& x) const;
  Matrix ad_matrix(const StateVector& x) const { return ad_matrix(LieElement::odd(x)); }

  /// Infinitesimal action of X in g0 on g1, as a 16x16 matrix.
  Matrix odd_action(const LieElement& x) const;

  const std::array<GaussianRational, 4>& contraction_scalars() const { return scalars_; }

  /// Number of violated Jacobi identities over all basis triples a < b < c
  /// (with the total count written to `checked`).
  int jacobi_violations(long* checked = nullptr) const;
  /// True when sigma maps every basis bracket to the bracket of the images.
  bool is_automorphism(const Perm4& sigma) const;
  /// True when x -> (even, -odd) preserves all brackets.
  bool grading_is_automorphism() const;

 private:
  Algebra();
  void build();
  std::vector<std::pair<int, GaussianRational>> odd_odd(int i, int j, const std::array<GaussianRational, 4>& c) const;

  // table_[a * kDim + b] = sparse [basis_a, basis_b]
  std::vector<std::vector<std::pair<int, GaussianRational>>> table_;
  std::array<GaussianRational, 4> scalars_;
};

}  // namespace slocc
