#include "slocc/jordan.hpp"

#include <stdexcept>

#include "slocc/invariants.hpp"

namespace slocc {

namespace {

// f(z) modulo m.
UniPoly compose_mod(const UniPoly& f, const UniPoly& z, const UniPoly& m) {
  UniPoly acc;
  for (int k = f.degree(); k >= 0; --k) acc = (acc * z + UniPoly(f.coefficient(k))) % m;
  return acc;
}

UniPoly t_power(int k) { return UniPoly::monomial(GaussianRational(1), k); }

const std::vector<Matrix>& odd_basis_ad() {
  static const std::vector<Matrix> mats = [] {
    std::vector<Matrix> out;
    for (int k = 0; k < kOddDim; ++k) out.push_back(Algebra::instance().ad_matrix(LieElement::basis(kEvenDim + k)));
    return out;
  }();
  return mats;
}

// The unique n in g1 with ad(n) = target, read off the columns of the even basis.
StateVector odd_preimage(const Matrix& target) {
  const auto& ads = odd_basis_ad();
  Matrix system(kDim * kEvenDim, kOddDim);
  Vector rhs(static_cast<std::size_t>(kDim * kEvenDim));
  for (int a = 0; a < kEvenDim; ++a)
    for (int r = 0; r < kDim; ++r) {
      int row = a * kDim + r;
      rhs[static_cast<std::size_t>(row)] = target(r, a);
      for (int k = 0; k < kOddDim; ++k) system(row, k) = ads[static_cast<std::size_t>(k)](r, a);
    }
  auto sol = solve(system, rhs);
  if (!sol) throw std::logic_error("nilpotent part of ad(x) is not ad of an odd element");
  StateVector n;
  for (int k = 0; k < kOddDim; ++k) n[k] = (*sol)[static_cast<std::size_t>(k)];
  if (!(Algebra::instance().ad_matrix(n) == target)) throw std::logic_error("nilpotent part does not reproduce ad(x) - S");
  return n;
}

}  // namespace

JordanPair jordan_decompose(const StateVector& x) {
  Matrix a = Algebra::instance().ad_matrix(x);
  UniPoly chi = characteristic_polynomial(a);
  UniPoly f = squarefree_part(chi);
  if (f == chi) return {x, StateVector()};
  if (f == t_power(1)) return {StateVector(), x};

  UniPoly df = f.derivative();
  UniPoly z = t_power(1);
  for (int iter = 0;; ++iter) {
    if (iter > 64) throw std::logic_error("Newton iteration for the semisimple part did not converge");
    UniPoly fz = compose_mod(f, z, chi);
    if (fz.is_zero()) break;
    auto eg = extended_gcd(compose_mod(df, z, chi), chi);
    if (!(eg.g == UniPoly(GaussianRational(1)))) throw std::logic_error("f'(z) is not invertible modulo the characteristic polynomial");
    z = (z - fz * eg.s) % chi;
  }
  Matrix s_ad = evaluate(z, a);
  StateVector n = odd_preimage(a - s_ad);
  StateVector s = x - n;
  if (!Algebra::instance().bracket(LieElement::odd(s), LieElement::odd(n)).is_zero())
    throw std::logic_error("Jordan parts do not commute");
  return {s, n};
}

bool is_semisimple(const StateVector& x) {
  Matrix a = Algebra::instance().ad_matrix(x);
  return evaluate(squarefree_part(characteristic_polynomial(a)), a).is_zero();
}

bool is_nilpotent(const StateVector& x) {
  bool by_ad = characteristic_polynomial(Algebra::instance().ad_matrix(x)) == t_power(kDim);
  bool by_invariants = evaluate_signature(x).is_zero();
  if (by_ad != by_invariants) throw std::logic_error("ad-nilpotency and F = 0 disagree for " + x.to_string());
  return by_ad;
}

CentralizerInfo centralizer(const StateVector& x) {
  Matrix a = Algebra::instance().ad_matrix(x);
  CentralizerInfo info;
  for (int part = 0; part < 2; ++part) {
    int offset = part == 0 ? 0 : kEvenDim;
    int width = part == 0 ? kEvenDim : kOddDim;
    Matrix block(kDim, width);
    for (int r = 0; r < kDim; ++r)
      for (int c = 0; c < width; ++c) block(r, c) = a(r, offset + c);
    for (const auto& v : nullspace(block)) {
      Vector full(kDim);
      for (int c = 0; c < width; ++c) full[static_cast<std::size_t>(offset + c)] = v[static_cast<std::size_t>(c)];
      info.basis.emplace_back(std::move(full));
    }
    (part == 0 ? info.dim_even : info.dim_odd) = static_cast<int>(info.basis.size()) - (part == 0 ? 0 : info.dim_even);
  }
  info.dim = static_cast<int>(info.basis.size());
  std::vector<Vector> brackets;
  for (std::size_t i = 0; i < info.basis.size(); ++i)
    for (std::size_t j = i + 1; j < info.basis.size(); ++j) {
      LieElement b = Algebra::instance().bracket(info.basis[i], info.basis[j]);
      if (!b.is_zero()) brackets.push_back(b.coords());
    }
  info.derived_dim = brackets.empty() ? 0 : span_rank(brackets);
  return info;
}

std::vector<int> ad_rank_sequence(const StateVector& x) {
  Matrix a = Algebra::instance().ad_matrix(x);
  std::vector<int> ranks{rank(a)};
  Matrix power = a;
  for (;;) {
    power = power * a;
    int r = rank(power);
    if (r == ranks.back()) return ranks;
    ranks.push_back(r);
  }
}

}  // namespace slocc
