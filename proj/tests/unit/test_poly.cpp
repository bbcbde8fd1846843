#include <doctest.h>

#include <random>

#include "slocc/matrix.hpp"
#include "slocc/poly.hpp"
#include "slocc/unipoly.hpp"

using namespace slocc;

namespace {

const GR I = GR::imaginary_unit();

MultiPoly random_poly(const Ring& ring, std::mt19937& rng, int terms, int max_exp) {
  std::uniform_int_distribution<int> coeff(-5, 5), exp(0, max_exp), var(0, ring.nvars() - 1);
  std::vector<Term> out;
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    for (int v = 0; v < 3; ++v) {
      int idx = var(rng);
      m.set(idx, m[idx] + static_cast<unsigned>(exp(rng)));
    }
    out.push_back({m, GR(Rational(coeff(rng)), Rational(coeff(rng)))});
  }
  return MultiPoly(ring, out);
}

UniPoly T() { return UniPoly::indeterminate(); }

}  // namespace

TEST_CASE("multivariate arithmetic") {
  Ring r(16);
  MultiPoly x1 = MultiPoly::variable(r, 0);
  MultiPoly x16 = MultiPoly::variable(r, 15);
  MultiPoly p = (x1 + MultiPoly(r, I)) * (x1 - MultiPoly(r, I));
  CHECK(p == x1 * x1 + MultiPoly(r, GR(1)));
  std::vector<GR> point(16);
  point[0] = I;
  CHECK(p.eval(point).is_zero());
  CHECK((x1 * x16).partial_derivative(0) == x16);
  CHECK_THROWS_AS(x1 + MultiPoly::variable(Ring(3), 0), std::invalid_argument);
  CHECK_THROWS_AS(x1 + MultiPoly::variable(Ring(16, MonomialOrder::lex), 0), std::invalid_argument);
  CHECK(p.to_string() == "x1^2 + 1");
}

TEST_CASE("monomial orders") {
  Ring dr(3), lex(3, MonomialOrder::lex), block(3, MonomialOrder::block, 1);
  Monomial x = Monomial::variable(0), y = Monomial::variable(1), z = Monomial::variable(2);
  CHECK(lex.compare(x, y * y) > 0);
  CHECK(dr.compare(x, y * y) < 0);
  CHECK(dr.compare(x * z, y * y) < 0);
  CHECK(dr.compare(x * y, y * z) > 0);
  CHECK(block.compare(x, y * y * z) > 0);
  CHECK(block.compare(y * y, y * z) > 0);
}

TEST_CASE("partial derivatives agree with differences along a line") {
  std::mt19937 rng(3);
  Ring r(4);
  for (int trial = 0; trial < 20; ++trial) {
    MultiPoly p = random_poly(r, rng, 6, 3);
    for (int k = 0; k < 4; ++k) {
      // Restrict p to the line base + t e_k as a univariate polynomial in t.
      std::vector<GR> base{GR::ratio(1, 2), GR(-2), GR(3), GR::ratio(1, 3)};
      Ring line(1);
      std::vector<MultiPoly> values;
      for (int v = 0; v < 4; ++v) {
        MultiPoly val(line, base[v]);
        if (v == k) val += MultiPoly::variable(line, 0);
        values.push_back(val);
      }
      auto to_uni = [&](const MultiPoly& q) {
        MultiPoly s = q.substitute(values, line);
        std::vector<GR> c(static_cast<std::size_t>(std::max(0, s.total_degree()) + 1));
        for (const auto& t : s.terms()) c[t.monomial[0]] = t.coeff;
        return UniPoly(c);
      };
      CHECK(to_uni(p).derivative() == to_uni(p.partial_derivative(k)));
    }
  }
}

TEST_CASE("degree-one partial derivative equals the exact difference quotient") {
  Ring r(2);
  MultiPoly x = MultiPoly::variable(r, 0), y = MultiPoly::variable(r, 1);
  MultiPoly p = x * y * y + GR(3) * y - x + MultiPoly(r, GR(5));
  std::vector<GR> a{GR::ratio(1, 3), GR(2)}, b{GR::ratio(7, 2), GR(2)};
  GR quotient = (p.eval(b) - p.eval(a)) / (b[0] - a[0]);
  CHECK(p.partial_derivative(0).eval(a) == quotient);
}

TEST_CASE("univariate squarefree part") {
  CHECK(squarefree_part(T() * T() * T()) == T());
  CHECK(squarefree_part(T() * T() * (T() - UniPoly(1))) == T() * (T() - UniPoly(1)));
  UniPoly q = T() * T() + UniPoly(1);
  CHECK(squarefree_part(q * q) == q);
  CHECK_THROWS_AS(squarefree_part(UniPoly()), ArithmeticError);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    UniPoly f(1);
    for (int k = 0; k < 4; ++k) {
      UniPoly lin = T() - UniPoly(GR(Rational(c(rng)), Rational(c(rng))));
      for (int e = 0; e <= trial % 3; ++e) f = f * lin;
    }
    UniPoly s = squarefree_part(f);
    CHECK(gcd(s, s.derivative()) == UniPoly(1));
    for (const auto& root : gaussian_rational_roots(f)) CHECK(s.eval(root).is_zero());
    CHECK(gaussian_rational_roots(f) == gaussian_rational_roots(s));
  }
}

TEST_CASE("extended gcd and root search") {
  UniPoly a = (T() - UniPoly(1)) * (T() * T() + UniPoly(1));
  UniPoly b = (T() - UniPoly(1)) * (T() + UniPoly(2));
  auto e = extended_gcd(a, b);
  CHECK(e.g == T() - UniPoly(1));
  CHECK(e.s * a + e.t * b == e.g);
  auto roots = gaussian_rational_roots(a * (T() * UniPoly(3) - UniPoly(GR::ratio(2, 5))));
  std::vector<GR> expected{GR::ratio(2, 15), I, GR(1), -I};
  std::sort(expected.begin(), expected.end(), [](auto& x, auto& y) { return canonical_compare(x, y) < 0; });
  CHECK(roots == expected);
  CHECK(gaussian_rational_roots(T() * T() - UniPoly(2)).empty());
  CHECK(gaussian_divisors(GaussianInteger{5, 0}).size() == 4);
}

TEST_CASE("dense matrices") {
  Matrix m(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 10});
  CHECK(m * m.inverse() == Matrix::identity(3));
  CHECK(m.determinant() == GR(-3));
  Matrix s(3, 3, {1, 2, 3, 2, 4, 6, 1, I, 0});
  CHECK(rank(s) == 2);
  auto ns = nullspace(s);
  REQUIRE(ns.size() == 1);
  for (auto x : s * ns[0]) CHECK(x.is_zero());
  // Companion matrix of T^3 - 2T + 5 has that characteristic polynomial.
  Matrix c(3, 3, {0, 0, -5, 1, 0, 2, 0, 1, 0});
  CHECK(characteristic_polynomial(c) == T() * T() * T() - T() * GR(2) + UniPoly(5));
  CHECK(evaluate(characteristic_polynomial(m), m).is_zero());
  auto x = solve(m, {1, 2, 3});
  REQUIRE(x.has_value());
  CHECK(m * *x == Vector{1, 2, 3});
  CHECK_FALSE(solve(s, {0, 1, 0}).has_value());
}
