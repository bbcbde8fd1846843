#include <doctest.h>

#include <random>

#include "slocc/invariants.hpp"
#include "slocc/weyl.hpp"

using namespace slocc;

namespace {

StateVector e(const char* bits) { return StateVector::basis(bits); }

GR small_gaussian(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  return GR(Rational(d(rng), 1 + (d(rng) + 3) % 2), Rational(d(rng)));
}

Mat2 random_sl2(std::mt19937& rng) {
  // Product of a lower and an upper unipotent matrix with a diagonal factor.
  GR a = small_gaussian(rng), b = small_gaussian(rng), u = small_gaussian(rng);
  if (u.is_zero()) u = GR(2);
  return mat::D(u) * Mat2{1, a, 0, 1} * Mat2{1, 0, b, 1};
}

}  // namespace

TEST_CASE("invariant polynomials") {
  const auto& inv = load_invariants();
  CHECK(inv[0] == MultiPoly::parse(inv.ring(), "x1*x16 - x2*x15 - x3*x14 + x4*x13 - x5*x12 + x6*x11 + x7*x10 - x8*x9"));
  CHECK(inv[1].size() == 24);
  CHECK(inv[2].size() == 24);
  const std::array<int, 4> degrees{2, 4, 4, 6};
  for (int k = 0; k < 4; ++k) {
    CHECK(inv[k].is_homogeneous());
    CHECK(inv[k].total_degree() == degrees[k]);
  }
  for (const auto& t : inv[1].terms()) {
    int distinct = 0;
    for (int v = 0; v < 16; ++v) distinct += t.monomial[v] == 1;
    CHECK(distinct == 4);
  }
}

TEST_CASE("polynomial parser") {
  Ring r(std::vector<std::string>{"a", "b"});
  CHECK(MultiPoly::parse(r, "(a + i*b)^2") == MultiPoly::parse(r, "a^2 + 2*i*a*b - b^2"));
  CHECK(MultiPoly::parse(r, "-1/4*a*b + 0") == GR::ratio(-1, 4) * MultiPoly::parse(r, "a*b"));
  CHECK_THROWS_AS(MultiPoly::parse(r, "a + c"), ParseError);
  CHECK_THROWS_AS(MultiPoly::parse(r, "a +"), ParseError);
  CHECK_THROWS_AS(MultiPoly::parse(r, "1/0"), ParseError);
}

TEST_CASE("signature values") {
  CHECK(evaluate_signature(StateVector()).is_zero());
  CHECK(evaluate_signature(cartan(1)) == InvariantSignature{GR(1), GR(0), GR(0), GR(0)});
  StateVector p = cartan_element({GR(2), GR(3), GR(4), GR(7)});
  CHECK(evaluate_signature(p) == InvariantSignature{GR(78), GR(-315), GR(480), GR(38896)});
  CHECK(evaluate_signature(cartan(1) + e("0011")) == evaluate_signature(cartan(1)));
  CHECK(evaluate_signature(e("1100")).is_zero());
  CHECK(evaluate_signature(cartan(3)) == evaluate_signature(cartan(1)));
}

TEST_CASE("infinitesimal invariance") {
  auto report = check_infinitesimal_invariance();
  CHECK(report.checks == 48);
  CHECK(report.passed());
  for (const auto& f : report.failures) MESSAGE(f);
}

TEST_CASE("family values and relations") {
  auto values = check_family_values();
  CHECK(values.passed());
  for (const auto& f : values.failures) MESSAGE(f);
  auto relations = check_all_relations();
  CHECK(relations.passed());
  for (const auto& f : relations.failures) MESSAGE(f);
  CHECK(relation_generators(9).size() == 5);
  auto row10 = symbolic_family_values(10);
  CHECK(row10[0] == MultiPoly::parse(parameter_ring(), "l1^2"));
}

TEST_CASE("invariants are constant on orbits") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    StateVector x;
    for (int k = 0; k < 16; ++k) x[k] = small_gaussian(rng);
    SL2Quad g(random_sl2(rng), random_sl2(rng), random_sl2(rng), random_sl2(rng));
    CHECK(evaluate_signature(group_act(g, x)) == evaluate_signature(x));
  }
}

TEST_CASE("semisimple separation on samples") {
  // Weyl images share F; different families or parameters do not.
  StateVector p = cartan_element({GR(2), GR(3), GR(4), GR(7)});
  for (const auto& w : RootSystem::instance().group()) {
    CartanPoint q = w.apply({GR(2), GR(3), GR(4), GR(7)});
    if (evaluate_signature(cartan_element(q)) != evaluate_signature(p)) {
      FAIL("Weyl image changes F");
      break;
    }
  }
  CHECK(evaluate_signature(cartan(1)) != evaluate_signature(GR(2) * cartan(1)));
  CHECK(evaluate_signature(cartan(1) - cartan(2)) != evaluate_signature(GR(2) * cartan(1)));
}
