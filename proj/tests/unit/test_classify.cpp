#include <doctest.h>

#include <algorithm>
#include <random>

#include "slocc/classify.hpp"
#include "slocc/weyl.hpp"

using namespace slocc;

namespace {

StateVector st(const char* text) { return StateVector::parse(text); }

bool contains(const std::vector<std::vector<GR>>& sols, const std::vector<GR>& v) {
  return std::find(sols.begin(), sols.end(), v) != sols.end();
}

OrbitClassLabel semisimple(int family, std::vector<GR> params) {
  return {ClassKind::semisimple, family, 0, std::move(params), {}};
}

}  // namespace

TEST_CASE("parameter recovery closed forms") {
  auto two = semisimple_parameters(10, {4, 0, 0, 0});
  CHECK(two.solutions.size() == 2);
  CHECK(contains(two.solutions, {GR(2)}));
  CHECK(contains(two.solutions, {GR(-2)}));

  auto irrational = semisimple_parameters(10, {GR::imaginary_unit(), 0, 0, 0});
  CHECK(irrational.solutions.empty());
  CHECK(irrational.symbolic == "l1^2 = i");

  auto four = semisimple_parameters(4, {5, 0, -4, 0});
  REQUIRE_FALSE(four.solutions.empty());
  for (const auto& s : four.solutions) {
    std::vector<GR> squares{s[0] * s[0], s[1] * s[1]};
    CHECK((squares == std::vector<GR>{1, 4} || squares == std::vector<GR>{4, 1}));
  }
}

TEST_CASE("inconsistent signatures name the relation") {
  CHECK_THROWS_WITH_AS(semisimple_parameters(10, {4, 1, 0, 0}), doctest::Contains("relation"), std::invalid_argument);
}

TEST_CASE("parameter recovery inverts every family row") {
  const std::vector<std::vector<GR>> samples{{2, 3, 4, 7}, {1, 2, 4}, {1, 2}, {1, 2}, {1, 2}, {1, 2}, {1}, {1}, {1}, {1}};
  for (int f = 1; f <= 10; ++f) {
    CAPTURE(f);
    const auto& lambda = samples[static_cast<std::size_t>(f - 1)];
    auto sig = evaluate_signature(representative(semisimple(f, lambda), lambda));
    auto sol = semisimple_parameters(f, sig);
    CHECK(contains(sol.solutions, lambda));
    for (const auto& mu : sol.solutions) CHECK(contains(gamma_orbit(f, lambda), mu));
  }
}

TEST_CASE("family discriminator is injective on the catalog samples") {
  for (int f = 1; f <= 10; ++f) {
    CAPTURE(f);
    auto label = semisimple(f, {});
    CHECK(semisimple_family(representative(label)) == f);
  }
  CHECK(semisimple_family(StateVector()) == 11);
  CHECK_THROWS_AS(semisimple_family(12, 5, InvariantSignature{}), std::invalid_argument);
}

TEST_CASE("S-parameter groups") {
  CHECK(s_parameter_group(1).size() == 1152);
  CHECK(s_parameter_group(2).size() == 48);
  CHECK(s_parameter_group(3).size() == 12);
  CHECK(s_parameter_group(4).size() == 8);
  CHECK(s_parameter_group(7).size() == 2);
  CHECK(s_parameter_group(10).size() == 2);
  CHECK_THROWS(s_parameter_group(5));
}

TEST_CASE("S-normal forms") {
  SNormalForm a = s_normal_form(semisimple(2, {-1, 2, 3}));
  CHECK(a.parameters == std::vector<GR>{1, 2, 3});
  CHECK(a.s_class == "SS2");
  SNormalForm b = s_normal_form(semisimple(7, {-5}));
  CHECK(b.parameters == std::vector<GR>{5});
  SNormalForm c = s_normal_form({ClassKind::mixed, 4, 3, {1, 2}, {}});
  CHECK(c.d_family == "D2");
  SNormalForm d = s_normal_form(semisimple(9, {3}));
  CHECK(d.family == 7);
  CHECK(d.s_class == "SS7");
}

TEST_CASE("classification examples") {
  auto u1 = classify_state(st("u1"));
  CHECK(u1.label.name() == "semisimple/10");
  CHECK(u1.exactness == Exactness::exact);
  CHECK((u1.label.parameters == std::vector<GR>{1} || u1.label.parameters == std::vector<GR>{-1}));
  REQUIRE(u1.stabilizer != nullptr);
  CHECK(u1.stabilizer->anchor == "table:semisimple-centralisers#10");

  auto product = classify_state(st("e0011"));
  CHECK(product.label.name() == "nilpotent/1");
  REQUIRE(product.s_form);
  CHECK(product.s_form->s_class == "N2");
  CHECK(product.s_form->d_family == "D2");

  auto mixed = classify_state(st("u1 + e0011"));
  CHECK(mixed.label.name() == "mixed/10,13");
  CHECK(mixed.exactness == Exactness::exact);

  auto generic = classify_state(st("2*u1 + 3*u2 + 4*u3 + 7*u4"));
  CHECK(generic.label.name() == "semisimple/1");
  CHECK(contains(gamma_orbit(1, {2, 3, 4, 7}), generic.label.parameters));

  auto zero = classify_state(StateVector());
  CHECK(zero.label.name() == "nilpotent/31");
}

TEST_CASE("irrational parameters give a partial report") {
  auto r = classify_state(st("e0000 + 2*e1111"));
  CHECK(r.exactness == Exactness::partial);
  CHECK(r.label.family == 10);
  CHECK(r.symbolic_parameters == "l1^2 = 2");
  CHECK_FALSE(r.normal_form);

  auto m = classify_state(st("e0000 + 2*e1111 + e0011"));
  CHECK(m.exactness == Exactness::partial);
  CHECK(m.label.kind == ClassKind::mixed);
  CHECK(m.candidates.size() == 3);
}

TEST_CASE("classification is invariant under random SL(2)^4 moves") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-2, 2);
  auto sl2 = [&] { return Mat2{1, d(rng), 0, 1} * Mat2{1, 0, d(rng), 1}; };
  for (const char* name : {"nilpotent/16", "semisimple/3", "mixed/7,3", "mixed/10,12", "mixed/4,2"}) {
    CAPTURE(name);
    auto label = OrbitClassLabel::parse(name);
    StateVector x = group_act(SL2Quad(sl2(), sl2(), sl2(), sl2()), representative(label));
    auto r = classify_state(x);
    CHECK(r.label.same_class(label));
    CHECK(r.exactness == Exactness::exact);
  }
}

TEST_CASE("S-class tags are stable under qubit permutations") {
  for (const char* name : {"nilpotent/5", "mixed/7,2", "semisimple/6", "mixed/3,2"}) {
    CAPTURE(name);
    auto label = OrbitClassLabel::parse(name);
    auto r = classify_state(sym4_act(Perm4{2, 0, 3, 1}, representative(label)));
    REQUIRE(r.s_form);
    CHECK(r.s_form->s_class == s_class_of(label));
  }
}

TEST_CASE("lex points of a zero-dimensional ideal") {
  Ring ring(std::vector<std::string>{"x", "y"}, MonomialOrder::lex);
  Ideal ideal(ring, {MultiPoly::parse(ring, "x^2 - y"), MultiPoly::parse(ring, "y^2 - 1")});
  auto pts = gaussian_rational_points(ideal);
  REQUIRE(pts);
  CHECK(pts->size() == 4);
  CHECK(contains(*pts, {GR(1), GR(1)}));
  CHECK(contains(*pts, {GR(-1), GR(1)}));
  CHECK(contains(*pts, {GR::imaginary_unit(), GR(-1)}));
  CHECK(contains(*pts, {-GR::imaginary_unit(), GR(-1)}));

  Ideal line(ring, {MultiPoly::parse(ring, "x - y")});
  CHECK_FALSE(gaussian_rational_points(line));
  Ideal empty(ring, {MultiPoly::parse(ring, "x - 1"), MultiPoly::parse(ring, "x - 2")});
  CHECK(gaussian_rational_points(empty)->empty());
}
