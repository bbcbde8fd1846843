#include <doctest.h>

#include <set>

#include "slocc/catalog.hpp"
#include "slocc/invariants.hpp"
#include "slocc/jordan.hpp"

using namespace slocc;

TEST_CASE("census") {
  Census g0 = list_classes(Level::G0);
  CHECK(g0.nilpotent == 31);
  CHECK(g0.semisimple == 10);
  CHECK(g0.mixed == 46);
  CHECK(g0.total() == 87);
  Census s = list_classes(Level::S);
  CHECK(s.nilpotent == 9);
  CHECK(s.semisimple == 6);
  CHECK(s.mixed == 12);
  CHECK(s.total() == 27);
}

TEST_CASE("mixed part counts per family") {
  const Catalog& cat = Catalog::instance();
  const int expected[] = {0, 0, 1, 2, 4, 4, 4, 6, 6, 6, 13};
  for (int i = 0; i <= 10; ++i) CHECK(cat.mixed_count(i) == expected[i]);
}

TEST_CASE("labels round-trip through their names") {
  std::set<std::string> names;
  for (const auto& e : Catalog::instance().entries(Level::G0)) {
    CHECK(OrbitClassLabel::parse(e.name).same_class(e.label));
    CHECK(Catalog::instance().find(e.name) == &e);
    names.insert(e.name);
  }
  CHECK(names.size() == 87);
  CHECK_THROWS_AS(OrbitClassLabel::parse("mixed/1,1"), std::invalid_argument);
  CHECK_THROWS_AS(OrbitClassLabel::parse("nilpotent/32"), std::invalid_argument);
  CHECK(Catalog::instance().find("MT7.2") != nullptr);
  CHECK(Catalog::instance().find("nonsense") == nullptr);
}

TEST_CASE("representatives have the right Jordan type") {
  for (const auto& e : Catalog::instance().entries(Level::G0)) {
    StateVector x = representative(e.label);
    JordanPair jp = jordan_decompose(x);
    switch (e.label.kind) {
      case ClassKind::nilpotent:
        CHECK(jp.s.is_zero());
        CHECK(evaluate_signature(x).is_zero());
        break;
      case ClassKind::semisimple: CHECK(jp.n.is_zero()); break;
      case ClassKind::mixed:
        CHECK_FALSE(jp.s.is_zero());
        CHECK_FALSE(jp.n.is_zero());
        break;
    }
  }
}

TEST_CASE("zero state and named rows") {
  CHECK(representative(OrbitClassLabel::parse("nilpotent/31")).is_zero());
  CHECK(representative(OrbitClassLabel::parse("nilpotent/1")) == StateVector::parse("e1100"));
  CHECK(representative(OrbitClassLabel::parse("semisimple/10"), {GR(3)}) == StateVector::parse("3*u1"));
  const CatalogEntry* n7 = Catalog::instance().find("N7");
  REQUIRE(n7 != nullptr);
  CHECK(n7->anchor == "table:nilpotent-centralisers#N7");
  CHECK(n7->stabilizer.tabulated);
}

TEST_CASE("parameter conditions are enforced") {
  auto label = OrbitClassLabel::parse("semisimple/10");
  CHECK_THROWS_AS(representative(label, {GR(0)}), std::invalid_argument);
  CHECK_THROWS_AS(representative(label, {GR(1), GR(2)}), std::invalid_argument);
  CHECK_THROWS_AS(representative(OrbitClassLabel::parse("semisimple/4"), {GR(1), GR(1)}), std::invalid_argument);
}

TEST_CASE("S-classes and D-families") {
  CHECK(s_class_of(OrbitClassLabel::parse("nilpotent/31")) == "N1");
  CHECK(s_class_of(OrbitClassLabel::parse("nilpotent/1")) == "N2");
  CHECK(d_family_of(OrbitClassLabel::parse("mixed/4,3")) == "D2");
  CHECK(s_class_of(OrbitClassLabel::parse("semisimple/5")) == "SS4");
  CHECK(s_class_of(OrbitClassLabel::parse("semisimple/9")) == "SS7");
  std::set<std::string> s_names;
  for (const auto& e : Catalog::instance().entries(Level::G0)) s_names.insert(e.s_class);
  std::set<std::string> listed;
  for (const auto& e : Catalog::instance().entries(Level::S)) listed.insert(e.name);
  CHECK(s_names == listed);
}

TEST_CASE("stabiliser generators fix their representatives") {
  CheckReport report = stabilizer_selfcheck();
  CHECK(report.failures.empty());
  CHECK(report.checks > 300);
}

TEST_CASE("generator lists parse") {
  auto gens = parse_generators("(J,J,J,J),(-I,I,-I,I)");
  REQUIRE(gens.size() == 2);
  StateVector u1 = StateVector::parse("u1");
  CHECK(group_act(gens[1], u1) == u1);
  CHECK_THROWS(parse_generators("(J,J,J)"));
}
