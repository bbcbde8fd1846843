#include <doctest.h>

#include <random>

#include "slocc/groebner.hpp"

using namespace slocc;

namespace {

struct Vars {
  Ring ring;
  MultiPoly x, y, z;
  explicit Vars(MonomialOrder order = MonomialOrder::degrevlex)
      : ring(std::vector<std::string>{"y", "x", "z"}, order),
        x(MultiPoly::variable(ring, 1)),
        y(MultiPoly::variable(ring, 0)),
        z(MultiPoly::variable(ring, 2)) {}
  MultiPoly c(const GR& v) const { return MultiPoly(ring, v); }
};

}  // namespace

TEST_CASE("reduced bases of small ideals") {
  Vars v(MonomialOrder::lex);
  auto r = buchberger(Ideal({v.x - v.c(1), v.y - v.x}));
  REQUIRE(r.verdict == GBVerdict::proper);
  CHECK(r.basis == std::vector<MultiPoly>{v.y - v.c(1), v.x - v.c(1)});

  r = buchberger(Ideal({v.x * v.x + v.c(1), v.y - v.x}));
  REQUIRE(r.verdict == GBVerdict::proper);
  CHECK(r.basis == std::vector<MultiPoly>{v.y - v.x, v.x * v.x + v.c(1)});

  Vars d;
  r = buchberger(Ideal({d.x * d.x, d.x * d.y}));
  REQUIRE(r.verdict == GBVerdict::proper);
  CHECK(r.basis.size() == 2);
  CHECK(std::find(r.basis.begin(), r.basis.end(), d.x * d.x) != r.basis.end());
  CHECK(std::find(r.basis.begin(), r.basis.end(), d.x * d.y) != r.basis.end());
}

TEST_CASE("ideal membership of one") {
  Vars v;
  CHECK(contains_one(Ideal({v.x, v.x + v.c(1)})) == Membership::yes);
  CHECK(contains_one(Ideal({v.x * v.x + v.c(1)})) == Membership::no);
  CHECK(contains_one(Ideal({v.x * v.y - v.c(1), v.y})) == Membership::yes);
  auto r = buchberger(Ideal({v.x * v.y - v.c(1), v.y * v.y - v.y, v.x - v.c(2)}));
  CHECK(r.verdict == GBVerdict::trivial);
  CHECK(r.basis == std::vector<MultiPoly>{v.c(1)});
  CHECK(predict_contains_one(Ideal({v.x, v.x + v.c(1)})) == true);
  CHECK(predict_contains_one(Ideal({v.x * v.x + v.c(1)})) == false);
}

TEST_CASE("multivariate division") {
  Vars v;
  CHECK(normal_form(v.x * v.x * v.y, {v.x * v.x}).is_zero());
  CHECK(normal_form(v.x + v.y, {v.y}) == v.x);
  CHECK(normal_form(v.c(1), {v.x}) == v.c(1));
}

TEST_CASE("limits produce resource_exhausted, never a wrong basis") {
  Vars v;
  GroebnerLimits tight;
  tight.max_degree = 2;
  auto r = buchberger(Ideal({v.x * v.x * v.y - v.z, v.x * v.y * v.y - v.x, v.z * v.z * v.x - v.y}), tight);
  CHECK(r.verdict == GBVerdict::resource_exhausted);
  CHECK(r.basis.empty());
  CHECK(r.stats.exhausted_by == "degree");
  std::atomic<bool> cancel{true};
  GroebnerLimits cancelled;
  cancelled.cancel = &cancel;
  CHECK(contains_one(Ideal({v.x * v.y - v.z * v.z, v.y * v.z - v.x * v.x}), cancelled) == Membership::unknown);
}

TEST_CASE("random ideals: criterion, idempotence, order independence") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coeff(-3, 3), exp(0, 2);
  int completed = 0;
  for (int trial = 0; trial < 25; ++trial) {
    Vars v;
    std::vector<MultiPoly> gens;
    for (int k = 0; k < 3; ++k) {
      std::vector<Term> terms;
      for (int t = 0; t < 3; ++t) {
        Monomial m;
        for (int var = 0; var < 3; ++var) m.set(var, static_cast<unsigned>(exp(rng)));
        terms.push_back({m, GR(Rational(coeff(rng)), Rational(trial % 2 ? coeff(rng) : 0))});
      }
      gens.emplace_back(v.ring, terms);
    }
    Ideal ideal(v.ring, gens);
    if (ideal.generators().empty()) continue;
    GroebnerLimits limits;
    limits.max_degree = 20;
    limits.time_budget = std::chrono::seconds(10);
    auto r = buchberger(ideal, limits);
    if (r.verdict == GBVerdict::resource_exhausted) continue;
    ++completed;
    CHECK(is_groebner_basis(r.basis));
    for (const auto& g : gens) CHECK(normal_form(g, r.basis).is_zero());
    auto again = buchberger(Ideal(r.basis), limits);
    CHECK(again.basis == r.basis);
    GroebnerLimits quick = limits;
    quick.time_budget = std::chrono::milliseconds(500);
    auto lex = buchberger(ideal.with_order(MonomialOrder::lex), quick);
    if (lex.verdict != GBVerdict::resource_exhausted) CHECK((lex.verdict == GBVerdict::trivial) == (r.verdict == GBVerdict::trivial));
    auto predicted = predict_contains_one(ideal, limits);
    if (predicted) CHECK(*predicted == (r.verdict == GBVerdict::trivial));
  }
  CHECK(completed >= 15);
}
