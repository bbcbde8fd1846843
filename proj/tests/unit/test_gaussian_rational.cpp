#include <doctest.h>

#include <random>

#include "slocc/gaussian_rational.hpp"

using namespace slocc;

namespace {

GR random_gr(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

}  // namespace

TEST_CASE("field operations on Gaussian rationals") {
  GR a = GR::parse("1/2+1/2i");
  GR b = GR::parse("1/2-1/2i");
  CHECK(a * b == GR::ratio(1, 2));
  CHECK(GR(1) / GR::imaginary_unit() == GR::parse("-i"));
  CHECK((GR::parse("2-3i") + GR::parse("-2+3i")).is_zero());
  CHECK_THROWS_AS(GR(1) / GR(0), ArithmeticError);
  CHECK_THROWS_AS(GR(0).inverse(), ArithmeticError);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(7);
  for (int k = 0; k < 200; ++k) {
    GR x = random_gr(rng), y = random_gr(rng), z = random_gr(rng);
    CHECK((x * y) * z == x * (y * z));
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * (y + z) == x * y + x * z);
    if (!x.is_zero()) CHECK(x * x.inverse() == GR(1));
    if (!y.is_zero()) CHECK((x / y) * y == x);
  }
}

TEST_CASE("text grammar round-trips") {
  for (const char* text : {"0", "-3/2", "1/2+1/2i", "i", "-i", "2-3i", "7/3i", "-1/4-i", "12345678901234567890"}) {
    CAPTURE(text);
    CHECK(GR::parse(text).to_string() == text);
  }
  CHECK(GR::parse("2/4") == GR::ratio(1, 2));
  CHECK(GR::parse("+i") == GR::imaginary_unit());
  CHECK(GR::parse("3+i") == GR(3) + GR::imaginary_unit());
  for (const char* bad : {"", "1/0", "abc", "1/", "/2", "i1", "1+2", "--1", "1.5", "1+-2i"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(GR::parse(bad), ParseError);
  }
  try {
    GR::parse("1/0");
  } catch (const ParseError& e) {
    CHECK(e.token() == "1/0");
  }
}

TEST_CASE("canonical order puts positives first and negatives by magnitude") {
  auto less = [](const char* a, const char* b) { return canonical_compare(GR::parse(a), GR::parse(b)) < 0; };
  CHECK(less("1", "2"));
  CHECK(less("1", "1+i"));
  CHECK(less("i", "1"));
  CHECK(less("5", "0"));
  CHECK(less("0", "-1"));
  CHECK(less("-1", "-2"));
  CHECK(less("2", "-1"));
  CHECK(canonical_compare(GR(3), GR(3)) == 0);
}

TEST_CASE("exact square roots in Q(i)") {
  CHECK(exact_sqrt(GR(4)) == GR(2));
  CHECK(exact_sqrt(GR(-4)) == GR::parse("2i"));
  CHECK(exact_sqrt(GR::parse("2i")) == GR::parse("1+i"));
  CHECK(exact_sqrt(GR::parse("-2i")) == GR::parse("1-i"));
  CHECK(exact_sqrt(GR::ratio(9, 4)) == GR::ratio(3, 2));
  CHECK_FALSE(exact_sqrt(GR(2)).has_value());
  CHECK_FALSE(exact_sqrt(GR::imaginary_unit()).has_value());
  CHECK(exact_sqrt(GR(0)) == GR(0));
  std::mt19937 rng(11);
  for (int k = 0; k < 100; ++k) {
    GR x = random_gr(rng);
    auto r = exact_sqrt(x * x);
    REQUIRE(r.has_value());
    CHECK((*r == x || *r == -x));
    CHECK((x.is_zero() || is_positive(*r)));
  }
}

TEST_CASE("Gaussian integer gcd and division") {
  GaussianInteger a{5, 0}, b{3, 4};
  CHECK(gauss_gcd(a, GaussianInteger{0, 0}) == a);
  GaussianInteger g = gauss_gcd(GaussianInteger{2, 0}, GaussianInteger{1, 1});
  CHECK(g == GaussianInteger{1, 1});
  CHECK(divides(GaussianInteger{2, 1}, a));
  CHECK(exact_div(a, GaussianInteger{2, 1}) == GaussianInteger{2, -1});
  CHECK_THROWS_AS(exact_div(a, GaussianInteger{2, 0}), ArithmeticError);
  GaussianInteger r = gauss_mod(b, GaussianInteger{2, 1});
  CHECK(r.norm() < GaussianInteger{2, 1}.norm());
}
