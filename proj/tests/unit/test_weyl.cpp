#include <doctest.h>

#include <map>
#include <set>

#include "slocc/weyl.hpp"

using namespace slocc;

namespace {

const RootSystem& rs() { return RootSystem::instance(); }

CartanPoint pt(long a, long b, long c, long d) { return {GR(a), GR(b), GR(c), GR(d)}; }

}  // namespace

TEST_CASE("roots of the Cartan subspace") {
  const auto& roots = rs().roots();
  REQUIRE(roots.size() == 24);
  int long_axis = 0, diagonal = 0;
  for (const auto& r : roots) {
    int nonzero = 0, abs_sum = 0;
    for (int v : r) {
      nonzero += v != 0;
      abs_sum += std::abs(v);
    }
    if (nonzero == 1 && abs_sum == 2) ++long_axis;
    if (nonzero == 4 && abs_sum == 4) ++diagonal;
  }
  CHECK(long_axis == 8);
  CHECK(diagonal == 16);
  CHECK(roots[rs().simple_roots()[0]] == Root{0, -2, 0, 0});
  CHECK(roots[rs().simple_roots()[1]] == Root{1, 1, 1, 1});
  CHECK(rs().is_positive(rs().index_of({2, 0, 0, 0})));
  CHECK(rs().is_positive(rs().index_of({1, -1, -1, -1})));
  CHECK_FALSE(rs().is_positive(rs().index_of({0, 2, 0, 0})));
}

TEST_CASE("Weyl group") {
  const auto& w = rs().group();
  CHECK(w.size() == 192);
  WeylElement s1 = rs().reflection(rs().simple_roots()[0]);
  CHECK(s1.apply(pt(0, 1, 0, 0)) == pt(0, -1, 0, 0));
  CHECK(s1.apply(pt(1, 0, 0, 0)) == pt(1, 0, 0, 0));
  CHECK(s1.apply(pt(0, 0, 1, 1)) == pt(0, 0, 1, 1));
  std::vector<CartanPoint> orbit;
  for (const auto& x : w)
    if (std::find(orbit.begin(), orbit.end(), x.apply(pt(1, 0, 0, 0))) == orbit.end()) orbit.push_back(x.apply(pt(1, 0, 0, 0)));
  CHECK(orbit.size() == 24);
  // Every element permutes the roots, faithfully.
  std::set<std::vector<int>> perms;
  for (const auto& x : w) {
    std::vector<int> p;
    for (int k = 0; k < 24; ++k) p.push_back(rs().act_on_root(x, k));
    CHECK(std::find(p.begin(), p.end(), -1) == p.end());
    perms.insert(p);
  }
  CHECK(perms.size() == 192);
}

TEST_CASE("Weyl elements factor as PQ^i") {
  auto half = [](std::array<int, 16> t) { return WeylElement::from_twice(t); };
  WeylElement q = half({1, -1, -1, 1, 1, -1, 1, -1, -1, -1, 1, 1, 1, 1, 1, 1});
  std::array<WeylElement, 3> qpow{WeylElement(), q, q * q};
  auto klein = [](const WeylElement& p) {
    // signed permutation whose permutation is in <(12)(34), (13)(24)>
    std::array<int, 4> image{};
    for (int r = 0; r < 4; ++r) {
      int count = 0;
      for (int c = 0; c < 4; ++c) {
        int t = p.twice()[4 * r + c];
        if (t == 0) continue;
        if (t != 2 && t != -2) return false;
        image[r] = c;
        ++count;
      }
      if (count != 1) return false;
    }
    // The Klein four-group is exactly the fixed-point-free involutions and the identity.
    for (int r = 0; r < 4; ++r)
      if (image[image[r]] != r) return false;
    return image[0] == 0 ? image == std::array<int, 4>{0, 1, 2, 3} : image[1] != 1 && image[2] != 2 && image[3] != 3;
  };
  int factored = 0;
  for (const auto& w : rs().group())
    for (const auto& qi : qpow)
      if (klein(w * qi.transpose())) {
        ++factored;
        break;
      }
  CHECK(factored == 192);
}

TEST_CASE("subsystem census") {
  const auto& classes = rs().subsystem_classes();
  CHECK(classes.size() == 12);
  std::multiset<std::string> complete_types;
  int incomplete = 0;
  for (const auto& c : classes) {
    if (c.complete)
      complete_types.insert(c.type);
    else {
      ++incomplete;
      CHECK(c.type == "4A1");
    }
  }
  CHECK(incomplete == 1);
  CHECK(complete_types == std::multiset<std::string>{"empty", "A1", "A2", "2A1", "2A1", "2A1", "A3", "A3", "A3", "3A1", "D4"});
  const std::map<int, std::string> expected{{1, "empty"}, {2, "A1"}, {3, "A2"}, {4, "2A1"}, {5, "2A1"}, {6, "2A1"},
                                            {7, "A3"},    {8, "A3"}, {9, "A3"}, {10, "3A1"}, {11, "D4"}};
  for (const auto& [label, type] : expected) CHECK(rs().type_of(rs().canonical_subsystem(label)) == type);
  RootMask pi3 = rs().canonical_subsystem(3);
  RootMask want = 0;
  for (Root r : {Root{1, 1, 1, 1}, Root{0, 0, 0, -2}, Root{1, 1, 1, -1}}) {
    want |= 1u << rs().index_of(r);
    want |= 1u << rs().index_of({-r[0], -r[1], -r[2], -r[3]});
  }
  CHECK(pi3 == want);
}

TEST_CASE("family identification") {
  CHECK(identify_family(pt(1, 0, 0, 0)).label == 10);
  CHECK(identify_family(pt(1, -1, 0, 0)).label == 9);
  CHECK(identify_family(pt(2, 3, 4, 7)).label == 1);
  CHECK(identify_family(pt(0, 0, 0, 0)).label == 11);
  CHECK(identify_family(pt(0, 1, 0, 0)).label == 10);
  auto m = identify_family(pt(3, 0, 5, 0));
  CHECK(m.label == 5);
  CHECK(in_canonical_open_set(5, m.w.apply(pt(3, 0, 5, 0))));
  const std::array<std::vector<GR>, 12> samples{{{},
                                                 {GR(2), GR(3), GR(4), GR(7)},
                                                 {GR(1), GR(2), GR(4)},
                                                 {GR(1), GR(2)},
                                                 {GR(1), GR(2)},
                                                 {GR(1), GR(2)},
                                                 {GR(1), GR(2)},
                                                 {GR(1)},
                                                 {GR(1)},
                                                 {GR(1)},
                                                 {GR(1)},
                                                 {}}};
  for (int label = 1; label <= 11; ++label) {
    CAPTURE(label);
    CartanPoint p = family_point(label, samples[label]);
    CHECK(in_canonical_open_set(label, p));
    CHECK(family_condition(label, samples[label]));
    CHECK(identify_family(p).label == label);
    CHECK(family_parameters(label, p) == samples[label]);
    // The stabiliser of p is generated by the reflections vanishing at p.
    CHECK(rs().point_stabilizer(p) == rs().reflection_subgroup(rs().annihilator(p)));
  }
  CHECK_FALSE(family_condition(2, {GR(1), GR(2), GR(3)}));
  CHECK_FALSE(in_canonical_open_set(2, family_point(2, {GR(1), GR(2), GR(3)})));
  CHECK_FALSE(family_condition(3, {GR(1), GR(-1)}));
}

TEST_CASE("family conditions agree with the open canonical sets") {
  for (int label = 1; label <= 10; ++label) {
    int n = family_parameter_count(label);
    std::vector<int> digits(static_cast<std::size_t>(n), -3);
    for (;;) {
      std::vector<GR> l;
      for (int d : digits) l.emplace_back(d);
      CHECK(family_condition(label, l) == in_canonical_open_set(label, family_point(label, l)));
      std::size_t k = 0;
      while (k < digits.size() && ++digits[k] > 3) digits[k++] = -3;
      if (k == digits.size()) break;
    }
  }
}

TEST_CASE("Gamma groups") {
  const std::array<int, 12> orders{0, 192, 8, 2, 8, 8, 8, 2, 2, 2, 2, 1};
  for (int label = 1; label <= 11; ++label) {
    CAPTURE(label);
    CHECK(gamma_group(label).order() == orders[label]);
  }
  auto orbit = gamma_orbit(2, {GR(-1), GR(2), GR(3)});
  CHECK(orbit.size() == 8);
  CHECK(std::find(orbit.begin(), orbit.end(), std::vector<GR>{GR(1), GR(2), GR(3)}) != orbit.end());
  CHECK(gamma_orbit(4, {GR(1), GR(2)}).size() == 8);
  auto signs = gamma_orbit(10, {GR(5)});
  CHECK(signs.size() == 2);
  CHECK(std::find(signs.begin(), signs.end(), std::vector<GR>{GR(-5)}) != signs.end());
}

TEST_CASE("w_reduce") {
  CHECK(w_reduce(pt(1, 0, 0, 0), pt(0, 0, 1, 0)).has_value());
  CHECK_FALSE(w_reduce(pt(1, 0, 0, 0), pt(2, 0, 0, 0)).has_value());
  CHECK(w_reduce(pt(2, 3, 4, 7), pt(2, 3, 4, 7))->is_identity());
  auto w = w_reduce(pt(2, 3, 4, 7), pt(-3, 2, 7, 4));
  if (w) CHECK(w->apply(pt(2, 3, 4, 7)) == pt(-3, 2, 7, 4));
}
