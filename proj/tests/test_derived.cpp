#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "kpar/derived.hpp"

using namespace kpar;

namespace {
GroupRingElem lk(ll mod, std::map<ll, ll> coeff) { return laurent(mod, coeff); }
}  // namespace

TEST_CASE("2.1: stabilization at (1,1) over Z_2") {
  DerivedReport r = derived_series(fix("2.1"), 6);
  CHECK(r.steps[0].mod == 0);
  CHECK(r.steps[0].sigma == 2);
  CHECK(r.steps[0].lk_poly == lk(0, {{-1, -1}, {1, -1}}));
  for (int n = 1; n <= 6; ++n) {
    CHECK(r.steps[n].mod == 2);
    CHECK(r.steps[n].p == std::vector<ll>{1, 1});
    CHECK(r.steps[n].sigma == 0);
    CHECK(r.steps[n].lk_poly == lk(2, {{1, -2}}));
  }
  CHECK(r.cls == DerivedClass::Stabilization);
  CHECK(class_name(r.cls) == "stabilization");
}

TEST_CASE("3.1: degeneration after two nontrivial levels") {
  DerivedReport r = derived_series(fix("3.1"), 6);
  CHECK(r.steps[0].mod == 0);
  CHECK(r.steps[0].sigma == 4);
  CHECK(r.steps[0].lk_poly == lk(0, {{-1, -1}, {1, 1}, {2, -1}}));
  CHECK(r.steps[1].mod == 4);
  CHECK(r.steps[1].p == std::vector<ll>{1, 1, 3});
  CHECK(r.steps[1].sigma == 0);
  CHECK(r.steps[1].lk_poly == lk(4, {{3, -1}}));
  CHECK(r.steps[2].mod == 4);
  CHECK(r.steps[2].p == std::vector<ll>{0, 1, 3});
  CHECK(r.steps[2].sigma == 3);  // mirror of the tabulated value 1
  for (int n = 3; n <= 6; ++n) CHECK(r.steps[n].mod == 1);
  CHECK(r.cls == DerivedClass::Degeneration);
}

TEST_CASE("3.5: degeneration with p_3 = 0") {
  DerivedReport r = derived_series(fix("3.5"), 6);
  CHECK(r.steps[0].mod == 0);
  CHECK(r.steps[0].sigma == 8);
  CHECK(r.steps[0].lk_poly == lk(0, {{-2, -1}, {2, -1}}));
  CHECK(r.steps[1].mod == 8);
  CHECK(r.steps[1].p == std::vector<ll>{4, 4, 4});
  CHECK(r.steps[1].lk_poly == lk(8, {{4, -3}}));
  CHECK(r.steps[2].mod == 8);
  CHECK(r.steps[2].p == std::vector<ll>{4, 0, 4});
  CHECK(r.steps[2].lk_poly == lk(8, {{4, -2}}));
  for (int n = 3; n <= 6; ++n) CHECK(r.steps[n].p == std::vector<ll>{0, 0, 0});
  CHECK(r.cls == DerivedClass::Degeneration);
}

TEST_CASE("4.1: periodicity with period 4 over Z_4") {
  DerivedReport r = derived_series(fix("4.1"), 12);
  CHECK(r.steps[0].mod == 0);
  CHECK(r.steps[0].sigma == 4);
  CHECK(r.steps[0].lk_poly == lk(0, {{-1, -2}, {1, -2}}));
  std::vector<std::vector<ll>> cycle{{1, 1, 1, 1}, {3, 1, 3, 1}, {3, 3, 3, 3}, {1, 3, 1, 3}};
  std::vector<GroupRingElem> lks{lk(4, {{3, -4}}), lk(4, {{1, -2}, {3, -2}}),
                                 lk(4, {{1, -4}}), lk(4, {{1, -2}, {3, -2}})};
  for (int n = 1; n <= 12; ++n) {
    CHECK(r.steps[n].mod == 4);
    CHECK(r.steps[n].p == cycle[(n - 1) % 4]);
    CHECK(r.steps[n].lk_poly == lks[(n - 1) % 4]);
  }
  CHECK(r.cls == DerivedClass::Periodicity);
  CHECK(r.period == 4);
}

TEST_CASE("4.4: degeneration with vanishing LK_1, unlike 2.1") {
  DerivedReport r = derived_series(fix("4.4"), 6);
  CHECK(r.steps[0].mod == 0);
  CHECK(r.steps[0].sigma == 2);
  CHECK(r.steps[0].lk_poly == lk(0, {{-1, -1}, {1, -1}}));
  for (int n = 1; n <= 6; ++n) {
    CHECK(r.steps[n].mod == 2);
    CHECK(r.steps[n].p == std::vector<ll>{0, 0, 0, 0});
    CHECK(r.steps[n].lk_poly.is_zero());
  }
  CHECK(r.cls == DerivedClass::Degeneration);
  // LK_0 coincides with 2.1 but LK_1 separates the two knots
  DerivedReport r21 = derived_series(fix("2.1"), 2);
  CHECK(r.steps[0].lk_poly == r21.steps[0].lk_poly);
  CHECK(!(r.steps[1].lk_poly == r21.steps[1].lk_poly));
}

TEST_CASE("4.75: growth with ratio 2 over Z") {
  DerivedReport r = derived_series(fix("4.75"), 8);
  ll scale = 1;
  for (int n = 0; n <= 8; ++n) {
    CHECK(r.steps[n].mod == 0);
    CHECK(r.steps[n].sigma == 0);
    CHECK(r.steps[n].p == std::vector<ll>{scale, -scale, -scale, scale});
    CHECK(r.steps[n].lk_poly.is_zero());
    scale *= 2;
  }
  CHECK(r.cls == DerivedClass::Growth);
  CHECK(r.ratio == 2);
}

TEST_CASE("4.107: growth with ratio 3 and period 2") {
  DerivedReport r = derived_series(fix("4.107"), 8);
  for (int n = 0; n <= 8; ++n) {
    CHECK(r.steps[n].mod == 0);
    CHECK(r.steps[n].sigma == 0);
    // even levels have vanishing LK; odd levels give 2t^-e - 2t^e
    if (n % 2 == 0) CHECK(r.steps[n].lk_poly.is_zero());
  }
  // p_{n+2} = 3 p_n over Z
  int nch = (int)r.steps[0].p.size();
  for (int n = 0; n + 2 <= 8; ++n)
    for (int i = 0; i < nch; ++i) CHECK(r.steps[n + 2].p[i] == 3 * r.steps[n].p[i]);
  // LK_{2k+1} = 2t^{-2*3^k} - 2t^{2*3^k}
  ll e = 2;
  for (int n = 1; n <= 8; n += 2) {
    CHECK(r.steps[n].lk_poly == lk(0, {{-e, 2}, {e, -2}}));
    e *= 3;
  }
  CHECK(r.cls == DerivedClass::Growth);
  CHECK(r.ratio == 3);
  CHECK(r.period == 2);
}

TEST_CASE("5.2012: identically zero series") {
  DerivedReport r = derived_series(fix("5.2012"), 4);
  for (int n = 0; n <= 4; ++n) {
    CHECK(r.steps[n].mod == 0);
    CHECK(r.steps[n].p == std::vector<ll>(5, 0));
    CHECK(r.steps[n].sigma == 0);
    CHECK(r.steps[n].lk_poly.is_zero());
  }
  CHECK(r.cls == DerivedClass::Degeneration);
}

TEST_CASE("series recursion is realized by the intersection matrix") {
  for (const std::string& name : knot_names()) {
    const GaussDiagram& d = fix(name);
    DerivedReport r = derived_series(d, 4);
    Mat m = intersection_matrix(d);
    int nch = (int)r.steps[0].p.size();
    for (int n = 0; n < 4; ++n) {
      if (r.steps[n + 1].mod == 1) continue;
      for (int i = 0; i < nch; ++i) {
        ll s = 0;
        for (int j = 0; j < nch; ++j) s += m[i][j] * r.steps[n].p[j];
        CHECK(pmod(s, r.steps[n + 1].mod) == r.steps[n + 1].p[i]);
      }
    }
  }
}

TEST_CASE("derived rule matches the series on the base diagram") {
  for (const std::string& name : {std::string("2.1"), std::string("4.1")}) {
    const GaussDiagram& d = fix(name);
    DerivedReport r = derived_series(d, 3);
    for (int level = 0; level <= 3; ++level) {
      Rule rule = derived_rule(d, level);
      CHECK(rule.mod == r.steps[level].mod);
      auto vs = d.chords();
      for (size_t i = 0; i < vs.size(); ++i)
        CHECK(rule(d, vs[i]) == pmod(r.steps[level].p[i], rule.mod));
    }
  }
}
