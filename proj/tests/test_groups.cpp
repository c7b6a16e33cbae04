#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kpar/groups.hpp"
#include "kpar/linalg.hpp"

using namespace kpar;

TEST_CASE("group construction and rendering") {
  CHECK(make_group(1, {}).render() == "Z");
  CHECK(make_group(0, {4}).render() == "Z_4");
  CHECK(make_group(1, {2}).render() == "Z_2+Z");
  CHECK(make_group(0, {}).trivial());
}

TEST_CASE("quotient by a cyclic subgroup") {
  AbGroup z = make_group(1, {});
  auto [q1, p1] = quotient_by_cyclic(z, make_elem(z, {2}));
  CHECK(q1 == make_group(0, {2}));
  CHECK(p1(make_elem(z, {3})).coords == std::vector<ll>{1});

  AbGroup z4 = make_group(0, {4});
  auto [q2, p2] = quotient_by_cyclic(z4, make_elem(z4, {2}));
  CHECK(q2 == make_group(0, {2}));

  // quotient by zero: isomorphic group, projection preserves elements
  auto [q3, p3] = quotient_by_cyclic(z4, make_elem(z4, {0}));
  CHECK(q3 == z4);
  for (ll x = 0; x < 4; ++x)
    CHECK(!p3(make_elem(z4, {x})).is_zero() == (x != 0));
}

TEST_CASE("cyclic quotient modulus") {
  CHECK(cyclic_quotient_mod(0, 0) == 0);
  CHECK(cyclic_quotient_mod(0, 5) == 5);
  CHECK(cyclic_quotient_mod(0, -5) == 5);
  CHECK(cyclic_quotient_mod(6, 4) == 2);
  CHECK(cyclic_quotient_mod(6, 0) == 6);
  CHECK(cyclic_quotient_mod(4, 1) == 1);
}

TEST_CASE("laurent rendering") {
  CHECK(ring_render(laurent(0, {{-1, -1}, {1, -1}})) == "-t^-1 - t");
  CHECK(ring_render(laurent(0, {{-1, -1}, {1, 1}, {2, -1}})) == "-t^-1 + t - t^2");
  CHECK(ring_render(laurent(8, {{4, -3}})) == "-3t^4");
  CHECK(ring_render(laurent(0, {})) == "0");
  // exponents reduced into the cyclic group
  CHECK(laurent(3, {{4, 1}}) == laurent(3, {{1, 1}}));
}

TEST_CASE("ring arithmetic") {
  GroupRingElem p = laurent(0, {{-1, 2}, {1, -1}});
  CHECK(ring_add(p, ring_neg(p)).is_zero());
  CHECK(ring_scale(p, 3) == ring_add(p, ring_add(p, p)));
  GroupRingElem q = laurent(0, {{1, 1}});
  CHECK(ring_add(p, q) == laurent(0, {{-1, 2}}));  // zero coefficient dropped
}

TEST_CASE("smith normal form") {
  Snf s = smith_normal_form({{2, 4}, {6, 8}});
  CHECK(s.diag == std::vector<ll>{2, 4});
  Snf t = smith_normal_form({{0, 0}, {0, 0}});
  CHECK(t.diag == std::vector<ll>{0, 0});
  Snf u = smith_normal_form({{1, 0, 0}, {0, 6, 0}, {0, 0, 10}});
  CHECK(u.diag == std::vector<ll>{1, 2, 30});
}

TEST_CASE("kernel basis and rational solving") {
  Mat rows{{1, 1, 0}, {0, 1, 1}};
  Mat ker = kernel_basis(rows, 3);
  REQUIRE(ker.size() == 1);
  for (const auto& r : rows) {
    ll s = 0;
    for (int c = 0; c < 3; ++c) s += r[c] * ker[0][c];
    CHECK(s == 0);
  }
  CHECK(solvable_q({{2, 0}, {0, 3}}, {1, 1}));
  CHECK(!solvable_q({{1, 1}, {2, 2}}, {1, 3}));
  auto x = solve_unique_q({{2, 0}, {0, 4}}, {1, 2});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rat(1, 2));
  CHECK((*x)[1] == Rat(1, 2));
}
