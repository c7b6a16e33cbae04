#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "kpar/derived.hpp"
#include "kpar/functors.hpp"

using namespace kpar;

TEST_CASE("remainder shifts along R1 and R2 insertions") {
  Rule ip = rule_ip();
  const GaussDiagram& d = fix("2.1");
  for (const char* lt : {"l+", "l-", "r+", "r-"}) {
    auto [d2, rec] = r1_insert(d, 0, lt);
    ll want = -ip(d2, rec.v_new[0]) * rec.k;
    CHECK(remainder_delta(ip, d, d2, rec) == want);
    // r-type loops sit outside the base region: no shift
    if (lt[0] == 'r') CHECK(remainder_delta(ip, d, d2, rec) == 0);
  }
  auto [d2, rec] = r2_insert(d, 0, 2);
  CHECK(remainder_delta(ip, d, d2, rec) == -ip(d2, rec.v_new[0]));
  // the R2 pair carries a single shift: both chords have equal index
  CHECK(ip(d2, rec.v_new[0]) == ip(d2, rec.v_new[1]));
  auto [d3, rec3] = r2_delete(d2, rec.v_new[0], rec.v_new[1]);
  CHECK(remainder_delta(ip, d2, d3, rec3) == ip(d2, rec3.v_old[0]));
}

TEST_CASE("R3 shift is coherent on the lambda fixture") {
  GaussDiagram d = parse_gauss_code("U1+U3+U4-U2+O4-O3+O2+O1+");
  Rule ip = rule_ip();
  for (const R3Site& site : r3_sites(d)) {
    auto [d2, rec] = r3_apply(d, site);
    auto lam = r3_lambda_k(ip, d, d2, rec);
    REQUIRE(lam.has_value());
    CHECK(lam->first == 0);  // indices never shift across R3
  }
}

TEST_CASE("quasi-index functor is natural along random walks") {
  Rule ip = rule_ip();
  QuasiIndexFunctor fun = quasiindex_functor(ip);
  std::mt19937 rng(17);
  for (const std::string& name : {std::string("2.1"), std::string("3.1")}) {
    GaussDiagram d = fix(name);
    for (int step = 0; step < 60; ++step) {
      auto avail = enumerate_moves(d, 8);
      REQUIRE(!avail.empty());
      auto [d2, rec] = apply_move(d, avail[rng() % avail.size()]);
      for (const auto& [vo, vn] : rec.cmap) {
        QIValue moved = fun.transport(d, d2, rec, fun.eval(d, vo));
        CHECK(moved == fun.eval(d2, vn));
      }
      d = std::move(d2);
    }
  }
}

TEST_CASE("remainder monodromy of the constant quasi-index on the unknot") {
  Rule one;
  one.name = "const1";
  one.mod = 0;
  one.kind = RuleKind::Index;
  one.eval = [](const GaussDiagram&, int) { return 1; };
  GaussDiagram circle({{}}, {});
  std::set<ll> mon = monodromy_search(one, circle, 2, 2);
  CHECK(mon.count(0) == 1);
  CHECK(mon.count(-1) == 1);  // l-loop in, r-reading out
}

TEST_CASE("tribal functor transports raw vectors coherently") {
  Rule ip = rule_ip();
  TribalFunctor fun = tribal_functor(tribes_of_index(ip));
  std::mt19937 rng(23);
  GaussDiagram d = fix("2.1");
  for (int step = 0; step < 60; ++step) {
    auto avail = enumerate_moves(d, 8);
    REQUIRE(!avail.empty());
    auto [d2, rec] = apply_move(d, avail[rng() % avail.size()]);
    if (rec.kind != "R3") {
      for (const auto& [vo, vn] : rec.cmap) {
        TribalValue moved = fun.transport(d, d2, rec, fun.eval(d, vo));
        TribalValue direct = fun.eval(d2, vn);
        CHECK(moved.y == direct.y);
        CHECK(fun.project(d2, moved.x) == fun.project(d2, direct.x));
      }
    }
    d = std::move(d2);
  }
}

TEST_CASE("tribal data of 2.1") {
  Rule ip = rule_ip();
  TribalFunctor fun = tribal_functor(tribes_of_index(ip));
  const GaussDiagram& d = fix("2.1");
  CHECK(fun.tribes(d) == std::vector<ll>{-1, 1});
  std::map<ll, ll> sig = fun.signature(d);
  CHECK(sig.at(-1) == 1);
  CHECK(sig.at(1) == -1);
  auto [g, proj] = fun.group_of(d);
  CHECK(g == make_group(1, {}));  // Z^2 / <(1,-1)> = Z
  for (int v : d.chords()) CHECK(fun.eval(d, v).y == -ip(d, v));
}

TEST_CASE("extended view reads the functor off probe crossings") {
  for (const std::string& name : {std::string("2.1"), std::string("3.1")}) {
    const GaussDiagram& d = fix(name);
    ExtendedView view = extended_group_view(d, rule_ip());
    CHECK(view.ok());
    if (!view.ok())
      for (const auto& v : view.violations) MESSAGE(v);
    CHECK((int)view.delta.size() == d.narcs());
    CHECK((int)view.pi.size() == d.nchords());
  }
}

TEST_CASE("extended view works for derived parities") {
  const GaussDiagram& d = fix("2.1");
  ExtendedView view = extended_group_view(d, derived_rule(d, 1), false);
  CHECK(view.ok());
  if (!view.ok())
    for (const auto& v : view.violations) MESSAGE(v);
}
