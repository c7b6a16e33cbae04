#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "kpar/biquandle.hpp"

using namespace kpar;

TEST_CASE("the 3-element biquandle satisfies the axioms") {
  Biquandle b = make_b3();
  CHECK(biquandle_axiom_violations(b).empty());
  // damaging one table entry breaks them
  Biquandle broken = b;
  broken.circ[1][2] = 2;
  CHECK(!biquandle_axiom_violations(broken).empty());
}

TEST_CASE("bundled biquandle file matches the built-in tables") {
  std::vector<ll> theta;
  Biquandle b = load_biquandle(data_path("biquandle3.txt"), &theta);
  Biquandle ref = make_b3();
  CHECK(b.m == ref.m);
  CHECK(b.circ == ref.circ);
  CHECK(b.star == ref.star);
  CHECK(theta == theta_b3());
}

TEST_CASE("theta is a 1-cocycle but fails the index conditions") {
  Biquandle b = make_b3();
  std::vector<ll> theta = theta_b3();
  CHECK(theta_is_cocycle(b, theta, kThetaMod3));
  CHECK(!index_condition_violations(b, theta, kThetaMod3).empty());
}

TEST_CASE("two-cocycle lift") {
  Biquandle b = make_b3();
  std::vector<ll> theta = theta_b3();
  CHECK(two_cocycle_check(b, theta, kThetaMod3));
  // phi vanishes on the diagonal
  for (int x = 1; x <= b.m; ++x)
    for (ll i = -2; i <= 2; ++i) CHECK(phi_theta(b, theta, kThetaMod3, x, i, x, i) == 0);
}

TEST_CASE("colourings satisfy the crossing rules") {
  Biquandle b = make_b3();
  for (const std::string& name : knot_names()) {
    const GaussDiagram& d = fix(name);
    auto cols = colourings(d, b);
    CHECK(!cols.empty());
    for (const Coloring& col : cols) {
      REQUIRE((int)col.size() == d.narcs());
      for (int v : d.chords()) {
        int ui = col[d.arc_before(v, 'U')], uo = col[d.arc_after(v, 'U')];
        int oi = col[d.arc_before(v, 'O')], oo = col[d.arc_after(v, 'O')];
        if (d.sign(v) > 0) {
          CHECK(uo == b.c(ui, oo));
          CHECK(oi == b.s(oo, ui));
        } else {
          CHECK(ui == b.c(uo, oi));
          CHECK(oo == b.s(oi, uo));
        }
      }
    }
    // the constant colouring by the idempotent colour 1 always works
    bool has_const = false;
    for (const Coloring& col : cols) {
      bool all1 = true;
      for (int c : col) all1 &= (c == 1);
      has_const |= all1;
    }
    CHECK(has_const);
  }
}

TEST_CASE("sigma_theta equals the Boltzmann weight for every base arc") {
  Biquandle b = make_b3();
  std::vector<ll> theta = theta_b3();
  for (const std::string& name : knot_names()) {
    const GaussDiagram& d = fix(name);
    for (const Coloring& col : colourings(d, b)) {
      auto cyc = theta_cycle(d, col, theta, kThetaMod3);
      ll sg = sigma_theta(d, cyc, kThetaMod3);
      for (int base = 0; base < d.narcs(); ++base)
        CHECK(sg == pmod(boltzmann_phi(d, col, b, theta, kThetaMod3, base), kThetaMod3));
    }
  }
}

TEST_CASE("induced cycles satisfy the cycle condition and normalize") {
  Biquandle b = make_b3();
  std::vector<ll> theta = theta_b3();
  const GaussDiagram& d = fix("3.1");
  for (const Coloring& col : colourings(d, b)) {
    Chain c = induced_cycle(d, col, b, theta, kThetaMod3);  // throws if not a cycle
    Chain n = normalize_cycle(d, c);
    std::vector<ll> arcs(n.arcs.begin(), n.arcs.end());
    CHECK(pmod(sigma_theta(d, arcs, n.mod), n.mod) == 0);
  }
}

TEST_CASE("slot decomposition of theta cycles") {
  Biquandle b = make_b3();
  std::vector<ll> theta = theta_b3();
  const GaussDiagram& d = fix("2.1");
  for (const Coloring& col : colourings(d, b)) {
    auto cyc = theta_cycle(d, col, theta, kThetaMod3);
    auto [pi, rho] = pi_rho(d, cyc, kThetaMod3);
    // recompose: sum pi * right_arcvec + rho must reproduce the cycle mod 3
    std::vector<ll> back(d.narcs(), rho);
    for (const auto& [v, x] : pi) {
      auto rv = right_arcvec(d, v);
      for (int a = 0; a < d.narcs(); ++a) back[a] += x * rv[a];
    }
    for (int a = 0; a < d.narcs(); ++a) CHECK(pmod(back[a], kThetaMod3) == pmod(cyc[a], kThetaMod3));
  }
}

TEST_CASE("colour transport across an R2 insertion") {
  Biquandle b = make_b3();
  const GaussDiagram& d = fix("2.1");
  auto [d2, rec] = r2_insert(d, 0, 2);
  for (const Coloring& col : colourings(d, b)) {
    auto cands = transport_colouring(d, col, d2, rec, b);
    CHECK(cands.size() == 1);  // R2 insertions transport uniquely
    for (const Coloring& c2 : cands)
      for (const auto& [a_old, arcs] : rec.amap)
        for (int a_new : arcs) CHECK(c2[a_new] == col[a_old]);
  }
}

TEST_CASE("colour monodromy realizes the (2 3) transposition") {
  Biquandle b = make_b3();
  GaussDiagram circle({{}}, {});
  auto reach = colour_monodromy_search(circle, b, 2, 3);
  Coloring two{2}, three{3};
  REQUIRE(reach.count(two) == 1);
  CHECK(reach.at(two).count(three) == 1);
  CHECK(reach.at(three).count(two) == 1);
  // colour 1 is fixed: it never reaches 2 or 3
  Coloring one{1};
  CHECK(reach.at(one).count(two) == 0);
  CHECK(reach.at(one).count(three) == 0);
}

TEST_CASE("bounded search finds an R3 with nonzero quasi-index shift") {
  Biquandle b = make_b3();
  auto ex = find_lambda_example(b, theta_b3(), kThetaMod3);
  REQUIRE(ex.has_value());
  CHECK(ex->lambda == 1);
  CHECK(ex->d.nchords() >= 3);
}

TEST_CASE("remainder transport walks") {
  Biquandle b = make_b3();
  for (const std::string& name : {std::string("2.1"), std::string("3.1")}) {
    AxiomReport rep = verify_remainder_transport(fix(name), b, theta_b3(), kThetaMod3, 200, 9);
    CHECK(rep.ok());
    if (!rep.ok())
      for (const auto& v : rep.violations) MESSAGE(v);
  }
}
