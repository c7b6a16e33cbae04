#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "kpar/surface.hpp"

using namespace kpar;

TEST_CASE("pairing matrix: antisymmetry, self-pairing zero, D.D = 0") {
  for (const std::string& name : knot_names()) {
    const GaussDiagram& d = fix(name);
    Mat m = pairing_matrix(d);
    int n = (int)m.size();
    for (int i = 0; i < n; ++i) {
      CHECK(m[i][i] == 0);
      for (int j = 0; j < n; ++j) CHECK(m[i][j] == -m[j][i]);
    }
  }
}

TEST_CASE("ip: pairing formula equals the chord-linking formula; gp = ip mod 2") {
  for (const std::string& name : knot_names()) {
    const GaussDiagram& d = fix(name);
    for (int v : d.chords()) {
      CHECK(ip_walk(d, v) == ip_chord(d, v));
      CHECK(pmod(ip_walk(d, v), 2) == gp_count(d, v));
    }
  }
}

TEST_CASE("fixture index values") {
  const GaussDiagram& d = fix("2.1");
  std::multiset<ll> ips{ip_walk(d, 1), ip_walk(d, 2)};
  CHECK(ips == std::multiset<ll>{-1, 1});
  CHECK(writhe(d) == -2);

  const GaussDiagram& k35 = fix("3.5");
  std::multiset<ll> ips35;
  for (int v : k35.chords()) ips35.insert(ip_walk(k35, v));
  CHECK(ips35 == std::multiset<ll>{-2, 0, 2});
}

TEST_CASE("5.2012 is almost classical with the frozen based matrix") {
  const GaussDiagram& d = fix("5.2012");
  for (int v : d.chords()) CHECK(ip_walk(d, v) == 0);
  CHECK(is_almost_classical(d));
  Mat expect{{0, 1, -1, -1, 1},
             {-1, 0, -1, 1, 1},
             {1, 1, 0, -1, -1},
             {1, -1, 1, 0, -1},
             {-1, -1, 1, 1, 0}};
  Mat m = pairing_matrix(d);
  REQUIRE(m.size() == 6);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) CHECK(m[i][j] == expect[i][j]);
  for (int i = 0; i < 6; ++i) {  // almost classical: D pairs to zero
    CHECK(m[i][5] == 0);
    CHECK(m[5][i] == 0);
  }
}

TEST_CASE("faces close up and genus is consistent") {
  for (const std::string& name : knot_names()) {
    const GaussDiagram& d = fix(name);
    auto fs = faces(d);
    int V = d.nchords(), E = 2 * d.nchords(), F = (int)fs.size();
    CHECK(V - E + F == 2 - 2 * genus(d));
    CHECK(genus(d) >= 0);
    // every directed arc occurs exactly once over all faces
    std::map<std::pair<int, ll>, int> seen;
    for (const auto& f : fs)
      for (const auto& da : f) seen[da]++;
    for (const auto& [da, cnt] : seen) CHECK(cnt == 1);
    CHECK((int)seen.size() == 2 * d.narcs());
  }
  CHECK(genus(fix("2.1")) >= 1);  // 2.1 is not classical
}

TEST_CASE("face boundaries are null-homologous") {
  const GaussDiagram& d = fix("3.1");
  for (const auto& f : faces(d)) {
    std::vector<ll> vec(d.narcs(), 0);
    for (const auto& [arc, dir] : f) vec[arc] += dir;
    CHECK(null_homologous(d, vec));
  }
}

TEST_CASE("half arcs partition the diagram") {
  for (const std::string& name : knot_names()) {
    const GaussDiagram& d = fix(name);
    for (int v : d.chords()) {
      auto plus = half_arcs(d, v, '+');
      auto minus = half_arcs(d, v, '-');
      CHECK((int)(plus.size() + minus.size()) == d.narcs());
      auto rv = right_arcvec(d, v);
      auto lv = left_arcvec(d, v);
      for (int a = 0; a < d.narcs(); ++a) CHECK(rv[a] + lv[a] == 1);
    }
  }
}

TEST_CASE("slot decomposition recovers the right half-cycles") {
  for (const std::string& name : knot_names()) {
    const GaussDiagram& d = fix(name);
    for (int v : d.chords()) {
      SlotDecomp sd = slot_decompose(d, right_arcvec(d, v), 0);
      CHECK(sd.rho == 0);
      for (int w : d.chords()) CHECK(sd.pi[w] == (w == v ? 1 : 0));
    }
  }
}

TEST_CASE("decompose / recompose round trip") {
  const GaussDiagram& d = fix("3.1");
  Decomp dec;
  dec.pi = {{1, 2}, {2, -1}, {3, 3}};
  dec.rho = {2};
  Chain c = recompose(d, dec, 0);
  Decomp back = decompose(d, c);
  CHECK(back.pi == dec.pi);
  CHECK(back.rho == dec.rho);
}

TEST_CASE("chain pairing agrees with walk pairing") {
  const GaussDiagram& d = fix("4.1");
  Walk full = full_walk(d);
  for (int v : d.chords()) {
    Chain c = half_cycle(d, v, HalfKind::Right);
    CHECK(pair_walk_chain(d, full, c) == -ip_walk(d, v));  // D . D^r_v = -ip(v)
  }
}

TEST_CASE("link chain pairing decomposes conserved chains") {
  const GaussDiagram& h = fix("hopf_v");
  // each component of the virtual Hopf link is a conserved cycle
  for (int ci = 0; ci < h.ncomps(); ++ci) {
    std::vector<ll> vec(h.narcs(), 0);
    vec[h.arc_id(ci, 0)] = 1;
    auto walks = chain_walks(h, vec);
    CHECK(!walks.empty());
    CHECK(pair_walk_arcvec_link(h, comp_walk(h, ci), vec) == 0);
  }
}
