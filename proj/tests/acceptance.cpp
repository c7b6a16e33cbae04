// Acceptance suite: one pass/fail line per criterion.  Exit code 0 iff all
// criteria pass.

#include <algorithm>
#include <array>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fixtures.hpp"
#include "kpar/biquandle.hpp"
#include "kpar/derived.hpp"
#include "kpar/functors.hpp"
#include "kpar/links.hpp"
#include "kpar/parity.hpp"

using namespace kpar;

namespace {

int g_failures = 0;

struct Criterion {
  int id;
  std::string title;
  std::vector<std::string> problems;
  Criterion(int i, std::string t) : id(i), title(std::move(t)) {}
  void check(bool ok, const std::string& what) {
    if (!ok && problems.size() < 12) problems.push_back(what);
  }
  void finish() {
    bool ok = problems.empty();
    if (!ok) ++g_failures;
    std::cout << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << " - " << title << "\n";
    for (const std::string& p : problems) std::cout << "    " << p << "\n";
  }
};

GroupRingElem lk(ll mod, std::map<ll, ll> coeff) { return laurent(mod, coeff); }

std::string pvec(const std::vector<ll>& p) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ")";
  return os.str();
}

void criterion1() {
  Criterion c(1, "golden derived-series numbers and classification labels");
  auto series = [&](const std::string& n, int max_n) { return derived_series(fix(n), max_n); };

  {  // 2.1
    DerivedReport r = series("2.1", 6);
    c.check(r.steps[0].sigma == 2, "2.1 sigma_0");
    c.check(r.steps[0].lk_poly == lk(0, {{-1, -1}, {1, -1}}), "2.1 LK_0");
    for (int n = 1; n <= 6; ++n) {
      c.check(r.steps[n].mod == 2 && r.steps[n].p == std::vector<ll>{1, 1},
              "2.1 p_" + std::to_string(n) + " = (1,1) in Z_2");
      c.check(r.steps[n].lk_poly == lk(2, {{1, -2}}), "2.1 LK_" + std::to_string(n));
    }
    c.check(r.cls == DerivedClass::Stabilization, "2.1 classification");
  }
  {  // 3.1
    DerivedReport r = series("3.1", 4);
    c.check(r.steps[0].sigma == 4, "3.1 sigma_0");
    c.check(r.steps[0].lk_poly == lk(0, {{-1, -1}, {1, 1}, {2, -1}}), "3.1 LK_0");
    c.check(r.steps[1].lk_poly == lk(4, {{3, -1}}), "3.1 LK_1 = -t^-1 (exponent 3 in Z_4)");
    c.check(r.cls == DerivedClass::Degeneration, "3.1 classification");
  }
  {  // 3.5
    DerivedReport r = series("3.5", 4);
    c.check(r.steps[0].sigma == 8, "3.5 sigma_0");
    c.check(r.steps[0].lk_poly == lk(0, {{-2, -1}, {2, -1}}), "3.5 LK_0");
    c.check(r.steps[1].lk_poly == lk(8, {{4, -3}}), "3.5 LK_1 = -3t^4");
    c.check(r.steps[2].lk_poly == lk(8, {{4, -2}}), "3.5 LK_2 = -2t^4");
    c.check(r.steps[3].p == std::vector<ll>{0, 0, 0}, "3.5 p_3 = 0");
    c.check(r.cls == DerivedClass::Degeneration, "3.5 classification");
  }
  {  // 4.1
    DerivedReport r = series("4.1", 12);
    c.check(r.steps[0].sigma == 4, "4.1 sigma_0");
    c.check(r.steps[0].lk_poly == lk(0, {{-1, -2}, {1, -2}}), "4.1 LK_0");
    std::vector<std::vector<ll>> cyc{{1, 1, 1, 1}, {3, 1, 3, 1}, {3, 3, 3, 3}, {1, 3, 1, 3}};
    for (int n = 1; n <= 12; ++n)
      c.check(r.steps[n].p == cyc[(n - 1) % 4],
              "4.1 p_" + std::to_string(n) + " follows the 4-cycle, got " + pvec(r.steps[n].p));
    for (int n = 1; n <= 12; n += 4)
      c.check(r.steps[n].lk_poly == lk(4, {{3, -4}}),
              "4.1 LK_{4k+1} = -4t^-1 (exponent 3 in Z_4)");
    c.check(r.cls == DerivedClass::Periodicity && r.period == 4, "4.1 classification");
  }
  {  // 4.4
    DerivedReport r = series("4.4", 3);
    c.check(r.steps[0].lk_poly == lk(0, {{-1, -1}, {1, -1}}), "4.4 LK_0");
    c.check(r.steps[1].lk_poly.is_zero(), "4.4 LK_1 = 0");
    c.check(r.cls == DerivedClass::Degeneration, "4.4 classification");
  }
  {  // 4.75
    DerivedReport r = series("4.75", 8);
    c.check(r.steps[0].sigma == 0, "4.75 sigma_0 = 0");
    c.check(r.steps[0].lk_poly.is_zero(), "4.75 LK_0 = 0");
    ll s = 1;
    for (int n = 0; n <= 8; ++n) {
      c.check(r.steps[n].mod == 0 && r.steps[n].p == std::vector<ll>{s, -s, -s, s},
              "4.75 p_" + std::to_string(n) + " = 2^n (1,-1,-1,1), got " + pvec(r.steps[n].p));
      s *= 2;
    }
    c.check(r.cls == DerivedClass::Growth && r.ratio == 2, "4.75 classification");
  }
  {  // 4.107
    DerivedReport r = series("4.107", 8);
    c.check(r.steps[0].sigma == 0, "4.107 sigma_0 = 0");
    c.check(r.steps[0].lk_poly.is_zero(), "4.107 LK_0 = 0");
    ll e = 2;
    for (int n = 1; n <= 8; n += 2) {
      c.check(r.steps[n].lk_poly == lk(0, {{-e, 2}, {e, -2}}),
              "4.107 LK_" + std::to_string(n) + " = 2t^-e - 2t^e with e = 2*3^k");
      e *= 3;
    }
    c.check(r.cls == DerivedClass::Growth && r.ratio == 3 && r.period == 2,
            "4.107 classification");
  }
  c.finish();
}

void criterion2() {
  Criterion c(2, "5.2012 based matrix matches the reference up to the calibrated convention");
  const GaussDiagram& d = fix("5.2012");
  for (int v : d.chords()) c.check(ip_walk(d, v) == 0, "ip(v) = 0");
  c.check(is_almost_classical(d), "almost classical");
  Mat ref{{0, 1, -1, -1, 1},
          {-1, 0, -1, 1, 1},
          {1, 1, 0, -1, -1},
          {1, -1, 1, 0, -1},
          {-1, -1, 1, 1, 0}};
  // search crossing permutations and a global sign
  auto vs = d.chords();
  Mat got(5, std::vector<ll>(5, 0));
  for (int i = 0; i < 5; ++i) {
    Walk ri = halves_lr(d, vs[i]).second;
    for (int j = 0; j < 5; ++j) got[i][j] = intersect(d, ri, halves_lr(d, vs[j]).second);
  }
  std::vector<int> perm{0, 1, 2, 3, 4};
  std::vector<int> best_perm;
  int best_sign = 0;
  do {
    for (int sgn : {1, -1}) {
      bool ok = true;
      for (int i = 0; i < 5 && ok; ++i)
        for (int j = 0; j < 5 && ok; ++j)
          if (got[perm[i]][perm[j]] != sgn * ref[i][j]) ok = false;
      if (ok && best_sign == 0) {
        best_perm = perm;
        best_sign = sgn;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  c.check(best_sign != 0, "matrix matches under some permutation and global sign");
  // the found convention must agree with the recorded calibration manifest
  std::ifstream in(data_path("calibration.json"));
  nlohmann::json manifest;
  in >> manifest;
  auto rec = manifest["based_matrix_5_2012"];
  if (best_sign != 0) {
    c.check((int)rec["global_sign"] == best_sign, "manifest global sign");
    std::vector<int> rec_perm = rec["permutation"].get<std::vector<int>>();
    for (int i = 0; i < 5; ++i)
      c.check(rec_perm[i] == best_perm[i] + 1, "manifest permutation entry");
  }
  c.finish();
}

void criterion3() {
  Criterion c(3, "intersection-formula round trips for gp and ip on every fixture");
  for (const std::string& name : knot_names()) {
    const GaussDiagram& d = fix(name);
    for (const Rule& rule : {rule_gp(), rule_ip()}) {
      std::vector<ll> delta = parity_cycle_of_rule(rule, d);
      for (int v : d.chords())
        c.check(parity_from_cycle(d, delta, rule.mod, v) == rule(d, v),
                name + " " + rule.name + ": p = p^{delta_p} at crossing " + std::to_string(v));
      SlotDecomp sd = quasi_index_of_cycle(d, delta, rule.mod);
      Chain back = cycle_of_quasiindex(d, sd.pi, sd.rho, false, rule.mod);
      for (int a = 0; a < d.narcs(); ++a)
        c.check(pmod(back.arcs[a], rule.mod) == pmod(delta[a], rule.mod),
                name + " " + rule.name + ": delta = delta_{p^delta} at arc " + std::to_string(a));
    }
  }
  c.finish();
}

void criterion4() {
  Criterion c(4, "axiom suites over 1000-step random walks (gp, ip, derived <= 3, biquandle)");
  Biquandle b = make_b3();
  std::vector<ll> theta = theta_b3();
  unsigned seed = 42;
  for (const std::string& name : knot_names()) {
    const GaussDiagram& d = fix(name);
    for (const Rule& rule : {rule_gp(), rule_ip()}) {
      AxiomReport rep = verify_parity_axioms(rule, d, 1000, seed++, 10);
      c.check(rep.ok(), name + " " + rule.name + ": " +
                            (rep.ok() ? "" : rep.violations.front()));
    }
    for (int level = 1; level <= 3; ++level) {
      Rule rule = derived_rule(d, level);
      AxiomReport rep = verify_parity_axioms(rule, d, 1000, seed++, 10);
      c.check(rep.ok(), name + " " + rule.name + ": " +
                            (rep.ok() ? "" : rep.violations.front()));
    }
    AxiomReport rep = verify_remainder_transport(d, b, theta, kThetaMod3, 1000, seed++);
    c.check(rep.ok(),
            name + " remainder transport: " + (rep.ok() ? "" : rep.violations.front()));
  }
  c.finish();
}

void criterion5() {
  Criterion c(5, "calibration identities on fixtures and 200 random diagrams <= 8 chords");
  std::mt19937 rng(7);
  std::vector<GaussDiagram> pool;
  for (const std::string& name : knot_names()) pool.push_back(fix(name));
  for (int i = 0; i < 200; ++i) pool.push_back(random_link(rng, 2 + (int)(rng() % 7), 1));
  for (const GaussDiagram& d : pool) {
    Mat m = pairing_matrix(d);
    int n = (int)m.size();
    for (int i = 0; i < n; ++i) {
      c.check(m[i][i] == 0, "c . c = 0");
      for (int j = 0; j < n; ++j)
        if (m[i][j] != -m[j][i]) c.check(false, "antisymmetry");
    }
    c.check(m[n - 1][n - 1] == 0, "D . D = 0");
    for (int v : d.chords()) {
      c.check(ip_walk(d, v) == ip_chord(d, v), "D^r_v . D = ip (chord-linking formula)");
      c.check(pmod(ip_walk(d, v), 2) == gp_count(d, v), "gp = ip mod 2");
    }
  }
  c.finish();
}

void criterion6() {
  Criterion c(6, "biquandle suite (axioms, cocycle, failing index conditions, lambda, "
                 "monodromy, Boltzmann)");
  Biquandle b = make_b3();
  std::vector<ll> theta = theta_b3();
  c.check(biquandle_axiom_violations(b).empty(), "axioms");
  c.check(theta_is_cocycle(b, theta, kThetaMod3), "1-cocycle law");
  c.check(!index_condition_violations(b, theta, kThetaMod3).empty(),
          "index conditions must fail (quasi-index only)");
  auto ex = find_lambda_example(b, theta, kThetaMod3);
  c.check(ex.has_value() && ex->lambda != 0, "bounded search finds lambda(f) = 1 != 0");
  if (ex) c.check(ex->lambda == 1, "lambda value is 1");
  GaussDiagram circle({{}}, {});
  auto reach = colour_monodromy_search(circle, b, 2, 3);
  c.check(reach.count({2}) && reach.at({2}).count({3}) == 1,
          "colour monodromy realizes the (2 3) transposition");
  for (const std::string& name : knot_names()) {
    const GaussDiagram& d = fix(name);
    for (const Coloring& col : colourings(d, b)) {
      auto cyc = theta_cycle(d, col, theta, kThetaMod3);
      c.check(sigma_theta(d, cyc, kThetaMod3) ==
                  pmod(boltzmann_phi(d, col, b, theta, kThetaMod3), kThetaMod3),
              name + ": sigma_theta = Phi_{phi_theta}");
    }
  }
  c.finish();
}

void criterion7() {
  Criterion c(7, "long-knot suite");
  auto found = find_long_example({-1, 1, 1}, {-1, 1, 0});
  c.check(found.has_value(), "exhaustive search over <= 3 chord long codes");
  if (found) {
    const GaussDiagram& d = *found;
    auto order = long_chord_order(d);
    std::array<int, 3> want_o{-1, 1, 1};
    std::array<ll, 3> want_ip{-1, 1, 0};
    for (int i = 0; i < 3; ++i) {
      c.check(long_order(d, order[i]) == want_o[i], "orders (-1, 1, 1)");
      c.check(long_ip(d, order[i]) == want_ip[i], "ip (-1, 1, 0)");
    }
    std::map<int, ll> pi;
    for (int v : d.chords()) pi[v] = -1;
    Chain delta = long_cycle_of_quasiindex(d, pi, 0);
    for (int v : d.chords())
      c.check(long_parity_from_chain(d, delta, v) == long_ip(d, v),
              "constant pi = -1, rho = 0 reproduces ip as its parity");
  }
  c.finish();
}

void criterion8() {
  Criterion c(8, "link suite (linking number, zero lp cycle, relative parity identity)");
  const GaussDiagram& h = fix("hopf_v");
  ll lkv = 0;
  for (int v : h.chords())
    if (!h.is_self(v)) lkv += h.sign(v);
  c.check(lkv == 1, "mixed-crossing linking invariant = classical linking number 1");
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    GaussDiagram d = random_link(rng, 3 + (int)(rng() % 4), 2);
    std::vector<ll> l{(ll)(rng() % 5) - 2, (ll)(rng() % 5) - 2};
    for (ll x : link_parity_cycle(d, l))
      c.check(x == 0, "lp parity cycle is zero");
    c.check(eta_signature_violations(d) == 0, "eta signature identity");
    auto basis = normalized_cycles_basis(d);
    std::vector<ll> vec = random_cycle(rng, d, basis);
    for (int ci = 0; ci < d.ncomps(); ++ci)
      for (int cj = ci + 1; cj < d.ncomps(); ++cj) {
        if (mixed_of_pair(d, ci, cj).empty()) continue;
        auto [ok, values] = solve_anchor(d, vec, ci, cj);
        c.check(ok, "relative parity identity consistent on a random link");
      }
  }
  c.finish();
}

void criterion9() {
  Criterion c(9, "exclusions: full monodromy groups are replaced by bounded-search lower "
                 "bounds, and the existence question for irreducible odd knots is out of "
                 "scope at this problem size");
  c.finish();
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  if (g_failures) {
    std::cout << g_failures << " criterion(s) FAILED\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
