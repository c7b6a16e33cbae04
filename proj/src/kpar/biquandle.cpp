#include "kpar/biquandle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <random>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace kpar {

namespace {

std::string fmt(const char* what, int x, int y, int z = 0, bool triple = false) {
  std::ostringstream os;
  os << what << " at (" << x << ", " << y;
  if (triple) os << ", " << z;
  os << ")";
  return os.str();
}

}  // namespace

std::vector<std::string> biquandle_axiom_violations(const Biquandle& b) {
  std::vector<std::string> out;
  int m = b.m;
  for (int x = 1; x <= m; ++x)
    if (b.c(x, x) != b.s(x, x)) out.push_back(fmt("diagonal law", x, x));
  // bijectivity of y -> x o y for fixed-x pairs, x -> x * y, and S
  auto check_bij = [&](const char* name, auto map) {
    std::set<std::pair<int, int>> imgs;
    for (int x = 1; x <= m; ++x)
      for (int y = 1; y <= m; ++y) imgs.insert(map(x, y));
    if ((int)imgs.size() != m * m) out.push_back(std::string(name) + " not bijective");
  };
  check_bij("(x,y) -> (y, x o y)", [&](int x, int y) { return std::pair{y, b.c(x, y)}; });
  check_bij("(x,y) -> (x, y * x)", [&](int x, int y) { return std::pair{x, b.s(y, x)}; });
  check_bij("S(x,y) = (x o y, y * x)",
            [&](int x, int y) { return std::pair{b.c(x, y), b.s(y, x)}; });
  for (int x = 1; x <= m; ++x)
    for (int y = 1; y <= m; ++y)
      for (int z = 1; z <= m; ++z) {
        if (b.c(b.c(x, y), b.c(z, y)) != b.c(b.c(x, z), b.s(y, z)))
          out.push_back(fmt("exchange law (o,o)", x, y, z, true));
        if (b.s(b.c(x, y), b.c(z, y)) != b.c(b.s(x, z), b.s(y, z)))
          out.push_back(fmt("exchange law (*,o)", x, y, z, true));
        if (b.s(b.s(x, y), b.s(z, y)) != b.s(b.s(x, z), b.c(y, z)))
          out.push_back(fmt("exchange law (*,*)", x, y, z, true));
      }
  return out;
}

Biquandle make_b3() {
  Biquandle b;
  b.m = 3;
  b.circ = {{1, 1, 1}, {3, 3, 3}, {2, 2, 2}};
  b.star = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
  return b;
}

std::vector<ll> theta_b3() { return {0, 1, 2}; }

Biquandle load_biquandle(const std::string& path, std::vector<ll>* theta) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open biquandle file: " + path);
  Biquandle b;
  if (!(in >> b.m) || b.m <= 0) throw std::runtime_error("bad biquandle size");
  auto read_table = [&](std::vector<std::vector<int>>& t) {
    t.assign(b.m, std::vector<int>(b.m, 0));
    for (auto& row : t)
      for (int& x : row) {
        if (!(in >> x) || x < 1 || x > b.m) throw std::runtime_error("bad table entry");
      }
  };
  read_table(b.circ);
  read_table(b.star);
  if (theta) {
    theta->assign(b.m, 0);
    for (ll& x : *theta)
      if (!(in >> x)) throw std::runtime_error("missing theta values");
  }
  return b;
}

bool theta_is_cocycle(const Biquandle& b, const std::vector<ll>& theta, ll mod) {
  for (int x = 1; x <= b.m; ++x)
    for (int y = 1; y <= b.m; ++y) {
      ll lhs = theta[x - 1] - theta[b.c(x, y) - 1];
      ll rhs = theta[y - 1] - theta[b.s(y, x) - 1];
      if (pmod(lhs - rhs, mod) != 0) return false;
    }
  return true;
}

std::vector<Coloring> colourings(const GaussDiagram& d, const Biquandle& b) {
  if (!d.is_knot() && !(d.ncomps() == 1 && d.long_knot))
    throw std::invalid_argument("colourings: single-component diagram required");
  int N = (int)d.comps[0].size();
  if (N == 0) {
    std::vector<Coloring> out;
    for (int x = 1; x <= b.m; ++x) out.push_back({x});
    return out;
  }
  struct Con {
    int ui, oi, uo, oo, sign, last;
  };
  std::vector<Con> cons;
  for (int v : d.chords()) {
    int iO = d.pos(v, 'O'), iU = d.pos(v, 'U');
    Con c{(iU - 1 + N) % N, (iO - 1 + N) % N, iU, iO, d.sign(v), 0};
    c.last = std::max({c.ui, c.oi, c.uo, c.oo});
    cons.push_back(c);
  }
  std::vector<std::vector<Con>> at(N);
  for (const Con& c : cons) at[c.last].push_back(c);
  std::vector<Coloring> out;
  Coloring col(N, 0);
  auto satisfied = [&](const Con& c) {
    if (c.sign > 0)
      return col[c.uo] == b.c(col[c.ui], col[c.oo]) && col[c.oi] == b.s(col[c.oo], col[c.ui]);
    return col[c.ui] == b.c(col[c.uo], col[c.oi]) && col[c.oo] == b.s(col[c.oi], col[c.uo]);
  };
  std::function<void(int)> dfs = [&](int i) {
    if (i == N) {
      out.push_back(col);
      return;
    }
    for (int x = 1; x <= b.m; ++x) {
      col[i] = x;
      bool ok = true;
      for (const Con& c : at[i])
        if (!satisfied(c)) {
          ok = false;
          break;
        }
      if (ok) dfs(i + 1);
    }
    col[i] = 0;
  };
  dfs(0);
  return out;
}

std::vector<ll> theta_cycle(const GaussDiagram& d, const Coloring& col,
                            const std::vector<ll>& theta, ll mod) {
  std::vector<ll> vec(d.narcs(), 0);
  for (int a = 0; a < d.narcs(); ++a) vec[a] = pmod(theta[col[a] - 1], mod);
  return vec;
}

ll sigma_theta(const GaussDiagram& d, const std::vector<ll>& cyc, ll mod) {
  if (d.nchords() == 0) return 0;
  return pmod(pair_walk_arcvec(d, full_walk(d), cyc, mod), mod);
}

namespace {

void check_cycle_condition(const GaussDiagram& d, const std::vector<ll>& vec, ll mod) {
  for (int v : d.chords()) {
    ll lhs = vec[d.arc_before(v, 'O')] + vec[d.arc_before(v, 'U')];
    ll rhs = vec[d.arc_after(v, 'O')] + vec[d.arc_after(v, 'U')];
    if (pmod(lhs - rhs, mod) != 0)
      throw std::runtime_error("induced chain violates the cycle condition");
  }
}

}  // namespace

Chain induced_cycle(const GaussDiagram& d, const Coloring& col, const Biquandle& b,
                    const std::vector<ll>& theta, ll mod, InducedMode mode, int depth,
                    int max_chords) {
  std::vector<Coloring> cols;
  switch (mode) {
    case InducedMode::Single:
      cols = {col};
      break;
    case InducedMode::OrbitSum: {
      auto mon = colour_monodromy_search(d, b, depth, max_chords);
      std::set<Coloring> orbit{col};
      for (const Coloring& c2 : mon[col]) orbit.insert(c2);
      cols.assign(orbit.begin(), orbit.end());
      break;
    }
    case InducedMode::FullSum:
      cols = colourings(d, b);
      break;
  }
  Chain out = zero_chain(d, mod);
  for (const Coloring& c : cols) {
    std::vector<ll> vec = theta_cycle(d, c, theta, mod);
    for (int a = 0; a < d.narcs(); ++a) out.arcs[a] = pmod(out.arcs[a] + vec[a], mod);
  }
  check_cycle_condition(d, out.arcs, mod);
  return out;
}

Chain normalize_cycle(const GaussDiagram& d, const Chain& chain) {
  if (!chain.chords.empty())
    throw std::invalid_argument("normalize_cycle expects a pure-arc chain");
  ll sigma = sigma_theta(d, chain.arcs, chain.mod);
  ll mod2 = cyclic_quotient_mod(chain.mod, sigma);
  Chain out = chain;
  out.mod = mod2;
  for (ll& x : out.arcs) x = pmod(x, mod2);
  return out;
}

ll phi_theta(const Biquandle& b, const std::vector<ll>& theta, ll mod, int x, ll i, int y,
             ll j) {
  return pmod((theta[y - 1] - theta[b.s(y, x) - 1]) * (j - i), mod);
}

bool two_cocycle_check(const Biquandle& b, const std::vector<ll>& theta, ll mod, int window) {
  // product biquandle B x B_ind: (x,i) o (y,j) = (x o y, i+1), likewise *
  auto phi = [&](int x, ll i, int y, ll j) { return phi_theta(b, theta, mod, x, i, y, j); };
  for (int x = 1; x <= b.m; ++x)
    for (ll i = 0; i < window; ++i)
      if (phi(x, i, x, i) != 0) return false;
  for (int x = 1; x <= b.m; ++x)
    for (int y = 1; y <= b.m; ++y)
      for (int z = 1; z <= b.m; ++z)
        for (ll i = 0; i < window; ++i)
          for (ll j = 0; j < window; ++j)
            for (ll k = 0; k < window; ++k) {
              ll lhs = phi(x, i, y, j) - phi(x, i, z, k) + phi(y, j, z, k);
              ll rhs = phi(b.c(x, z), i + 1, b.c(y, z), j + 1) -
                       phi(b.c(x, y), i + 1, b.s(z, y), k + 1) +
                       phi(b.s(y, x), j + 1, b.s(z, x), k + 1);
              if (pmod(lhs - rhs, mod) != 0) return false;
            }
  return true;
}

ll boltzmann_phi(const GaussDiagram& d, const Coloring& col, const Biquandle& b,
                 const std::vector<ll>& theta, ll mod, int base_arc) {
  int N = (int)d.comps[0].size();
  if (N == 0) return 0;
  // B_ind component: passage count since the start of base_arc
  std::vector<ll> idx(N, 0);
  int a = base_arc;
  for (int step = 0; step < N; ++step) {
    idx[a] = step;
    a = (a + 1) % N;
  }
  ll total = 0;
  for (int v : d.chords()) {
    int iO = d.pos(v, 'O'), iU = d.pos(v, 'U');
    int ui = (iU - 1 + N) % N, oi = (iO - 1 + N) % N, uo = iU, oo = iO;
    // calibrated slots: W+ reads (uo-arc, oi-arc); W- reads (ui-arc, oo-arc)
    int ax = d.sign(v) > 0 ? uo : ui;
    int ay = d.sign(v) > 0 ? oi : oo;
    int x = col[ax], y = col[ay];
    ll w = (theta[y - 1] - theta[b.s(y, x) - 1]) * (idx[ay] - idx[ax]);
    if (d.sign(v) < 0) w = -w;
    total += w;
  }
  return pmod(total, mod);
}

std::vector<std::string> index_condition_violations(const Biquandle& b,
                                                    const std::vector<ll>& theta, ll mod) {
  std::vector<std::string> out;
  auto t = [&](int x) { return theta[x - 1]; };
  for (int x = 1; x <= b.m; ++x)
    for (int y = 1; y <= b.m; ++y)
      for (int z = 1; z <= b.m; ++z) {
        if (pmod(t(x) - t(b.c(x, y)) - t(b.c(x, z)) + t(b.c(b.c(x, y), b.c(z, y))), mod))
          out.push_back(fmt("index condition (o,o)", x, y, z, true));
        if (pmod(t(x) - t(b.c(x, y)) - t(b.s(x, z)) + t(b.s(b.c(x, y), b.c(z, y))), mod))
          out.push_back(fmt("index condition (o,*)", x, y, z, true));
        if (pmod(t(x) - t(b.s(x, y)) - t(b.s(x, z)) + t(b.s(b.s(x, y), b.s(z, y))), mod))
          out.push_back(fmt("index condition (*,*)", x, y, z, true));
      }
  return out;
}

std::vector<Coloring> transport_colouring(const GaussDiagram& d, const Coloring& col,
                                          const GaussDiagram& d2, const MoveRecord& rec,
                                          const Biquandle& b) {
  std::vector<Coloring> cands = colourings(d2, b);
  std::vector<Coloring> out;
  if (rec.has_amap()) {
    // insertion: the outer split pieces keep the old arc colour
    for (const Coloring& c2 : cands) {
      bool ok = true;
      for (const auto& [a_old, ps] : rec.amap) {
        for (int a_new : ps)
          if (c2[a_new] != col[a_old]) {
            ok = false;
            break;
          }
        if (!ok) break;
      }
      if (ok) out.push_back(c2);
    }
    return out;
  }
  if (d2.nchords() == 0) {
    // deleted down to the bare circle: the circle takes the colour shared by
    // every arc outside the cancelled tangle
    int N = (int)d.comps[0].size();
    std::vector<int> outer;
    if (rec.kind == "R1-") {
      for (int a = 0; a < N; ++a)
        if (a != rec.loop_arc) outer.push_back(a);
    } else {
      std::set<int> ps;
      for (int v : rec.v_old) {
        ps.insert(d.pos(v, 'O'));
        ps.insert(d.pos(v, 'U'));
      }
      for (int a = 0; a < N; ++a)
        if (!(ps.count(a) && ps.count((a + 1) % N))) outer.push_back(a);
      if (outer.empty())
        for (int a = 0; a < N; ++a) outer.push_back(a);
    }
    for (const Coloring& c2 : cands) {
      bool ok = true;
      for (int a : outer)
        if (col[a] != c2[0]) {
          ok = false;
          break;
        }
      if (ok) out.push_back(c2);
    }
    return out;
  }
  // deletion or R3: match on arcs with identical bounding endpoint pairs
  std::vector<std::pair<int, int>> common = matching_arcs(d, d2);
  for (const Coloring& c2 : cands) {
    bool ok = true;
    for (const auto& [a1, a2] : common)
      if (c2[a2] != col[a1]) {
        ok = false;
        break;
      }
    if (ok) out.push_back(c2);
  }
  return out;
}

namespace {

std::vector<MoveSpec> monodromy_moves(const GaussDiagram& d, int max_chords) {
  std::vector<MoveSpec> out;
  int N = (int)d.comps[0].size();
  if (N == 0) {
    for (const char* lt : {"l+", "l-", "r+", "r-"}) {
      MoveSpec mv;
      mv.op = "r1+";
      mv.arc = 0;
      mv.ltype = lt;
      out.push_back(mv);
    }
    return out;
  }
  if (d.nchords() < max_chords) {
    for (int arc = 0; arc < N; ++arc) {
      for (const char* lt : {"l+", "l-", "r+", "r-"}) {
        MoveSpec mv;
        mv.op = "r1+";
        mv.arc = arc;
        mv.ltype = lt;
        out.push_back(mv);
      }
      for (bool of : {true, false})
        for (int sf : {1, -1}) {
          MoveSpec mv;
          mv.op = "r2s+";
          mv.arc = arc;
          mv.over_first = of;
          mv.sign_first = sf;
          out.push_back(mv);
        }
    }
    for (int a = 0; a < N; ++a)
      for (int bb = 0; bb < N; ++bb) {
        if (a == bb) continue;
        for (bool of : {true, false})
          for (int sf : {1, -1}) {
            MoveSpec mv;
            mv.op = "r2+";
            mv.arc = a;
            mv.arc2 = bb;
            mv.over_first = of;
            mv.sign_first = sf;
            out.push_back(mv);
          }
      }
  }
  std::set<int> seen_del;
  for (const auto& [v, reading] : r1_removable(d)) {
    if (seen_del.count(v)) continue;
    seen_del.insert(v);
    MoveSpec mv;
    mv.op = "r1-";
    mv.v1 = v;
    mv.reading = -1;
    out.push_back(mv);
  }
  for (const auto& [c1, c2, i, j] : cancelable_pairs(d)) {
    MoveSpec mv;
    mv.op = "r2-";
    mv.v1 = c1;
    mv.v2 = c2;
    out.push_back(mv);
  }
  for (const R3Site& site : r3_sites(d)) {
    MoveSpec mv;
    mv.op = "r3";
    mv.site = site;
    out.push_back(mv);
  }
  return out;
}

}  // namespace

std::map<Coloring, std::set<Coloring>> colour_monodromy_search(const GaussDiagram& d0,
                                                               const Biquandle& b, int depth,
                                                               int max_chords) {
  std::string code0 = emit_gauss_code(d0);
  std::map<Coloring, std::set<Coloring>> result;
  for (const Coloring& start : colourings(d0, b)) {
    result[start].insert(start);
    struct State {
      GaussDiagram d;
      Coloring col;
      int depth;
    };
    std::set<std::pair<std::string, Coloring>> seen{{code0, start}};
    std::deque<State> q;
    q.push_back({d0, start, 0});
    while (!q.empty()) {
      State st = std::move(q.front());
      q.pop_front();
      if (st.depth >= depth) continue;
      for (const MoveSpec& mv : monodromy_moves(st.d, max_chords)) {
        auto [d2, rec] = apply_move(st.d, mv);
        if (d2.nchords() > max_chords) continue;
        std::vector<Coloring> m2 = transport_colouring(st.d, st.col, d2, rec, b);
        if (m2.size() != 1) continue;
        std::pair<std::string, Coloring> key{emit_gauss_code(d2), m2[0]};
        if (seen.count(key)) continue;
        seen.insert(key);
        if (key.first == code0) result[start].insert(m2[0]);
        q.push_back({std::move(d2), std::move(m2[0]), st.depth + 1});
      }
    }
  }
  return result;
}

std::pair<std::map<int, ll>, ll> pi_rho(const GaussDiagram& d, const std::vector<ll>& vec,
                                        ll mod) {
  SlotDecomp sd = slot_decompose(d, vec, mod);
  return {sd.pi, sd.rho};
}

std::optional<LambdaExample> find_lambda_example(const Biquandle& b,
                                                 const std::vector<ll>& theta, ll mod,
                                                 int max_depth, int max_chords) {
  std::vector<GaussDiagram> layer{GaussDiagram{}};
  std::set<std::string> seen{emit_gauss_code(layer[0])};
  for (int depth = 0; depth < max_depth; ++depth) {
    std::vector<GaussDiagram> next;
    for (const GaussDiagram& d : layer) {
      int N = (int)d.comps[0].size();
      auto push = [&](GaussDiagram&& d2) {
        if (d2.nchords() > max_chords) return;
        std::string code = emit_gauss_code(d2);
        if (seen.count(code)) return;
        seen.insert(code);
        next.push_back(std::move(d2));
      };
      if (N == 0) {
        for (const char* lt : {"l+", "l-", "r+", "r-"})
          push(r1_insert(d, 0, lt).first);
        continue;
      }
      for (int arc = 0; arc < N; ++arc) {
        for (const char* lt : {"l+", "l-", "r+", "r-"}) push(r1_insert(d, arc, lt).first);
        for (bool of : {true, false})
          for (int sf : {1, -1}) push(r2_insert_self(d, arc, of, sf).first);
      }
      for (int a = 0; a < N; ++a)
        for (int bb = 0; bb < N; ++bb) {
          if (a == bb) continue;
          for (bool of : {true, false})
            for (int sf : {1, -1}) push(r2_insert(d, a, bb, of, sf).first);
        }
    }
    layer = std::move(next);
    for (const GaussDiagram& d : layer) {
      if (d.nchords() < 3) continue;
      std::vector<R3Site> sites = r3_sites(d);
      if (sites.empty()) continue;
      std::vector<Coloring> cols = colourings(d, b);
      for (const R3Site& site : sites) {
        auto sols = r3_epsilon(d, site);
        if (sols.empty()) continue;
        auto [d2, rec] = r3_apply(d, site);
        for (const Coloring& col : cols) {
          std::vector<ll> vec = theta_cycle(d, col, theta, mod);
          auto [pi0, rho0] = pi_rho(d, vec, mod);
          std::vector<Coloring> mts = transport_colouring(d, col, d2, rec, b);
          if (mts.size() != 1) continue;
          std::vector<ll> vec2 = theta_cycle(d2, mts[0], theta, mod);
          auto [pi1, rho1] = pi_rho(d2, vec2, mod);
          for (const auto& [eps, k] : sols) {
            std::set<ll> lams;
            for (int i = 0; i < 3; ++i)
              lams.insert(pmod((pi1[site.chords[i]] - pi0[site.chords[i]]) * eps[i], mod));
            if (lams.size() != 1) continue;
            ll lam = *lams.begin();
            if (lam != 0) {
              LambdaExample ex;
              ex.d = d;
              ex.col = col;
              ex.site = site;
              ex.lambda = lam;
              for (int i = 0; i < 3; ++i) {
                ex.pi_before[i] = pi0[site.chords[i]];
                ex.pi_after[i] = pi1[site.chords[i]];
              }
              return ex;
            }
            break;  // first coherent epsilon-solution decides lambda
          }
        }
      }
    }
  }
  return std::nullopt;
}

AxiomReport verify_remainder_transport(const GaussDiagram& d0, const Biquandle& b,
                                       const std::vector<ll>& theta, ll mod, int steps,
                                       unsigned seed) {
  AxiomReport rep;
  std::mt19937 rng(seed);
  GaussDiagram d = d0;
  std::vector<Coloring> cols = colourings(d, b);
  if (cols.empty()) {
    rep.violations.push_back("no colourings of the start diagram");
    return rep;
  }
  Coloring col = cols[rng() % cols.size()];
  auto note = [&](const std::string& msg) {
    if (rep.violations.size() < 40) rep.violations.push_back(msg);
  };
  for (int step = 0; step < steps; ++step) {
    rep.steps = step + 1;
    int N = (int)d.comps[0].size();
    std::vector<ll> vec = theta_cycle(d, col, theta, mod);
    auto [pi0, rho0] = pi_rho(d, vec, mod);
    std::vector<MoveSpec> avail;
    if (N < 14) {
      for (int arc = 0; arc < std::max(N, 1); ++arc)
        for (const char* lt : {"l+", "l-", "r+", "r-"}) {
          MoveSpec mv;
          mv.op = "r1+";
          mv.arc = arc;
          mv.ltype = lt;
          avail.push_back(mv);
        }
      for (int a = 0; a < N; ++a)
        for (int bb = 0; bb < N; ++bb) {
          if (a == bb) continue;
          MoveSpec mv;
          mv.op = "r2+";
          mv.arc = a;
          mv.arc2 = bb;
          mv.over_first = (rng() & 1) != 0;
          mv.sign_first = (rng() & 1) ? 1 : -1;
          avail.push_back(mv);
        }
    }
    std::set<int> offered;
    for (const auto& [v, reading] : r1_removable(d)) {
      if (offered.count(v)) continue;
      offered.insert(v);
      MoveSpec mv;
      mv.op = "r1-";
      mv.v1 = v;
      mv.reading = -1;
      avail.push_back(mv);
    }
    for (const auto& [c1, c2, i, j] : cancelable_pairs(d)) {
      MoveSpec mv;
      mv.op = "r2-";
      mv.v1 = c1;
      mv.v2 = c2;
      avail.push_back(mv);
      if (pmod(pi0[c1] - pi0[c2], mod) != 0)
        note("Q2 violated on cancelable pair at step " + std::to_string(step));
    }
    for (const R3Site& site : r3_sites(d)) {
      MoveSpec mv;
      mv.op = "r3";
      mv.site = site;
      avail.push_back(mv);
    }
    if (avail.empty()) break;
    const MoveSpec& mv = avail[rng() % avail.size()];
    auto [d2, rec] = apply_move(d, mv);
    std::vector<Coloring> m2 = transport_colouring(d, col, d2, rec, b);
    if (m2.size() != 1) {
      note("colour transport not unique at step " + std::to_string(step) + " (" + mv.op +
           ", " + std::to_string(m2.size()) + " matches)");
      if (m2.empty()) break;
    }
    Coloring col2 = m2[0];
    std::vector<ll> vec2 = theta_cycle(d2, col2, theta, mod);
    auto [pi1, rho1] = pi_rho(d2, vec2, mod);
    for (int v : d2.chords()) {
      bool in_tri = mv.op == "r3" && (v == mv.site.chords[0] || v == mv.site.chords[1] ||
                                      v == mv.site.chords[2]);
      if (pi0.count(v) && !in_tri && pmod(pi1[v] - pi0[v], mod) != 0)
        note("Q0 violated at step " + std::to_string(step));
    }
    if (mv.op == "r1+") {
      if (rho1 != pmod(rho0 - pi1[rec.v_new[0]] * rec.k, mod))
        note("R1+ remainder transport failed at step " + std::to_string(step));
    } else if (mv.op == "r1-") {
      if (rho1 != pmod(rho0 + pi0[rec.v_old[0]] * rec.k, mod))
        note("R1- remainder transport failed at step " + std::to_string(step));
    } else if (mv.op == "r2+") {
      int v1 = rec.v_new[0], v2 = rec.v_new[1];
      if (pmod(pi1[v1] - pi1[v2], mod) != 0)
        note("R2+ pair quasi-indices differ at step " + std::to_string(step));
      if (rho1 != pmod(rho0 - pi1[v1], mod))
        note("R2+ remainder transport failed at step " + std::to_string(step));
    } else if (mv.op == "r2-") {
      if (rho1 != pmod(rho0 + pi0[mv.v1], mod))
        note("R2- remainder transport failed at step " + std::to_string(step));
    } else {
      bool ok = false;
      for (const auto& [eps, k] : r3_epsilon(d, mv.site)) {
        std::set<ll> lams;
        for (int i = 0; i < 3; ++i)
          lams.insert(pmod((pi1[mv.site.chords[i]] - pi0[mv.site.chords[i]]) * eps[i], mod));
        if (lams.size() == 1 && rho1 == pmod(rho0 - *lams.begin() * k, mod)) {
          ok = true;
          break;
        }
      }
      if (!ok) note("R3 remainder transport failed at step " + std::to_string(step));
    }
    d = std::move(d2);
    col = std::move(col2);
  }
  return rep;
}

}  // namespace kpar
