#include "kpar/parity.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace kpar {

Rule rule_gp() {
  return {"gp", 2, RuleKind::Parity,
          [](const GaussDiagram& d, int v) { return gp_count(d, v); }};
}

Rule rule_ip() {
  return {"ip", 0, RuleKind::Parity,
          [](const GaussDiagram& d, int v) { return ip_walk(d, v); }};
}

Rule rule_zero(ll mod) {
  return {"zero", mod, RuleKind::Parity, [](const GaussDiagram&, int) { return 0LL; }};
}

Rule rule_sgn() {
  return {"sgn", 0, RuleKind::Signed,
          [](const GaussDiagram& d, int v) { return (ll)d.sign(v); }};
}

ll tensor_mod(ll a, ll b) {
  if (a == 0) return b;
  if (b == 0) return a;
  return std::gcd(a, b);
}

static RuleKind tensor_kind(RuleKind a, RuleKind b) {
  // parities behave like indices under products
  bool sa = a == RuleKind::Signed, sb = b == RuleKind::Signed;
  if (sa && sb) return RuleKind::Index;
  if (sa || sb) return RuleKind::Signed;
  return RuleKind::Index;
}

Rule rule_sum(const Rule& a, const Rule& b) {
  if (a.kind != b.kind) throw std::invalid_argument("rule kinds differ");
  Rule r;
  r.name = a.name + "+" + b.name;
  r.mod = tensor_mod(a.mod, b.mod);
  r.kind = a.kind;
  r.eval = [a, b](const GaussDiagram& d, int v) { return a(d, v) + b(d, v); };
  return r;
}

Rule rule_tensor(const Rule& a, const Rule& b) {
  Rule r;
  r.name = a.name + "*" + b.name;
  r.mod = tensor_mod(a.mod, b.mod);
  r.kind = tensor_kind(a.kind, b.kind);
  r.eval = [a, b](const GaussDiagram& d, int v) { return a(d, v) * b(d, v); };
  return r;
}

Rule rule_sgn_times(const Rule& p) { return rule_tensor(rule_sgn(), p); }

Rule rule_abs(const Rule& p) {
  if (p.mod != 0) throw std::invalid_argument("|.| needs Z-valued input");
  Rule r;
  r.name = "|" + p.name + "|";
  r.mod = 0;
  r.kind = RuleKind::Index;
  r.eval = [p](const GaussDiagram& d, int v) {
    ll x = p.eval(d, v);
    return x < 0 ? -x : x;
  };
  return r;
}

Rule rule_compose(const std::string& name, std::function<ll(ll)> f, bool odd, ll out_mod,
                  const Rule& r) {
  Rule out;
  out.name = name;
  out.mod = out_mod;
  out.kind = odd ? r.kind : (r.kind == RuleKind::Signed ? RuleKind::Index : r.kind);
  out.eval = [f, r](const GaussDiagram& d, int v) { return f(r(d, v)); };
  return out;
}

// ------------------------------------------------------------- potentials

ll potential(const Rule& rule, const GaussDiagram& d, int a, int b, int designated,
             bool over_first, int sign_first) {
  auto [d2, rec] = b == kSelfArc ? r2_insert_self(d, a, over_first, sign_first)
                                 : r2_insert(d, a, b, over_first, sign_first);
  return rule(d2, rec.v_new[designated]);
}

std::pair<int, int> left_half_boundary_arcs(const GaussDiagram& d, int v) {
  int n = (int)d.seq().size();
  int iO = d.pos(v, 'O'), iU = d.pos(v, 'U');
  int start, end;
  if (d.sign(v) > 0) {
    start = iU;
    end = (iO - 1 + n) % n;
  } else {
    start = iO;
    end = (iU - 1 + n) % n;
  }
  return {end, start};
}

// ---------------------------------------------------------- parity cycles

std::vector<ll> parity_cycle_of_rule(const Rule& rule, const GaussDiagram& d) {
  int n = d.narcs();
  std::vector<ll> dvec(n);
  for (int a = 0; a < n; ++a) dvec[a] = potential(rule, d, a, kSelfArc);
  for (int v : d.chords()) {
    ll inc = dvec[d.arc_before(v, 'O')] + dvec[d.arc_before(v, 'U')];
    ll out = dvec[d.arc_after(v, 'O')] + dvec[d.arc_after(v, 'U')];
    if (pmod(inc - out, rule.mod) != 0)
      throw std::logic_error("cycle condition fails at chord " + std::to_string(v) +
                             ": rule '" + rule.name + "' is not a parity");
  }
  return dvec;
}

ll parity_from_cycle(const GaussDiagram& d, const std::vector<ll>& delta, ll mod, int v) {
  return pair_walk_arcvec(d, halves_lr(d, v).first, delta, mod);
}

ll signature_of_cycle(const GaussDiagram& d, const std::vector<ll>& delta, ll mod) {
  if (d.nchords() == 0) return 0;
  return pair_walk_arcvec(d, full_walk(d), delta, mod);
}

ll signature_of_quasiindex(const GaussDiagram& d, const std::map<int, ll>& pi, ll mod) {
  ll s = 0;
  for (const auto& [v, x] : pi) s -= x * ip_walk(d, v);
  return pmod(s, mod);
}

SlotDecomp quasi_index_of_cycle(const GaussDiagram& d, const std::vector<ll>& delta, ll mod) {
  SlotDecomp sd = slot_decompose(d, delta, mod);
  int n = (int)d.seq().size();
  for (int v : d.chords()) {
    int iO = d.pos(v, 'O'), iU = d.pos(v, 'U');
    int ui = (iU - 1 + n) % n, uo = iU, oi = (iO - 1 + n) % n, oo = iO;
    // the other side of the crossing must give the same difference
    ll alt = d.sign(v) > 0 ? delta[oo] - delta[oi] : delta[uo] - delta[ui];
    if (pmod(alt, mod) != sd.pi.at(v))
      throw std::logic_error("inconsistent slot differences: not a cycle");
  }
  return sd;
}

static Chain chain_axpy(Chain acc, ll k, const Chain& x) {
  if (k == 0) return acc;
  for (size_t a = 0; a < acc.arcs.size(); ++a) acc.arcs[a] += k * x.arcs[a];
  for (const auto& [c, kc] : x.chords) acc.chords[c] += k * kc;
  return acc;
}

Chain cycle_of_quasiindex(const GaussDiagram& d, const std::map<int, ll>& pi, ll rho,
                          bool signed_base, ll mod) {
  if (signed_base) {
    Chain c = zero_chain(d, mod);
    for (const auto& [v, x] : pi)
      c = chain_axpy(std::move(c), d.sign(v) * x, half_cycle(d, v, HalfKind::Minus));
    return c;
  }
  Decomp dec;
  dec.pi = pi;
  dec.rho.assign(d.ncomps(), rho);
  return recompose(d, dec, mod);
}

// ------------------------------------------------------------ loop probes

LoopValues loop_values(const Rule& rule, const GaussDiagram& d) {
  auto probe = [&](const char* lt) {
    auto [d2, rec] = r1_insert(d, 0, lt);
    return rule(d2, rec.v_new[0]);
  };
  LoopValues lv{probe("l+"), probe("l-"), probe("r+"), probe("r-"), 0, 0};
  ll m = rule.mod;
  if (rule.kind == RuleKind::Signed) {
    lv.circ = lv.l_plus;
    lv.bullet = lv.r_plus;
    if (pmod(lv.l_minus + lv.bullet, m) != 0 || pmod(lv.r_minus + lv.circ, m) != 0)
      throw std::logic_error("signed loop identities fail for rule " + rule.name);
  } else {
    lv.circ = lv.l_plus;
    lv.bullet = lv.l_minus;
    if (lv.l_minus != lv.r_plus || lv.l_plus != lv.r_minus)
      throw std::logic_error("loop identities fail for rule " + rule.name);
  }
  return lv;
}

// ------------------------------------------------- index -> parity

RuleValues parity_from_index(const GaussDiagram& d, const Rule& pi, IndexParityMode mode,
                             ll tau, const std::vector<ll>& mon) {
  auto chords = d.chords();
  std::map<int, ll> vals, ip;
  for (int v : chords) {
    vals[v] = pi(d, v);
    ip[v] = ip_walk(d, v);
  }
  LoopValues lv = loop_values(pi, d);
  RuleValues out;
  auto lhalf = [&](int v) { return halves_lr(d, v).first; };
  switch (mode) {
    case IndexParityMode::Reduced: {
      ll sig = 0;
      for (int v : chords)
        if (vals[v] != lv.circ) sig -= vals[v] * ip[v];
      out.mod = cyclic_quotient_mod(pi.mod, pmod(sig, pi.mod));
      for (int v : chords) {
        ll s = 0;
        for (int w : chords)
          if (vals[w] != lv.circ)
            s += d.sign(w) * vals[w] * intersect(d, lhalf(v), half_walk(d, w, '-'));
        out.values[v] = pmod(s, out.mod);
      }
      break;
    }
    case IndexParityMode::Quotient:
    case IndexParityMode::AlmostClassical: {
      if (mode == IndexParityMode::AlmostClassical && !is_almost_classical(d))
        throw std::invalid_argument("diagram is not almost classical");
      if (mode == IndexParityMode::Quotient) {
        ll sig = 0;
        for (int v : chords) sig -= vals[v] * ip[v];
        out.mod = cyclic_quotient_mod(pi.mod, pmod(sig, pi.mod));
        for (ll g : mon) out.mod = cyclic_quotient_mod(out.mod, pmod(g, out.mod));
      } else {
        out.mod = pi.mod;
      }
      for (int v : chords) {
        ll s = 0;
        for (int w : chords)
          s += vals[w] * intersect(d, lhalf(v), halves_lr(d, w).second);
        out.values[v] = pmod(s, out.mod);
      }
      break;
    }
    case IndexParityMode::Rotational: {
      ll w = writhe(d);
      if ((w + tau) % 2 != 0) throw std::invalid_argument("writhe + rotation number is odd");
      ll sig = 0;
      for (int v : chords) sig -= vals[v] * ip[v];
      out.mod = cyclic_quotient_mod(pi.mod, pmod(sig, pi.mod));
      ll half_wt = (w + tau) / 2;
      for (int v : chords) {
        ll s = half_wt * lv.circ * ip[v];
        for (int u : chords)
          s += d.sign(u) * vals[u] * intersect(d, lhalf(v), half_walk(d, u, '-'));
        out.values[v] = pmod(s, out.mod);
      }
      break;
    }
  }
  return out;
}

RuleValues flat_parity_from_index(const GaussDiagram& d, const Rule& pi, FlatParityMode mode) {
  if (!d.flat) throw std::invalid_argument("flat parity needs a flat diagram");
  auto chords = d.chords();
  std::map<int, ll> vals, ip;
  for (int v : chords) {
    vals[v] = pi(d, v);
    ip[v] = ip_walk(d, v);
  }
  LoopValues lv = loop_values(pi, d);
  // flat loops have a single index value
  if (lv.l_plus != lv.l_minus || lv.l_plus != lv.r_plus || lv.l_plus != lv.r_minus)
    throw std::logic_error("rule is not a flat index (loop values differ)");
  ll circ = lv.l_plus;
  ll sig = 0;
  for (int v : chords)
    if (vals[v] != circ) sig -= vals[v] * ip[v];
  RuleValues out;
  out.mod = cyclic_quotient_mod(pi.mod, pmod(sig, pi.mod));
  auto lhalf = [&](int v) { return halves_lr(d, v).first; };
  if (mode == FlatParityMode::Floor) {
    std::map<ll, ll> fibre;
    for (int v : chords)
      if (vals[v] != circ) fibre[vals[v]]++;
    ll floor_sum = 0;
    for (const auto& [x, cnt] : fibre) floor_sum += cnt / 2;
    for (int v : chords) {
      ll s = floor_sum * ip[v];
      for (int w : chords)
        if (vals[w] != circ)
          s += vals[w] * intersect(d, lhalf(v), halves_lr(d, w).second);
      out.values[v] = pmod(s, out.mod);
    }
  } else {
    if (out.mod == 0 || out.mod % 2 == 0)
      throw std::invalid_argument("half mode needs 2 invertible in the coefficient group");
    ll inv2 = (out.mod + 1) / 2;
    for (int v : chords) {
      ll s = 0;
      for (int w : chords)
        if (vals[w] != circ) {
          auto [lw, rw] = halves_lr(d, w);
          s += vals[w] * (intersect(d, lhalf(v), rw) - intersect(d, lhalf(v), lw));
        }
      out.values[v] = pmod(inv2 * s, out.mod);
    }
  }
  return out;
}

// --------------------------------------------------------------- long knots

int long_order(const GaussDiagram& d, int v) {
  if (!d.long_knot) throw std::invalid_argument("order is defined on long knots");
  auto la = half_arcs(d, v, d.sign(v) > 0 ? '+' : '-');
  int base = d.base_arc();
  // closed half = the one missing the base arc; right half closed means +1
  bool base_in_left = std::find(la.begin(), la.end(), base) != la.end();
  return base_in_left ? 1 : -1;
}

ll long_ip(const GaussDiagram& d, int v) { return ip_walk(d, v); }

ll long_parity_from_cycle(const GaussDiagram& d, const std::vector<ll>& delta, ll mod, int v) {
  int o = long_order(d, v);
  Walk wc = o > 0 ? halves_lr(d, v).second : halves_lr(d, v).first;
  return pmod(-o * (ll)pair_walk_arcvec(d, wc, delta, 0), mod);
}

Chain long_cycle_of_quasiindex(const GaussDiagram& d, const std::map<int, ll>& pi, ll rho,
                               ll mod) {
  Chain c = chain_axpy(zero_chain(d, mod), rho, full_chain(d, mod));
  for (const auto& [v, x] : pi)
    c = chain_axpy(std::move(c), long_order(d, v) * x, half_cycle(d, v, HalfKind::Closed));
  return c;
}

ll long_parity_from_chain(const GaussDiagram& d, const Chain& delta, int v) {
  int o = long_order(d, v);
  Walk wc = o > 0 ? halves_lr(d, v).second : halves_lr(d, v).first;
  return pmod(-o * pair_walk_chain(d, wc, delta), delta.mod);
}

std::vector<int> long_chord_order(const GaussDiagram& d) {
  std::vector<int> out;
  std::set<int> seen;
  for (const Endpoint& e : d.seq())
    if (seen.insert(e.chord).second) out.push_back(e.chord);
  return out;
}

std::optional<GaussDiagram> find_long_example(const std::array<int, 3>& orders,
                                              const std::array<ll, 3>& ips) {
  // all ways to pair 6 endpoint positions into 3 chords
  std::vector<std::vector<std::pair<int, int>>> prs;
  std::function<void(std::vector<int>, std::vector<std::pair<int, int>>&)> rec =
      [&](std::vector<int> items, std::vector<std::pair<int, int>>& acc) {
        if (items.empty()) {
          prs.push_back(acc);
          return;
        }
        int a = items[0];
        for (size_t i = 1; i < items.size(); ++i) {
          std::vector<int> rest(items.begin() + 1, items.end());
          rest.erase(rest.begin() + (i - 1));
          acc.push_back({a, items[i]});
          rec(rest, acc);
          acc.pop_back();
        }
      };
  std::vector<std::pair<int, int>> acc;
  rec({0, 1, 2, 3, 4, 5}, acc);
  for (const auto& pr : prs)
    for (int roles = 0; roles < 8; ++roles)
      for (int sgns = 0; sgns < 8; ++sgns) {
        std::vector<Endpoint> seq(6);
        std::map<int, int> signs;
        for (int k = 0; k < 3; ++k) {
          char r1 = roles & (1 << k) ? 'U' : 'O';
          char r2 = r1 == 'O' ? 'U' : 'O';
          seq[pr[k].first] = {k + 1, r1};
          seq[pr[k].second] = {k + 1, r2};
          signs[k + 1] = sgns & (1 << k) ? -1 : 1;
        }
        GaussDiagram d({seq}, signs, /*lng=*/true);
        auto lr = long_chord_order(d);
        bool ok = true;
        for (int k = 0; k < 3 && ok; ++k) ok = long_order(d, lr[k]) == orders[k];
        for (int k = 0; k < 3 && ok; ++k) ok = long_ip(d, lr[k]) == ips[k];
        if (ok) return d;
      }
  return std::nullopt;
}

// ------------------------------------------------------- linking invariants

std::pair<ll, ll> linking_invariant(const GaussDiagram& d, const Rule& r, LinkingMode mode) {
  LoopValues lv = loop_values(r, d);
  ll m = r.mod;
  auto term = [&](int v) {
    return r.kind == RuleKind::Signed ? r(d, v) : pmod(d.sign(v) * r(d, v), m);
  };
  switch (mode) {
    case LinkingMode::Plain: {
      if (lv.circ != 0 || lv.bullet != 0)
        throw std::invalid_argument("linking invariant needs an R1-reduced rule");
      ll s = 0;
      for (int v : d.chords()) s += term(v);
      return {pmod(s, m), m};
    }
    case LinkingMode::RingReduced: {
      std::set<ll> drop{lv.circ, lv.bullet, pmod(-lv.circ, m), pmod(-lv.bullet, m)};
      ll s = 0;
      for (int v : d.chords())
        if (!drop.count(r(d, v))) s += term(v);
      return {pmod(s, m), m};
    }
    case LinkingMode::QuotientReduced: {
      ll m2 = cyclic_quotient_mod(m, lv.circ);
      m2 = cyclic_quotient_mod(m2, pmod(lv.bullet, m2));
      ll s = 0;
      for (int v : d.chords()) s += term(v);
      return {pmod(s, m2), m2};
    }
  }
  throw std::logic_error("unreachable");
}

GroupRingElem odd_index_polynomial(const GaussDiagram& d, const Rule& r) {
  // parities and signed indices enter through the index sgn * r
  ll m = r.mod;
  std::map<ll, ll> coeff;
  for (int v : d.chords()) {
    ll idx = r.kind == RuleKind::Index ? r(d, v) : pmod(d.sign(v) * r(d, v), m);
    ll e = pmod(d.sign(v) * idx, m);
    if (e != 0) coeff[e] += d.sign(v);
  }
  for (auto it = coeff.begin(); it != coeff.end();)
    it = it->second == 0 ? coeff.erase(it) : std::next(it);
  return laurent(m, coeff);
}

std::pair<ll, ll> inner_product(const GaussDiagram& d, const Rule& p1, const Rule& p2) {
  ll m = tensor_mod(p1.mod, p2.mod);
  ll s = 0;
  for (int v : d.chords()) s += d.sign(v) * p1(d, v) * p2(d, v);
  return {pmod(s, m), m};
}

// ------------------------------------------------------------ verification

AxiomReport verify_parity_axioms(const Rule& rule, const GaussDiagram& d0, int steps,
                                 unsigned seed, int max_chords,
                                 const std::vector<std::string>& allowed) {
  AxiomReport rep;
  std::mt19937 rng(seed);
  GaussDiagram d = d0;
  ll m = rule.mod;
  auto note = [&](int step, const std::string& what) {
    if (rep.violations.size() < 40)
      rep.violations.push_back("step " + std::to_string(step) + ": " + what);
  };
  auto values = [&](const GaussDiagram& dd) {
    std::map<int, ll> out;
    for (int v : dd.chords()) out[v] = rule(dd, v);
    return out;
  };
  // reference invariants from the start diagram
  auto invariants = [&](const GaussDiagram& dd, const std::map<int, ll>& p) {
    ll sig = 0, lk = 0;
    for (const auto& [v, x] : p) {
      sig -= dd.sign(v) * x * ip_walk(dd, v);
      lk += x;
    }
    return std::tuple<ll, ll, GroupRingElem>{pmod(sig, m), pmod(lk, m),
                                             odd_index_polynomial(dd, rule)};
  };
  auto p0vals = values(d);
  auto [sig0, lk0, lkp0] = invariants(d, p0vals);
  for (int step = 0; step < steps; ++step) {
    auto p = values(d);
    // static axiom checks on the current diagram
    if (d.nchords() > 0) {
      for (const auto& [v, reading] : r1_removable(d))
        if (p[v] != 0) note(step, "P1: kink chord has nonzero parity");
      for (const auto& [c1, c2, i, j] : cancelable_pairs(d))
        if (pmod(p[c1] + p[c2], m) != 0) note(step, "P2/bigon: pair sum nonzero");
      for (const R3Site& site : r3_sites(d)) {
        bool ok = false;
        for (const auto& [eps, k] : r3_epsilon(d, site)) {
          ll s = 0;
          for (int t = 0; t < 3; ++t) s += eps[t] * p[site.chords[t]];
          if (pmod(s, m) == 0) ok = true;
        }
        if (!ok) note(step, "P3+/triangle: no incidence signs make the sum vanish");
      }
      auto [sig, lk, lkp] = invariants(d, p);
      if (sig != sig0) note(step, "sigma changed");
      if (lk != lk0) note(step, "lk changed");
      if (!(lkp.terms == lkp0.terms)) note(step, "LK changed");
    }
    auto avail = enumerate_moves(d, max_chords);
    if (!allowed.empty()) {
      std::vector<MoveSpec> kept;
      for (const MoveSpec& mv : avail)
        for (const std::string& cls : allowed)
          if (mv.op.rfind(cls, 0) == 0) {
            kept.push_back(mv);
            break;
          }
      avail = std::move(kept);
    }
    if (avail.empty()) break;
    const MoveSpec& mv = avail[rng() % avail.size()];
    auto [d2, rec] = apply_move(d, mv);
    auto p2 = values(d2);
    for (const auto& [vo, vn] : rec.cmap)
      if (p[vo] != p2[vn]) note(step, "P0: value changed across " + rec.kind);
    if (rec.kind == "R1+" && p2[rec.v_new[0]] != 0) note(step, "P1: new kink nonzero");
    if (rec.kind == "R2+" && pmod(p2[rec.v_new[0]] + p2[rec.v_new[1]], m) != 0)
      note(step, "P2: new pair sum nonzero");
    d = std::move(d2);
    rep.steps = step + 1;
  }
  return rep;
}

}  // namespace kpar
