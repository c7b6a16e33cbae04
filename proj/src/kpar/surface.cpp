#include "kpar/surface.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace kpar {

int rot_pos(int sign, End e) {
  if (sign > 0) {
    switch (e) {
      case OIN: return 0;
      case UIN: return 1;
      case OOUT: return 2;
      case UOUT: return 3;
    }
  } else {
    switch (e) {
      case OIN: return 0;
      case UOUT: return 1;
      case OOUT: return 2;
      case UIN: return 3;
    }
  }
  throw std::logic_error("bad end");
}

static Passage straight(const Endpoint& e) {
  return e.role == 'O' ? Passage{e.chord, OIN, OOUT} : Passage{e.chord, UIN, UOUT};
}

Walk full_walk(const GaussDiagram& d) { return comp_walk(d, 0); }

Walk comp_walk(const GaussDiagram& d, int ci) {
  Walk out;
  for (const Endpoint& e : d.comps[ci]) out.push_back(straight(e));
  return out;
}

Walk half_walk(const GaussDiagram& d, int v, char which) {
  int ci = d.comp_of(v, 'O');
  if (ci != d.comp_of(v, 'U')) throw std::logic_error("half of a mixed crossing");
  const auto& comp = d.comps[ci];
  int n = (int)comp.size();
  int i0, i1;
  Passage pv;
  if (which == '-') {
    i0 = d.where(v, 'O').second;
    i1 = d.where(v, 'U').second;
    pv = {v, UIN, OOUT};  // arrives at U, departs from O
  } else {
    i0 = d.where(v, 'U').second;
    i1 = d.where(v, 'O').second;
    pv = {v, OIN, UOUT};
  }
  Walk out{pv};
  for (int i = (i0 + 1) % n; i != i1; i = (i + 1) % n) out.push_back(straight(comp[i]));
  return out;
}

std::pair<Walk, Walk> halves_lr(const GaussDiagram& d, int v) {
  int s = d.sign(v);
  return {half_walk(d, v, s > 0 ? '+' : '-'), half_walk(d, v, s > 0 ? '-' : '+')};
}

std::vector<int> half_arcs(const GaussDiagram& d, int v, char which) {
  int ci = d.comp_of(v, 'O');
  const auto& comp = d.comps[ci];
  int n = (int)comp.size();
  int i0, i1;
  if (which == '-') {
    i0 = d.where(v, 'O').second;
    i1 = d.where(v, 'U').second;
  } else {
    i0 = d.where(v, 'U').second;
    i1 = d.where(v, 'O').second;
  }
  std::vector<int> out;
  for (int i = i0; i != i1; i = (i + 1) % n) out.push_back(d.arc_id(ci, i));
  return out;
}

std::vector<ll> half_arcvec(const GaussDiagram& d, int v, char which) {
  std::vector<ll> vec(d.narcs(), 0);
  for (int a : half_arcs(d, v, which)) vec[a] += 1;
  return vec;
}

std::vector<ll> right_arcvec(const GaussDiagram& d, int v) {
  return half_arcvec(d, v, d.sign(v) > 0 ? '-' : '+');
}

std::vector<ll> left_arcvec(const GaussDiagram& d, int v) {
  return half_arcvec(d, v, d.sign(v) > 0 ? '+' : '-');
}

// interleaving sign of chord a->b versus c->d on a CCW circle with integer
// positions mod 16 (rotation slots scaled by 4, perturbations +-1)
static int interleave_sign(int a, int b, int c, int dd) {
  auto inarc = [](int x, int s, int e) {
    return ((x - s) & 15) < ((e - s) & 15);
  };
  bool cin = inarc(c, a, b), din = inarc(dd, a, b);
  if (cin == din) return 0;
  return cin ? 1 : -1;
}

ll intersect(const GaussDiagram& d, const Walk& w1, const Walk& w2, int push) {
  std::map<int, std::vector<std::pair<End, End>>> byv1;
  for (const Passage& p : w1) byv1[p.v].push_back({p.in, p.out});
  ll total = 0;
  for (const Passage& p : w2) {
    auto it = byv1.find(p.v);
    if (it == byv1.end()) continue;
    int s = d.sign(p.v);
    int c = (4 * rot_pos(s, p.in) + push + 16) & 15;
    int e = (4 * rot_pos(s, p.out) - push + 16) & 15;
    for (const auto& [i1, o1] : it->second)
      total += interleave_sign(4 * rot_pos(s, i1), 4 * rot_pos(s, o1), c, e);
  }
  return total;
}

ll ip_walk(const GaussDiagram& d, int v) {
  Walk right = halves_lr(d, v).second;
  int ci = d.comp_of(v, 'O');
  return intersect(d, right, comp_walk(d, ci));
}

ll ip_chord(const GaussDiagram& d, int v) {
  const auto& s = d.seq();
  int n = (int)s.size();
  int iO = d.pos(v, 'O'), iU = d.pos(v, 'U');
  auto in_ou = [&](int i) {
    int rel = ((i - iO) % n + n) % n;
    int len = ((iU - iO) % n + n) % n;
    return 0 < rel && rel < len;
  };
  ll total = 0;
  for (int w : d.chords()) {
    if (w == v) continue;
    bool a = in_ou(d.pos(w, 'O')), b = in_ou(d.pos(w, 'U'));
    if (a == b) continue;
    total += (a ? 1 : -1) * d.sign(w);
  }
  // the direction of the O->U half relative to D^r_v carries sgn(v)
  return total * d.sign(v);
}

ll gp_count(const GaussDiagram& d, int v) {
  return ((ll)half_arcs(d, v, '+').size() - 1) % 2 == 0 ? 0 : 1;
}

ll writhe(const GaussDiagram& d) {
  ll w = 0;
  for (const auto& [c, s] : d.signs) w += s;
  return w;
}

Mat pairing_matrix(const GaussDiagram& d) {
  std::vector<Walk> basis;
  for (int v : d.chords())
    if (d.is_self(v)) basis.push_back(halves_lr(d, v).second);
  Walk full;
  for (int ci = 0; ci < d.ncomps(); ++ci) {
    Walk w = comp_walk(d, ci);
    full.insert(full.end(), w.begin(), w.end());
  }
  basis.push_back(full);
  int n = (int)basis.size();
  Mat out(n, std::vector<ll>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = intersect(d, basis[i], basis[j]);
  return out;
}

// ---------------------------------------------------------------- faces

namespace {

struct FaceCtx {
  const GaussDiagram& d;
  // tail of forward arc a / head data
  std::map<std::pair<int, End>, std::pair<int, ll>> leave;  // (chord, end) -> directed arc

  explicit FaceCtx(const GaussDiagram& dd) : d(dd) {
    for (int a = 0; a < d.narcs(); ++a)
      for (ll dr : {1LL, -1LL}) leave[start_of(a, dr)] = {a, dr};
  }
  std::pair<int, End> end_of(int a, ll dr) const {
    auto [ci, i] = d.arc_loc(a);
    int n = d.comp_len(ci);
    int j = dr > 0 ? (i + 1) % n : i;
    const Endpoint& e = d.comps[ci][j];
    End en;
    if (dr > 0)
      en = e.role == 'O' ? OIN : UIN;
    else
      en = e.role == 'O' ? OOUT : UOUT;
    return {e.chord, en};
  }
  std::pair<int, End> start_of(int a, ll dr) const {
    auto [ci, i] = d.arc_loc(a);
    int n = d.comp_len(ci);
    int j = dr > 0 ? i : (i + 1) % n;
    const Endpoint& e = d.comps[ci][j];
    End en;
    if (dr > 0)
      en = e.role == 'O' ? OOUT : UOUT;
    else
      en = e.role == 'O' ? OIN : UIN;
    return {e.chord, en};
  }
  std::pair<int, ll> next_edge(int a, ll dr) const {
    auto [c, e] = end_of(a, dr);
    int p = rot_pos(d.sign(c), e);
    for (int step = 0; step < 4; ++step) {
      int q = (p + 1) % 4;
      for (End name : {OIN, UIN, OOUT, UOUT}) {
        if (rot_pos(d.sign(c), name) != q) continue;
        auto it = leave.find({c, name});
        if (it != leave.end()) return it->second;
      }
      p = q;
    }
    throw std::logic_error("face tracing stuck");
  }
};

}  // namespace

std::vector<std::vector<std::pair<int, ll>>> faces(const GaussDiagram& d) {
  if (d.nchords() == 0) return {{}};
  FaceCtx ctx(d);
  std::set<std::pair<int, ll>> unused;
  for (int a = 0; a < d.narcs(); ++a)
    for (ll dr : {1LL, -1LL}) unused.insert({a, dr});
  std::vector<std::vector<std::pair<int, ll>>> out;
  while (!unused.empty()) {
    auto e0 = *unused.begin();
    std::vector<std::pair<int, ll>> face;
    auto e = e0;
    do {
      face.push_back(e);
      unused.erase(e);
      e = ctx.next_edge(e.first, e.second);
    } while (e != e0);
    out.push_back(std::move(face));
  }
  return out;
}

int genus(const GaussDiagram& d) {
  int n = d.nchords();
  if (n == 0) return 0;
  int v = n;
  int e = 0;
  for (int ci = 0; ci < d.ncomps(); ++ci) e += d.comp_len(ci);
  int f = (int)faces(d).size();
  int chi = v - e + f;
  if (chi % 2 != 0) throw std::logic_error("odd Euler characteristic: rotation system bug");
  return (2 - chi) / 2;
}

bool null_homologous(const GaussDiagram& d, const std::vector<ll>& arc_vec) {
  auto fs = faces(d);
  int n = d.narcs();
  Mat a(n, std::vector<ll>(fs.size(), 0));
  for (size_t j = 0; j < fs.size(); ++j)
    for (const auto& [arc, dr] : fs[j]) a[arc][j] += dr;
  return solvable_q(a, arc_vec);
}

// ---------------------------------------------------------------- chains

bool Chain::operator==(const Chain& o) const {
  return mod == o.mod && arcs == o.arcs && chords == o.chords;
}

Chain zero_chain(const GaussDiagram& d, ll mod) {
  Chain c;
  c.mod = mod;
  c.arcs.assign(d.narcs(), 0);
  return c;
}

Chain full_chain(const GaussDiagram& d, ll mod) {
  Chain c = zero_chain(d, mod);
  for (auto& x : c.arcs) x = pmod(1, mod);
  return c;
}

Chain half_cycle(const GaussDiagram& d, int v, HalfKind which) {
  char w;
  switch (which) {
    case HalfKind::Plus: w = '+'; break;
    case HalfKind::Minus: w = '-'; break;
    case HalfKind::Left: w = d.sign(v) > 0 ? '+' : '-'; break;
    case HalfKind::Right: w = d.sign(v) > 0 ? '-' : '+'; break;
    case HalfKind::Closed:
    case HalfKind::Open: {
      if (!d.long_knot) throw std::logic_error("closed/open halves need a long knot");
      int base = d.base_arc();
      auto la = half_arcs(d, v, d.sign(v) > 0 ? '+' : '-');
      bool base_in_left = std::find(la.begin(), la.end(), base) != la.end();
      bool want_closed = which == HalfKind::Closed;
      // closed half = the one not containing the base arc
      bool use_left = base_in_left ? !want_closed : want_closed;
      char lw = d.sign(v) > 0 ? '+' : '-';
      char rw = d.sign(v) > 0 ? '-' : '+';
      w = use_left ? lw : rw;
      break;
    }
    default: throw std::logic_error("bad half kind");
  }
  if (d.ncomps() > 1 && !d.is_self(v)) throw std::logic_error("half of a mixed crossing");
  Chain c = zero_chain(d, 0);
  for (int a : half_arcs(d, v, w)) c.arcs[a] += 1;
  c.chords[v] = 1;
  return c;
}

Decomp decompose(const GaussDiagram& d, const Chain& c) {
  Decomp out;
  std::vector<ll> left = c.arcs;
  for (const auto& [v, k] : c.chords) {
    if (k == 0) continue;
    if (!d.is_self(v)) throw std::logic_error("chord coefficient on a mixed crossing");
    out.pi[v] = k;
    auto rv = right_arcvec(d, v);
    for (int a = 0; a < d.narcs(); ++a) left[a] -= k * rv[a];
  }
  out.rho.assign(d.ncomps(), 0);
  for (int ci = 0; ci < d.ncomps(); ++ci) {
    int n = std::max(1, d.comp_len(ci));
    ll r = pmod(left[d.arc_id(ci, 0)], c.mod);
    for (int i = 1; i < n; ++i)
      if (pmod(left[d.arc_id(ci, i)], c.mod) != r)
        throw std::logic_error("decompose: leftover not constant (input is not a cycle)");
    out.rho[ci] = r;
  }
  return out;
}

Chain recompose(const GaussDiagram& d, const Decomp& dec, ll mod) {
  Chain c = zero_chain(d, mod);
  for (const auto& [v, k] : dec.pi) {
    auto rv = right_arcvec(d, v);
    for (int a = 0; a < d.narcs(); ++a) c.arcs[a] += k * rv[a];
    c.chords[v] = pmod(k, mod);
  }
  for (int ci = 0; ci < d.ncomps(); ++ci) {
    int n = std::max(1, d.comp_len(ci));
    for (int i = 0; i < n; ++i) c.arcs[d.arc_id(ci, i)] += dec.rho[ci];
  }
  for (auto& x : c.arcs) x = pmod(x, mod);
  for (auto it = c.chords.begin(); it != c.chords.end();) {
    if (it->second == 0)
      it = c.chords.erase(it);
    else
      ++it;
  }
  return c;
}

SlotDecomp slot_decompose(const GaussDiagram& d, const std::vector<ll>& vec, ll mod) {
  if (d.ncomps() != 1) throw std::logic_error("slot decomposition needs one component");
  int n = (int)d.seq().size();
  SlotDecomp out;
  for (int v : d.chords()) {
    int iO = d.pos(v, 'O'), iU = d.pos(v, 'U');
    int ui = (iU - 1 + n) % n, uo = iU, oi = (iO - 1 + n) % n, oo = iO;
    ll val = d.sign(v) > 0 ? vec[ui] - vec[uo] : vec[oi] - vec[oo];
    out.pi[v] = pmod(val, mod);
  }
  std::vector<ll> rem = vec;
  for (int v : d.chords()) {
    auto rv = right_arcvec(d, v);
    for (int a = 0; a < n; ++a) rem[a] -= out.pi[v] * rv[a];
  }
  ll r0 = pmod(rem[0], mod);
  for (int a = 1; a < n; ++a)
    if (pmod(rem[a], mod) != r0)
      throw std::logic_error("slot decomposition: remainder not constant (not a cycle)");
  out.rho = r0;
  return out;
}

ll pair_walk_arcvec(const GaussDiagram& d, const Walk& w, const std::vector<ll>& vec, ll mod) {
  if (d.nchords() == 0) return 0;
  SlotDecomp sd = slot_decompose(d, vec, mod);
  ll total = 0;
  for (const auto& [v, k] : sd.pi) {
    if (k == 0) continue;
    total += k * intersect(d, w, half_walk(d, v, d.sign(v) > 0 ? '-' : '+'));
  }
  if (sd.rho) total += sd.rho * intersect(d, w, full_walk(d));
  return pmod(total, mod);
}

ll pair_walk_chain(const GaussDiagram& d, const Walk& w, const Chain& c) {
  Decomp dec = decompose(d, c);
  ll total = 0;
  for (const auto& [v, k] : dec.pi) {
    if (k == 0) continue;
    total += k * intersect(d, w, half_walk(d, v, d.sign(v) > 0 ? '-' : '+'));
  }
  for (int ci = 0; ci < d.ncomps(); ++ci)
    if (dec.rho[ci]) total += dec.rho[ci] * intersect(d, w, comp_walk(d, ci));
  return pmod(total, c.mod);
}

ll intersect_chains(const GaussDiagram& d, const Chain& c1, const Chain& c2) {
  if (c1.mod != 0) throw std::logic_error("left chain of a pairing must be integral");
  Decomp dec = decompose(d, c1);
  ll total = 0;
  for (const auto& [v, k] : dec.pi) {
    if (k == 0) continue;
    total += k * pair_walk_chain(d, half_walk(d, v, d.sign(v) > 0 ? '-' : '+'), c2);
  }
  for (int ci = 0; ci < d.ncomps(); ++ci)
    if (dec.rho[ci]) total += dec.rho[ci] * pair_walk_chain(d, comp_walk(d, ci), c2);
  return pmod(total, c2.mod);
}

// ------------------------------------------------- link chain pairing

std::vector<Walk> chain_walks(const GaussDiagram& d, const std::vector<ll>& vec) {
  std::vector<ll> res = vec;
  int n = d.narcs();
  // arc a runs from its tail endpoint to the next endpoint along the
  // component; tail end = the OUT end of the tail endpoint's role, head
  // end = the IN end of the head endpoint's role
  std::vector<std::pair<int, End>> tails(n), heads(n);
  std::map<int, std::vector<std::pair<int, char>>> at_crossing;  // chord -> (arc, 't'/'h')
  for (int a = 0; a < n; ++a) {
    auto [ci, i] = d.arc_loc(a);
    int len = d.comp_len(ci);
    if (len == 0) continue;
    const Endpoint& t = d.comps[ci][i];
    const Endpoint& h = d.comps[ci][(i + 1) % len];
    tails[a] = {t.chord, t.role == 'O' ? OOUT : UOUT};
    heads[a] = {h.chord, h.role == 'O' ? OIN : UIN};
    at_crossing[t.chord].push_back({a, 't'});
    at_crossing[h.chord].push_back({a, 'h'});
  }
  std::vector<Walk> walks;
  while (true) {
    int a0 = -1;
    for (int a = 0; a < n; ++a)
      if (res[a]) { a0 = a; break; }
    if (a0 < 0) break;
    Walk passages;
    int a = a0;
    bool forward = res[a0] > 0;
    std::pair<int, bool> first{a0, forward};
    while (true) {
      int v;
      End e_in;
      if (forward) {
        res[a] -= 1;
        std::tie(v, e_in) = heads[a];
      } else {
        res[a] += 1;
        std::tie(v, e_in) = tails[a];
      }
      // choose exit; closing onto the first arc (already consumed at
      // departure) is always allowed once back at its departure crossing
      std::vector<std::tuple<int, bool, End>> exits;
      auto [fa, ffw] = first;
      int start_cross = ffw ? tails[fa].first : heads[fa].first;
      End start_end = ffw ? tails[fa].second : heads[fa].second;
      if (v == start_cross) exits.push_back({fa, ffw, start_end});
      for (const auto& [b, side] : at_crossing[v]) {
        if (side == 't' && res[b] > 0 && !(b == fa && ffw))
          exits.push_back({b, true, tails[b].second});
        if (side == 'h' && res[b] < 0 && !(b == fa && !ffw))
          exits.push_back({b, false, heads[b].second});
      }
      if (exits.empty()) throw std::logic_error("chain walk has no exit (not a cycle)");
      auto pick = exits[0];
      for (const auto& x : exits)
        if (std::get<0>(x) == fa && std::get<1>(x) == ffw) { pick = x; break; }
      auto [b, fw, e_out] = pick;
      passages.push_back({v, e_in, e_out});
      a = b;
      forward = fw;
      if (a == fa && forward == ffw) break;
    }
    walks.push_back(std::move(passages));
  }
  for (ll x : res)
    if (x) throw std::logic_error("chain walk left residual flow");
  return walks;
}

ll pair_walk_arcvec_link(const GaussDiagram& d, const Walk& w, const std::vector<ll>& vec) {
  ll total = 0;
  for (const Walk& piece : chain_walks(d, vec)) total += intersect(d, w, piece);
  return total;
}

bool is_almost_classical(const GaussDiagram& d) {
  if (!d.is_knot()) throw std::logic_error("is_almost_classical needs a closed knot");
  for (int v : d.chords())
    if (ip_walk(d, v) != 0) return false;
  return true;
}

}  // namespace kpar
