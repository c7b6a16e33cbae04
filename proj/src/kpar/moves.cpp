#include "kpar/moves.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace kpar {

static const std::vector<Endpoint>& seq_of(const GaussDiagram& d) {
  if (d.ncomps() != 1) throw std::logic_error("moves need a single component");
  return d.comps[0];
}

static GaussDiagram rebuild_like(const GaussDiagram& d, std::vector<Endpoint> seq,
                                 std::map<int, int> signs) {
  return GaussDiagram({std::move(seq)}, std::move(signs), d.long_knot, d.flat);
}

std::string loop_type(const std::string& pattern, int sign) {
  if (pattern == "OU") return sign > 0 ? "r+" : "l-";
  return sign > 0 ? "l+" : "r-";
}

std::pair<std::string, int> loop_spec(const std::string& ltype) {
  if (ltype == "r+") return {"OU", 1};
  if (ltype == "l-") return {"OU", -1};
  if (ltype == "l+") return {"UO", 1};
  if (ltype == "r-") return {"UO", -1};
  throw std::invalid_argument("bad loop type " + ltype);
}

int new_chord_id(const GaussDiagram& d) {
  int m = 0;
  for (const auto& [c, s] : d.signs) m = std::max(m, c);
  return m + 1;
}

std::pair<std::vector<Endpoint>, std::map<int, std::vector<int>>> insert_endpoints(
    const GaussDiagram& d, std::vector<Insert> inserts) {
  const auto& seq = seq_of(d);
  int n = (int)seq.size();
  std::map<int, std::vector<std::pair<int, Endpoint>>> by_arc;
  for (const Insert& in : inserts) by_arc[in.arc].push_back({in.rank, in.ep});
  for (auto& [a, v] : by_arc) std::sort(v.begin(), v.end(), [](auto& x, auto& y) {
    return x.first < y.first;
  });
  std::vector<Endpoint> seq2;
  std::map<int, std::vector<int>> pieces;
  if (n == 0) {
    for (const auto& [r, ep] : by_arc[0]) seq2.push_back(ep);
    // the bare circle's single arc splits into all the new arcs
    std::vector<int> all;
    for (int i = 0; i < (int)seq2.size(); ++i) all.push_back(i);
    if (all.empty()) all.push_back(0);
    pieces[0] = all;
    return {seq2, pieces};
  }
  int idx = 0;
  for (int i = 0; i < n; ++i) {
    seq2.push_back(seq[i]);
    pieces[i] = {idx++};
    auto it = by_arc.find(i);
    if (it != by_arc.end())
      for (const auto& [r, ep] : it->second) {
        seq2.push_back(ep);
        pieces[i].push_back(idx++);
      }
  }
  return {seq2, pieces};
}

static void fill_amap(MoveRecord& rec, const std::map<int, std::vector<int>>& pieces,
                      const std::set<int>& host_arcs, bool bare_circle) {
  rec.pieces = pieces;
  for (const auto& [i, ps] : pieces) {
    if (bare_circle)
      rec.amap[i] = {ps.front()};  // the outer piece keeps the circle's data
    else if (host_arcs.count(i))
      rec.amap[i] = {ps.front(), ps.back()};
    else
      rec.amap[i] = {ps.front()};
  }
}

std::pair<GaussDiagram, MoveRecord> r1_insert(const GaussDiagram& d, int arc,
                                              const std::string& ltype) {
  auto [pattern, sign] = loop_spec(ltype);
  int v = new_chord_id(d);
  auto [seq2, pieces] = insert_endpoints(
      d, {{arc, 0, {v, pattern[0]}}, {arc, 1, {v, pattern[1]}}});
  auto signs2 = d.signs;
  signs2[v] = sign;
  GaussDiagram d2 = rebuild_like(d, std::move(seq2), std::move(signs2));
  MoveRecord rec;
  rec.kind = "R1+";
  rec.loop_type = ltype;
  rec.v_new = {v};
  for (const auto& [c, s] : d.signs) rec.cmap[c] = c;
  fill_amap(rec, pieces, {arc}, seq_of(d).empty());
  rec.k = ltype[0] == 'l' ? 1 : 0;
  return {std::move(d2), std::move(rec)};
}

std::vector<std::pair<int, int>> r1_removable(const GaussDiagram& d) {
  const auto& seq = seq_of(d);
  int n = (int)seq.size();
  std::vector<std::pair<int, int>> out;
  for (int v : d.chords()) {
    int i = d.pos(v, 'O'), j = d.pos(v, 'U');
    if ((i + 1) % n == j) out.push_back({v, 0});
    if ((j + 1) % n == i) out.push_back({v, 1});
  }
  return out;
}

std::pair<GaussDiagram, MoveRecord> r1_delete(const GaussDiagram& d, int v, int reading) {
  const auto& seq = seq_of(d);
  int n = (int)seq.size();
  int i = d.pos(v, 'O'), j = d.pos(v, 'U');
  int first;
  std::string pat;
  bool ou_ok = (i + 1) % n == j, uo_ok = (j + 1) % n == i;
  if (reading == 0 || (reading == -1 && ou_ok)) {
    if (!ou_ok) throw std::invalid_argument("O->U gap is not a loop");
    first = i;
    pat = "OU";
  } else if (reading == 1 || (reading == -1 && uo_ok)) {
    if (!uo_ok) throw std::invalid_argument("U->O gap is not a loop");
    first = j;
    pat = "UO";
  } else {
    throw std::invalid_argument("chord is not removable by R1");
  }
  std::string ltype = loop_type(pat, d.sign(v));
  std::vector<Endpoint> seq2;
  for (const Endpoint& e : seq)
    if (e.chord != v) seq2.push_back(e);
  auto signs2 = d.signs;
  signs2.erase(v);
  GaussDiagram d2 = rebuild_like(d, std::move(seq2), std::move(signs2));
  MoveRecord rec;
  rec.kind = "R1-";
  rec.loop_type = ltype;
  rec.v_old = {v};
  for (const auto& [c, s] : d2.signs) rec.cmap[c] = c;
  rec.k = ltype[0] == 'l' ? 1 : 0;
  rec.loop_arc = first;
  return {std::move(d2), std::move(rec)};
}

std::pair<GaussDiagram, MoveRecord> r2_insert(const GaussDiagram& d, int arc_a, int arc_b,
                                              bool over_first, int sign_first) {
  if (arc_a == arc_b) throw std::invalid_argument("R2 needs two distinct arcs");
  int v1 = new_chord_id(d), v2 = v1 + 1;
  char ra = over_first ? 'O' : 'U';
  char rb = over_first ? 'U' : 'O';
  auto [seq2, pieces] = insert_endpoints(d, {{arc_a, 0, {v1, ra}},
                                             {arc_a, 1, {v2, ra}},
                                             {arc_b, 0, {v2, rb}},
                                             {arc_b, 1, {v1, rb}}});
  auto signs2 = d.signs;
  signs2[v1] = sign_first;
  signs2[v2] = -sign_first;
  GaussDiagram d2 = rebuild_like(d, std::move(seq2), std::move(signs2));
  MoveRecord rec;
  rec.kind = "R2+";
  rec.v_new = {v1, v2};
  for (const auto& [c, s] : d.signs) rec.cmap[c] = c;
  fill_amap(rec, pieces, {arc_a, arc_b}, false);
  return {std::move(d2), std::move(rec)};
}

std::pair<GaussDiagram, MoveRecord> r2_insert_self(const GaussDiagram& d, int arc,
                                                   bool over_first, int sign_first) {
  int v1 = new_chord_id(d), v2 = v1 + 1;
  char ra = over_first ? 'O' : 'U';
  char rb = over_first ? 'U' : 'O';
  // crossed pattern: the two pieces of the strand cross each other twice in
  // the same direction (v1 v2 v1 v2 along the arc)
  auto [seq2, pieces] = insert_endpoints(d, {{arc, 0, {v1, ra}},
                                             {arc, 1, {v2, ra}},
                                             {arc, 2, {v1, rb}},
                                             {arc, 3, {v2, rb}}});
  auto signs2 = d.signs;
  signs2[v1] = sign_first;
  signs2[v2] = -sign_first;
  GaussDiagram d2 = rebuild_like(d, std::move(seq2), std::move(signs2));
  MoveRecord rec;
  rec.kind = "R2+";
  rec.v_new = {v1, v2};
  for (const auto& [c, s] : d.signs) rec.cmap[c] = c;
  fill_amap(rec, pieces, {arc}, seq_of(d).empty());
  return {std::move(d2), std::move(rec)};
}

std::vector<std::array<int, 4>> cancelable_pairs(const GaussDiagram& d) {
  const auto& seq = seq_of(d);
  int n = (int)seq.size();
  std::vector<std::array<int, 4>> out;
  std::set<std::pair<int, int>> seen;
  for (int i = 0; i < n; ++i) {
    const Endpoint &a1 = seq[i], &a2 = seq[(i + 1) % n];
    if (a1.chord == a2.chord) continue;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const Endpoint &b1 = seq[j], &b2 = seq[(j + 1) % n];
      if (b1.chord != a2.chord || b2.chord != a1.chord) continue;
      // one strand over at both crossings, the other under; opposite signs
      if (a1.role == a2.role && b1.role == b2.role && a1.role != b1.role &&
          d.sign(a1.chord) == -d.sign(a2.chord)) {
        auto key = std::minmax(a1.chord, a2.chord);
        if (seen.insert(key).second) out.push_back({a1.chord, a2.chord, i, j});
      }
    }
  }
  return out;
}

std::pair<GaussDiagram, MoveRecord> r2_delete(const GaussDiagram& d, int v1, int v2) {
  for (const auto& [c1, c2, i, j] : cancelable_pairs(d)) {
    if (!((c1 == v1 && c2 == v2) || (c1 == v2 && c2 == v1))) continue;
    std::vector<Endpoint> seq2;
    for (const Endpoint& e : seq_of(d))
      if (e.chord != v1 && e.chord != v2) seq2.push_back(e);
    auto signs2 = d.signs;
    signs2.erase(v1);
    signs2.erase(v2);
    GaussDiagram d2 = rebuild_like(d, std::move(seq2), std::move(signs2));
    MoveRecord rec;
    rec.kind = "R2-";
    rec.v_old = {c1, c2};
    for (const auto& [c, s] : d2.signs) rec.cmap[c] = c;
    return {std::move(d2), std::move(rec)};
  }
  throw std::invalid_argument("pair is not cancelable");
}

// ---------------------------------------------------------------- R3

std::vector<R3Site> r3_sites(const GaussDiagram& d) {
  const auto& seq = seq_of(d);
  int n = (int)seq.size();
  std::map<std::pair<int, int>, std::vector<int>> adj;
  for (int i = 0; i < n; ++i) {
    int c1 = seq[i].chord, c2 = seq[(i + 1) % n].chord;
    if (c1 != c2) adj[std::minmax(c1, c2)].push_back(i);
  }
  auto chords = d.chords();
  // cache the triangular faces once
  std::vector<std::set<int>> tris;
  for (const auto& f : faces(d)) {
    if (f.size() != 3) continue;
    std::set<int> arcs;
    for (const auto& [a, dr] : f) arcs.insert(a);
    tris.push_back(std::move(arcs));
  }
  std::vector<R3Site> sites;
  int m = (int)chords.size();
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c) {
        std::array<int, 3> t{chords[a], chords[b], chords[c]};
        std::array<std::pair<int, int>, 3> pairs{std::minmax(t[0], t[1]),
                                                 std::minmax(t[0], t[2]),
                                                 std::minmax(t[1], t[2])};
        if (!adj.count(pairs[0]) || !adj.count(pairs[1]) || !adj.count(pairs[2])) continue;
        for (int i1 : adj[pairs[0]])
          for (int i2 : adj[pairs[1]])
            for (int i3 : adj[pairs[2]]) {
              std::array<int, 3> ps{i1, i2, i3};
              std::map<int, int> cnt;
              std::set<int> positions;
              for (int p : ps) {
                cnt[seq[p].chord]++;
                cnt[seq[(p + 1) % n].chord]++;
                positions.insert(p);
                positions.insert((p + 1) % n);
              }
              bool ok = cnt.size() == 3 && positions.size() == 6;
              for (const auto& [cc, k] : cnt) ok = ok && k == 2;
              if (!ok) continue;
              if (!d.flat) {
                // one strand over at both its crossings, one under at both,
                // one mixed
                std::vector<std::string> kinds;
                for (int p : ps) {
                  std::string k{seq[p].role, seq[(p + 1) % n].role};
                  std::sort(k.begin(), k.end());
                  kinds.push_back(k);
                }
                std::sort(kinds.begin(), kinds.end());
                if (kinds != std::vector<std::string>{"OO", "OU", "UU"}) continue;
              }
              // the three short arcs must bound the disappearing triangle
              std::set<int> want(ps.begin(), ps.end());
              if (std::find(tris.begin(), tris.end(), want) == tris.end()) continue;
              sites.push_back({t, ps});
            }
      }
  return sites;
}

std::pair<GaussDiagram, MoveRecord> r3_apply(const GaussDiagram& d, const R3Site& site) {
  std::vector<Endpoint> seq2 = seq_of(d);
  int n = (int)seq2.size();
  for (int p : site.pos) std::swap(seq2[p], seq2[(p + 1) % n]);
  GaussDiagram d2 = rebuild_like(d, std::move(seq2), d.signs);
  MoveRecord rec;
  rec.kind = "R3";
  rec.tri = site.chords;
  rec.tri_pos = site.pos;
  for (const auto& [c, s] : d.signs) rec.cmap[c] = c;
  return {std::move(d2), std::move(rec)};
}

std::vector<std::pair<std::array<int, 3>, ll>> r3_epsilon(const GaussDiagram& d,
                                                          const R3Site& site) {
  int n = (int)seq_of(d).size();
  std::array<std::vector<ll>, 3> rv;
  for (int m = 0; m < 3; ++m) rv[m] = right_arcvec(d, site.chords[m]);
  std::vector<std::pair<std::array<int, 3>, ll>> sols;
  for (int mask = 0; mask < 8; ++mask) {
    std::array<int, 3> eps{mask & 1 ? -1 : 1, mask & 2 ? -1 : 1, mask & 4 ? -1 : 1};
    for (ll k = -2; k <= 2; ++k) {
      std::vector<ll> vec(n, 0);
      for (int i = 0; i < n; ++i) {
        for (int m = 0; m < 3; ++m) vec[i] += eps[m] * rv[m][i];
        vec[i] -= k;
      }
      if (null_homologous(d, vec)) sols.push_back({eps, k});
    }
  }
  return sols;
}

// -------------------------------------------------------- correspondences

std::vector<ll> transport_vec_insert(const GaussDiagram& d2, const MoveRecord& rec,
                                     const std::vector<ll>& vec) {
  std::vector<ll> out(d2.narcs(), 0);
  for (const auto& [old_arc, ps] : rec.pieces)
    for (int p : ps) out[p] = vec[old_arc];
  return out;
}

std::vector<std::pair<int, int>> matching_arcs(const GaussDiagram& d1, const GaussDiagram& d2) {
  const auto& s1 = seq_of(d1);
  const auto& s2 = seq_of(d2);
  int n1 = (int)s1.size(), n2 = (int)s2.size();
  std::map<std::pair<Endpoint, Endpoint>, int> pairs1;
  for (int i = 0; i < n1; ++i) pairs1[{s1[i], s1[(i + 1) % n1]}] = i;
  std::vector<std::pair<int, int>> out;
  for (int i2 = 0; i2 < n2; ++i2) {
    auto it = pairs1.find({s2[i2], s2[(i2 + 1) % n2]});
    if (it != pairs1.end()) out.push_back({it->second, i2});
  }
  return out;
}

ExtendResult extend_diagram(const GaussDiagram& d) {
  ExtendResult res;
  res.ext = d;
  int n = d.narcs();
  std::vector<int> cur(n);
  for (int i = 0; i < n; ++i) cur[i] = i;
  for (int a = 0; a < n; ++a) {
    auto [d2, rec] = r2_insert_self(res.ext, cur[a]);
    res.pairs.push_back({rec.v_new[0], rec.v_new[1]});
    for (int b = a + 1; b < n; ++b) cur[b] = rec.amap.at(cur[b])[0];
    res.ext = std::move(d2);
  }
  return res;
}

// ------------------------------------------------------------ enumeration

std::vector<MoveSpec> enumerate_moves(const GaussDiagram& d, int max_chords,
                                      bool with_self_r2) {
  std::vector<MoveSpec> out;
  int n = (int)seq_of(d).size();
  int narcs = d.narcs();
  if (d.nchords() < max_chords) {
    for (int arc = 0; arc < narcs; ++arc)
      for (const char* lt : {"l+", "l-", "r+", "r-"}) {
        MoveSpec m;
        m.op = "r1+";
        m.arc = arc;
        m.ltype = lt;
        out.push_back(m);
      }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        for (bool of : {true, false})
          for (int sf : {1, -1}) {
            MoveSpec m;
            m.op = "r2+";
            m.arc = a;
            m.arc2 = b;
            m.over_first = of;
            m.sign_first = sf;
            out.push_back(m);
          }
      }
    if (with_self_r2)
      for (int arc = 0; arc < narcs; ++arc)
        for (bool of : {true, false})
          for (int sf : {1, -1}) {
            MoveSpec m;
            m.op = "r2s+";
            m.arc = arc;
            m.over_first = of;
            m.sign_first = sf;
            out.push_back(m);
          }
  }
  for (const auto& [v, reading] : r1_removable(d)) {
    MoveSpec m;
    m.op = "r1-";
    m.v1 = v;
    m.reading = reading;
    out.push_back(m);
  }
  for (const auto& [c1, c2, i, j] : cancelable_pairs(d)) {
    MoveSpec m;
    m.op = "r2-";
    m.v1 = c1;
    m.v2 = c2;
    out.push_back(m);
  }
  for (const R3Site& s : r3_sites(d)) {
    MoveSpec m;
    m.op = "r3";
    m.site = s;
    out.push_back(m);
  }
  return out;
}

std::pair<GaussDiagram, MoveRecord> apply_move(const GaussDiagram& d, const MoveSpec& mv) {
  if (mv.op == "r1+") return r1_insert(d, mv.arc, mv.ltype);
  if (mv.op == "r1-") return r1_delete(d, mv.v1, mv.reading);
  if (mv.op == "r2+") return r2_insert(d, mv.arc, mv.arc2, mv.over_first, mv.sign_first);
  if (mv.op == "r2s+") return r2_insert_self(d, mv.arc, mv.over_first, mv.sign_first);
  if (mv.op == "r2-") return r2_delete(d, mv.v1, mv.v2);
  if (mv.op == "r3") return r3_apply(d, mv.site);
  throw std::invalid_argument("unknown move op " + mv.op);
}

}  // namespace kpar
