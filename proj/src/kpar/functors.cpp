#include "kpar/functors.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace kpar {

namespace {

ll sigma_of_rule(const Rule& pi, const GaussDiagram& d) {
  ll s = 0;
  for (int v : d.chords()) s -= pi(d, v) * ip_walk(d, v);
  return pmod(s, pi.mod);
}

}  // namespace

std::optional<std::pair<ll, ll>> r3_lambda_k(const Rule& pi, const GaussDiagram& d,
                                             const GaussDiagram& d2, const MoveRecord& rec) {
  R3Site site{rec.tri, rec.tri_pos};
  for (const auto& [eps, k] : r3_epsilon(d, site)) {
    std::set<ll> lams;
    for (int i = 0; i < 3; ++i)
      lams.insert(pmod((pi(d2, rec.tri[i]) - pi(d, rec.tri[i])) * eps[i], pi.mod));
    if (lams.size() == 1) return std::pair<ll, ll>{*lams.begin(), k};
  }
  return std::nullopt;
}

ll lambda_of_r3(const Rule& pi, const GaussDiagram& d, const GaussDiagram& d2,
                const MoveRecord& rec) {
  auto lk = r3_lambda_k(pi, d, d2, rec);
  if (!lk) throw std::runtime_error("no coherent epsilon-solution at the R3 site");
  return lk->first;
}

ll remainder_delta(const Rule& pi, const GaussDiagram& d, const GaussDiagram& d2,
                   const MoveRecord& rec) {
  if (rec.kind == "R1+") return pmod(-pi(d2, rec.v_new[0]) * rec.k, pi.mod);
  if (rec.kind == "R1-") return pmod(pi(d, rec.v_old[0]) * rec.k, pi.mod);
  if (rec.kind == "R2+") return pmod(-pi(d2, rec.v_new[0]), pi.mod);
  if (rec.kind == "R2-") return pmod(pi(d, rec.v_old[0]), pi.mod);
  if (rec.kind == "R3") {
    auto lk = r3_lambda_k(pi, d, d2, rec);
    if (!lk) throw std::runtime_error("no coherent epsilon-solution at the R3 site");
    return pmod(-lk->first * lk->second, pi.mod);
  }
  throw std::invalid_argument("unknown move record kind: " + rec.kind);
}

ll QuasiIndexFunctor::abar_mod(const GaussDiagram& d) const {
  return cyclic_quotient_mod(pi.mod, sigma_of_rule(pi, d));
}

QIValue QuasiIndexFunctor::eval(const GaussDiagram& d, int v) const {
  ll mod = abar_mod(d);
  ll x = 0;
  Walk lv = halves_lr(d, v).first;
  for (int w : d.chords()) x += pi(d, w) * intersect(d, lv, halves_lr(d, w).second);
  return {pmod(x, mod), ip_walk(d, v)};
}

QIValue QuasiIndexFunctor::transport(const GaussDiagram& d, const GaussDiagram& d2,
                                     const MoveRecord& rec, QIValue val) const {
  ll delta = remainder_delta(pi, d, d2, rec);
  return {pmod(val.x + delta * val.y, abar_mod(d2)), val.y};
}

QuasiIndexFunctor quasiindex_functor(const Rule& pi) { return {pi}; }

namespace {

std::vector<MoveSpec> walk_moves(const GaussDiagram& d, int max_chords) {
  std::vector<MoveSpec> out;
  int N = (int)d.comps[0].size();
  auto add = [&](MoveSpec mv) { out.push_back(std::move(mv)); };
  if (d.nchords() < max_chords) {
    for (int arc = 0; arc < std::max(N, 1); ++arc) {
      for (const char* lt : {"l+", "l-", "r+", "r-"}) {
        MoveSpec mv;
        mv.op = "r1+";
        mv.arc = arc;
        mv.ltype = lt;
        add(mv);
      }
      for (bool of : {true, false})
        for (int sf : {1, -1}) {
          MoveSpec mv;
          mv.op = "r2s+";
          mv.arc = arc;
          mv.over_first = of;
          mv.sign_first = sf;
          add(mv);
        }
    }
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) {
        if (a == b) continue;
        for (bool of : {true, false})
          for (int sf : {1, -1}) {
            MoveSpec mv;
            mv.op = "r2+";
            mv.arc = a;
            mv.arc2 = b;
            mv.over_first = of;
            mv.sign_first = sf;
            add(mv);
          }
      }
  }
  for (const auto& [v, reading] : r1_removable(d)) {
    MoveSpec mv;
    mv.op = "r1-";
    mv.v1 = v;
    mv.reading = reading;
    add(mv);
  }
  for (const auto& [c1, c2, i, j] : cancelable_pairs(d)) {
    MoveSpec mv;
    mv.op = "r2-";
    mv.v1 = c1;
    mv.v2 = c2;
    add(mv);
  }
  for (const R3Site& site : r3_sites(d)) {
    MoveSpec mv;
    mv.op = "r3";
    mv.site = site;
    add(mv);
  }
  return out;
}

}  // namespace

std::set<ll> monodromy_search(const Rule& pi, const GaussDiagram& d0, int depth,
                              int max_chords) {
  std::string code0 = emit_gauss_code(d0);
  std::set<ll> found{0};
  struct State {
    GaussDiagram d;
    ll delta;
    int depth;
  };
  std::set<std::pair<std::string, ll>> seen{{code0, 0}};
  std::deque<State> q;
  q.push_back({d0, 0, 0});
  while (!q.empty()) {
    State st = std::move(q.front());
    q.pop_front();
    if (st.depth >= depth) continue;
    for (const MoveSpec& mv : walk_moves(st.d, max_chords)) {
      auto [d2, rec] = apply_move(st.d, mv);
      if (d2.nchords() > max_chords) continue;
      ll delta2;
      try {
        delta2 = pmod(st.delta + remainder_delta(pi, st.d, d2, rec), pi.mod);
      } catch (const std::runtime_error&) {
        continue;
      }
      std::pair<std::string, ll> key{emit_gauss_code(d2), delta2};
      if (seen.count(key)) continue;
      seen.insert(key);
      if (key.first == code0) found.insert(delta2);
      q.push_back({std::move(d2), delta2, st.depth + 1});
    }
  }
  return found;
}

TribalSystem tribes_of_index(const Rule& pi) { return {"levels(" + pi.name + ")", pi}; }

std::vector<ll> TribalFunctor::tribes(const GaussDiagram& d) const {
  std::set<ll> labels;
  for (int v : d.chords()) labels.insert(sys.tribe_of(d, v));
  return {labels.begin(), labels.end()};
}

std::map<ll, ll> TribalFunctor::signature(const GaussDiagram& d) const {
  std::map<ll, ll> sig;
  for (int v : d.chords()) sig[sys.tribe_of(d, v)] -= ip_walk(d, v);
  return sig;
}

std::pair<AbGroup, Projection> TribalFunctor::group_of(const GaussDiagram& d) const {
  std::vector<ll> labels = tribes(d);
  AbGroup free = make_group((ll)labels.size(), {});
  std::vector<ll> coords(labels.size(), 0);
  std::map<ll, ll> sig = signature(d);
  for (size_t i = 0; i < labels.size(); ++i) coords[i] = sig.count(labels[i]) ? sig[labels[i]] : 0;
  return quotient_by_cyclic(free, make_elem(free, coords));
}

AbElem TribalFunctor::project(const GaussDiagram& d, const std::map<ll, ll>& x) const {
  std::vector<ll> labels = tribes(d);
  AbGroup free = make_group((ll)labels.size(), {});
  std::vector<ll> coords(labels.size(), 0);
  for (size_t i = 0; i < labels.size(); ++i) {
    auto it = x.find(labels[i]);
    if (it != x.end()) coords[i] = it->second;
  }
  for (const auto& [label, c] : x) {
    if (c != 0 && !std::binary_search(labels.begin(), labels.end(), label))
      throw std::invalid_argument("value uses a tribe absent from the diagram");
  }
  auto [g, proj] = group_of(d);
  return proj(make_elem(free, coords));
}

TribalValue TribalFunctor::eval(const GaussDiagram& d, int v) const {
  TribalValue val;
  Walk lv = halves_lr(d, v).first;
  for (int w : d.chords())
    val.x[sys.tribe_of(d, w)] += intersect(d, lv, halves_lr(d, w).second);
  val.y = -ip_walk(d, v);
  return val;
}

TribalValue TribalFunctor::transport(const GaussDiagram& d, const GaussDiagram& d2,
                                     const MoveRecord& rec, TribalValue val) const {
  TribalValue out = val;
  if (rec.kind == "R1+")
    out.x[sys.tribe_of(d2, rec.v_new[0])] += rec.k * val.y;
  else if (rec.kind == "R1-")
    out.x[sys.tribe_of(d, rec.v_old[0])] -= rec.k * val.y;
  else if (rec.kind == "R2+")
    out.x[sys.tribe_of(d2, rec.v_new[0])] += val.y;
  else if (rec.kind == "R2-")
    out.x[sys.tribe_of(d, rec.v_old[0])] -= val.y;
  else if (rec.kind != "R3")
    throw std::invalid_argument("unknown move record kind: " + rec.kind);
  return out;
}

TribalFunctor tribal_functor(const TribalSystem& sys) { return {sys}; }

ExtendedView extended_group_view(const GaussDiagram& d, const Rule& pi_rule, bool check_r3) {
  ExtendedView view;
  QuasiIndexFunctor fun = quasiindex_functor(pi_rule);
  ExtendResult er = extend_diagram(d);
  view.ext = er.ext;
  view.pairs = er.pairs;
  view.abar_mod = fun.abar_mod(er.ext);
  for (const auto& [v1, v2] : er.pairs) view.delta.push_back(fun.eval(er.ext, v1));
  auto note = [&](const std::string& msg) { view.violations.push_back(msg); };
  int N = d.narcs();
  auto dsum = [&](int a, int b) {
    return QIValue{pmod(view.delta[a].x + view.delta[b].x, view.abar_mod),
                   view.delta[a].y + view.delta[b].y};
  };
  // cycle condition at every crossing of d
  for (int v : d.chords()) {
    QIValue in = dsum(d.arc_before(v, 'O'), d.arc_before(v, 'U'));
    QIValue out = dsum(d.arc_after(v, 'O'), d.arc_after(v, 'U'));
    if (!(in == out)) note("cycle condition fails at crossing " + std::to_string(v));
  }
  // normalization: D . delta = 0 componentwise (x mod abar, y over Z)
  if (d.nchords() > 0) {
    std::vector<ll> xs(N), ys(N);
    for (int a = 0; a < N; ++a) {
      xs[a] = view.delta[a].x;
      ys[a] = view.delta[a].y;
    }
    Walk full = full_walk(d);
    if (pmod(pair_walk_arcvec(d, full, xs, view.abar_mod), view.abar_mod) != 0)
      note("normalization fails on the x component");
    if (pair_walk_arcvec(d, full, ys, 0) != 0) note("normalization fails on the y component");
  }
  // pi^P by the slot formula
  for (int v : d.chords()) {
    int a_in, a_out;
    if (d.sign(v) > 0) {
      a_in = d.arc_before(v, 'U');
      a_out = d.arc_after(v, 'U');
    } else {
      a_in = d.arc_before(v, 'O');
      a_out = d.arc_after(v, 'O');
    }
    view.pi[v] = QIValue{pmod(view.delta[a_in].x - view.delta[a_out].x, view.abar_mod),
                         view.delta[a_in].y - view.delta[a_out].y};
  }
  // (Q2): cancelable pairs carry equal pi^P
  for (const auto& [c1, c2, i, j] : cancelable_pairs(d))
    if (!(view.pi[c1] == view.pi[c2])) note("(Q2) fails on a cancelable pair");
  if (!check_r3) return view;
  // (Q0) and the (Q3) difference law across R3 probes: all changes must be
  // explained by one shift Delta applied as x -> x + Delta y
  for (const R3Site& site : r3_sites(d)) {
    auto [d2, rec] = r3_apply(d, site);
    ExtendedView view2 = extended_group_view(d2, pi_rule, false);
    if (view2.abar_mod != view.abar_mod) {
      note("coefficient group changed across R3");
      continue;
    }
    ll mod = view.abar_mod;
    auto sols = r3_epsilon(d, site);
    bool ok = false;
    for (const auto& [eps, k] : sols) {
      (void)k;
      // collect constraints x' - x = Delta * y over surviving crossings and
      // epsilon-differences over the triangle
      std::vector<std::pair<ll, ll>> cons;  // (y, x' - x)
      bool good = true;
      for (int v : d.chords()) {
        bool in_tri = v == site.chords[0] || v == site.chords[1] || v == site.chords[2];
        if (in_tri) continue;
        const QIValue &a = view.pi.at(v), &b = view2.pi.at(v);
        if (a.y != b.y) {
          good = false;
          break;
        }
        cons.push_back({a.y, pmod(b.x - a.x, mod)});
      }
      for (int i2 = 0; i2 < 3 && good; ++i2)
        for (int j2 = i2 + 1; j2 < 3; ++j2) {
          const QIValue &ai = view.pi.at(site.chords[i2]), &aj = view.pi.at(site.chords[j2]);
          const QIValue &bi = view2.pi.at(site.chords[i2]), &bj = view2.pi.at(site.chords[j2]);
          ll ya = eps[i2] * ai.y - eps[j2] * aj.y;
          ll yb = eps[i2] * bi.y - eps[j2] * bj.y;
          if (ya != yb) {
            good = false;
            break;
          }
          cons.push_back({ya, pmod(eps[i2] * bi.x - eps[j2] * bj.x -
                                       (eps[i2] * ai.x - eps[j2] * aj.x),
                                   mod)});
        }
      if (!good) continue;
      // does some Delta satisfy Delta * y = diff (mod) for every constraint?
      bool found_delta = false;
      ll bound = mod == 0 ? 0 : mod;
      auto fits = [&](ll delta) {
        for (const auto& [y, diff] : cons)
          if (pmod(delta * y - diff, mod) != 0) return false;
        return true;
      };
      if (mod == 0) {
        // over Z: derive Delta from the first constraint with y != 0
        ll delta = 0;
        bool viable = true;
        for (const auto& [y, diff] : cons)
          if (y != 0) {
            if (diff % y != 0)
              viable = false;
            else
              delta = diff / y;
            break;
          }
        found_delta = viable && fits(delta);
      } else {
        for (ll delta = 0; delta < bound && !found_delta; ++delta)
          if (fits(delta)) found_delta = true;
      }
      if (found_delta) {
        ok = true;
        break;
      }
    }
    if (!ok && !sols.empty()) note("(Q0)/(Q3) difference law fails across an R3 site");
  }
  return view;
}

}  // namespace kpar
