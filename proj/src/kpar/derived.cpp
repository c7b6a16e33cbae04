#include "kpar/derived.hpp"

#include <cstdlib>
#include <map>
#include <memory>
#include <numeric>

namespace kpar {

Mat intersection_matrix(const GaussDiagram& d) {
  std::vector<int> vs = d.chords();
  int n = (int)vs.size();
  Mat m(n, std::vector<ll>(n, 0));
  for (int i = 0; i < n; ++i) {
    Walk li = halves_lr(d, vs[i]).first;
    for (int j = 0; j < n; ++j) m[i][j] = intersect(d, li, half_walk(d, vs[j], '-'));
  }
  return m;
}

std::string class_name(DerivedClass c) {
  switch (c) {
    case DerivedClass::Degeneration: return "degeneration";
    case DerivedClass::Stabilization: return "stabilization";
    case DerivedClass::Periodicity: return "periodicity";
    case DerivedClass::Growth: return "growth";
    default: return "unresolved";
  }
}

namespace {

GroupRingElem lk_of(const std::vector<int>& sg, const std::vector<ll>& p, ll mod) {
  std::map<ll, ll> coeff;
  for (size_t i = 0; i < p.size(); ++i) {
    ll e = pmod(sg[i] * p[i], mod);
    if (e != 0) coeff[e] += sg[i];
  }
  for (auto it = coeff.begin(); it != coeff.end();)
    it = it->second == 0 ? coeff.erase(it) : std::next(it);
  return laurent(mod, coeff);
}

std::vector<std::pair<ll, std::vector<ll>>> raw_series(const GaussDiagram& d, int max_n,
                                                       const Mat& m, const std::vector<ll>& ip,
                                                       const std::vector<int>& sg) {
  int nch = (int)ip.size();
  std::vector<std::pair<ll, std::vector<ll>>> out;
  ll mod = 0;
  std::vector<ll> p = ip;
  for (int n = 0; n <= max_n; ++n) {
    out.push_back({mod, p});
    ll sigma = 0;
    for (int i = 0; i < nch; ++i) sigma -= sg[i] * p[i] * ip[i];
    sigma = pmod(sigma, mod);
    mod = cyclic_quotient_mod(mod, sigma);
    if (mod == 1) {
      p.assign(nch, 0);
    } else {
      std::vector<ll> q(nch, 0);
      for (int i = 0; i < nch; ++i) {
        ll s = 0;
        for (int j = 0; j < nch; ++j) s += m[i][j] * p[j];
        q[i] = pmod(s, mod);
      }
      p = std::move(q);
    }
  }
  return out;
}

bool all_zero(const std::vector<ll>& v) {
  for (ll x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

DerivedClass classify(const std::vector<DerivedStep>& steps, int* period, ll* ratio) {
  int T = (int)steps.size() - 1;
  if (T < 2) return DerivedClass::Unresolved;
  for (const DerivedStep& s : steps)
    if (s.mod == 1 || all_zero(s.p)) return DerivedClass::Degeneration;
  auto same = [&](int a, int b) { return steps[a].mod == steps[b].mod && steps[a].p == steps[b].p; };
  // constant tail of length >= 2
  {
    int k = T;
    while (k > 0 && same(k - 1, T)) --k;
    if (T - k + 1 >= 2) return DerivedClass::Stabilization;
  }
  // exact periodic tail, period >= 2 covering at least two full periods
  for (int q = 2; 2 * q <= T; ++q) {
    int k = T;
    while (k - q >= 0 && same(k - q, k)) --k;
    int start = k - q + 1 < 0 ? 0 : k - q + 1;
    if (T - start + 1 >= 2 * q) {
      bool exact = false;  // not constant with a smaller period dividing q
      for (int i = start; i + 1 <= T && !exact; ++i)
        if (!same(i, i + 1)) exact = true;
      if (exact) {
        if (period) *period = q;
        return DerivedClass::Periodicity;
      }
    }
  }
  // geometric growth p_{n+q} = r p_n over Z
  bool free = true;
  for (const DerivedStep& s : steps)
    if (s.mod != 0) free = false;
  if (free) {
    for (int q = 1; q <= 3 && q <= T; ++q) {
      ll r = 0;
      bool ok = true;
      for (int n = 0; n + q <= T && ok; ++n) {
        for (size_t i = 0; i < steps[n].p.size(); ++i) {
          ll a = steps[n].p[i], b = steps[n + q].p[i];
          if (a == 0) {
            if (b != 0) ok = false;
            continue;
          }
          if (b % a != 0) {
            ok = false;
            break;
          }
          ll rr = b / a;
          if (r == 0)
            r = rr;
          else if (r != rr)
            ok = false;
        }
      }
      if (ok && (r >= 2 || r <= -2)) {
        if (period) *period = q;
        if (ratio) *ratio = r;
        return DerivedClass::Growth;
      }
    }
  }
  return DerivedClass::Unresolved;
}

DerivedReport derived_series(const GaussDiagram& d, int max_n) {
  std::vector<int> vs = d.chords();
  int nch = (int)vs.size();
  std::vector<ll> ip(nch);
  std::vector<int> sg(nch);
  for (int i = 0; i < nch; ++i) {
    ip[i] = ip_walk(d, vs[i]);
    sg[i] = d.sign(vs[i]);
  }
  Mat m = intersection_matrix(d);
  auto raw = raw_series(d, max_n, m, ip, sg);
  DerivedReport rep;
  for (int n = 0; n <= max_n; ++n) {
    DerivedStep st;
    st.n = n;
    st.mod = raw[n].first;
    st.p = raw[n].second;
    ll sigma = 0;
    for (int i = 0; i < nch; ++i) sigma -= sg[i] * st.p[i] * ip[i];
    st.sigma = pmod(sigma, st.mod);
    st.lk_poly = lk_of(sg, st.p, st.mod);
    rep.steps.push_back(std::move(st));
  }
  rep.cls = classify(rep.steps, &rep.period, &rep.ratio);
  return rep;
}

Rule derived_rule(const GaussDiagram& d0, int level) {
  struct Cache {
    std::map<std::string, std::pair<ll, std::map<int, ll>>> by_code;
  };
  auto cache = std::make_shared<Cache>();
  auto compute = [level, cache](const GaussDiagram& d) -> const std::pair<ll, std::map<int, ll>>& {
    std::string code = canonical_code(d);
    auto it = cache->by_code.find(code);
    if (it != cache->by_code.end()) return it->second;
    std::vector<int> vs = d.chords();
    int nch = (int)vs.size();
    std::vector<ll> ip(nch);
    std::vector<int> sg(nch);
    for (int i = 0; i < nch; ++i) {
      ip[i] = ip_walk(d, vs[i]);
      sg[i] = d.sign(vs[i]);
    }
    auto raw = raw_series(d, level, intersection_matrix(d), ip, sg);
    std::pair<ll, std::map<int, ll>> entry;
    entry.first = raw[level].first;
    for (int i = 0; i < nch; ++i) entry.second[vs[i]] = raw[level].second[i];
    return cache->by_code.emplace(std::move(code), std::move(entry)).first->second;
  };
  Rule r;
  r.name = "derived[" + std::to_string(level) + "]";
  r.kind = level == 0 ? RuleKind::Index : RuleKind::Parity;
  r.mod = compute(d0).first;
  r.eval = [compute](const GaussDiagram& d, int v) { return compute(d).second.at(v); };
  return r;
}

}  // namespace kpar
