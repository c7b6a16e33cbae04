#include "kpar/groups.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kpar {

std::string AbGroup::render() const {
  if (trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  for (ll d : torsion) {
    if (!first) os << "+";
    os << "Z_" << d;
    first = false;
  }
  for (ll i = 0; i < rank; ++i) {
    if (!first) os << "+";
    os << "Z";
    first = false;
  }
  return os.str();
}

bool AbElem::is_zero() const {
  for (ll c : coords)
    if (c != 0) return false;
  return true;
}

AbGroup make_group(ll rank, std::vector<ll> moduli) {
  if (rank < 0) throw std::invalid_argument("negative rank");
  for (ll m : moduli)
    if (m < 2) throw std::invalid_argument("modulus < 2");
  // normalize to invariant factors: repeated (gcd, lcm) passes
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < moduli.size(); ++i) {
      for (size_t j = i + 1; j < moduli.size(); ++j) {
        ll g = std::gcd(moduli[i], moduli[j]);
        ll l = moduli[i] / g * moduli[j];
        if (g != moduli[i] || l != moduli[j]) {
          moduli[i] = g;
          moduli[j] = l;
          changed = true;
        }
      }
    }
    moduli.erase(std::remove(moduli.begin(), moduli.end(), 1LL), moduli.end());
  }
  std::sort(moduli.begin(), moduli.end());
  AbGroup g;
  g.rank = rank;
  g.torsion = std::move(moduli);
  return g;
}

static std::vector<ll> reduce_coords(const AbGroup& g, std::vector<ll> c) {
  if ((ll)c.size() != g.ngens()) throw std::invalid_argument("coordinate length mismatch");
  for (size_t i = 0; i < g.torsion.size(); ++i) c[i] = pmod(c[i], g.torsion[i]);
  return c;
}

AbElem make_elem(const AbGroup& g, std::vector<ll> coords) {
  return AbElem{g, reduce_coords(g, std::move(coords))};
}

AbElem elem_add(const AbElem& a, const AbElem& b) {
  if (a.group != b.group) throw std::invalid_argument("group mismatch");
  std::vector<ll> c(a.coords.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] + b.coords[i];
  return make_elem(a.group, std::move(c));
}

AbElem elem_neg(const AbElem& a) { return elem_scale(a, -1); }

AbElem elem_scale(const AbElem& a, ll k) {
  std::vector<ll> c(a.coords.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] * k;
  return make_elem(a.group, std::move(c));
}

AbElem Projection::operator()(const AbElem& x) const {
  if (x.group != source) throw std::invalid_argument("projection source mismatch");
  std::vector<ll> c(target.ngens(), 0);
  for (ll i = 0; i < target.ngens(); ++i)
    for (ll j = 0; j < source.ngens(); ++j) c[i] += matrix[i][j] * x.coords[j];
  return make_elem(target, std::move(c));
}

std::pair<AbGroup, Projection> quotient_by_cyclic(const AbGroup& g, const AbElem& x) {
  if (x.group != g) throw std::invalid_argument("group mismatch");
  ll k = g.ngens();
  // relation matrix as columns of a k x r matrix A: one column d_i * e_i
  // per torsion factor plus the column x.  The quotient Z^k / col(A) is
  // read off the SNF D = U A V: new coordinates are U * (old coords),
  // reduced mod diag entries.
  ll r = (ll)g.torsion.size() + 1;
  Mat a(k, std::vector<ll>(r, 0));
  for (size_t i = 0; i < g.torsion.size(); ++i) a[i][i] = g.torsion[i];
  for (ll i = 0; i < k; ++i) a[i][r - 1] = x.coords[i];
  Snf s = smith_normal_form(a);
  std::vector<ll> moduli;   // per new generator: d>=2 torsion, 0 free
  std::vector<ll> keep;     // row indices of U that survive (d != 1)
  for (ll i = 0; i < k; ++i) {
    ll d = i < (ll)s.diag.size() ? s.diag[i] : 0;
    if (d == 1) continue;
    moduli.push_back(d);
    keep.push_back(i);
  }
  // order result coordinates torsion-first, torsion ascending
  std::vector<size_t> order(keep.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t p, size_t q) {
    ll dp = moduli[p] == 0 ? (1LL << 62) : moduli[p];
    ll dq = moduli[q] == 0 ? (1LL << 62) : moduli[q];
    return dp < dq;
  });
  std::vector<ll> tor;
  ll rank = 0;
  Mat pm;
  for (size_t oi : order) {
    if (moduli[oi] == 0)
      ++rank;
    else
      tor.push_back(moduli[oi]);
    pm.push_back(s.u[keep[oi]]);
  }
  AbGroup q;
  q.rank = rank;
  q.torsion = std::move(tor);
  Projection proj{g, q, std::move(pm)};
  return {q, std::move(proj)};
}

ll cyclic_quotient_mod(ll m, ll s) {
  if (m == 0) return s < 0 ? -s : s;
  return std::gcd(m, pmod(s, m));
}

GroupRingElem ring_zero(const AbGroup& g) { return GroupRingElem{g, {}}; }

void ring_add_term(GroupRingElem& p, const AbElem& e, ll coeff) {
  if (e.group != p.group) throw std::invalid_argument("group mismatch");
  auto it = p.terms.find(e.coords);
  ll v = (it == p.terms.end() ? 0 : it->second) + coeff;
  if (v == 0) {
    if (it != p.terms.end()) p.terms.erase(it);
  } else {
    p.terms[e.coords] = v;
  }
}

GroupRingElem ring_add(const GroupRingElem& p, const GroupRingElem& q) {
  if (p.group != q.group) throw std::invalid_argument("group mismatch");
  GroupRingElem out = p;
  for (const auto& [k, v] : q.terms) ring_add_term(out, AbElem{q.group, k}, v);
  return out;
}

GroupRingElem ring_neg(const GroupRingElem& p) { return ring_scale(p, -1); }

GroupRingElem ring_scale(const GroupRingElem& p, ll k) {
  GroupRingElem out = ring_zero(p.group);
  if (k == 0) return out;
  for (const auto& [e, v] : p.terms) out.terms[e] = v * k;
  return out;
}

static std::string exp_str(const AbGroup& g, const std::vector<ll>& e) {
  if (g.ngens() == 1) return std::to_string(e[0]);
  std::string s = "(";
  for (size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + ")";
}

std::string ring_render(const GroupRingElem& p) {
  if (p.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms) {
    ll ac = c < 0 ? -c : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    bool unit_exp = true;
    for (ll x : e)
      if (x != 0) unit_exp = false;
    if (unit_exp) {
      os << ac;
    } else {
      if (ac != 1) os << ac;
      os << "t";
      bool lin = e.size() == 1 && e[0] == 1;
      if (!lin) os << "^" << exp_str(p.group, e);
    }
    first = false;
  }
  return os.str();
}

GroupRingElem laurent(ll m, const std::map<ll, ll>& coeff_by_exp) {
  AbGroup g = m == 0 ? make_group(1, {}) : make_group(0, {m});
  GroupRingElem out = ring_zero(g);
  for (const auto& [e, c] : coeff_by_exp)
    ring_add_term(out, make_elem(g, {e}), c);
  return out;
}

}  // namespace kpar
