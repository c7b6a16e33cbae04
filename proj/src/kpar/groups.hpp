#pragma once
// Finitely generated abelian coefficient groups in invariant-factor form,
// their elements, quotients by a cyclic subgroup, and group-ring (Laurent)
// polynomials used for the odd index polynomial.

#include <map>
#include <string>
#include <vector>

#include "kpar/linalg.hpp"

namespace kpar {

// Z^rank  (+)  Z_{d_1} + ... + Z_{d_k}  with d_i | d_{i+1}, d_i >= 2.
// Element coordinates are stored torsion-first: (t_1..t_k, f_1..f_rank),
// torsion entries reduced into [0, d_i).
struct AbGroup {
  ll rank = 0;
  std::vector<ll> torsion;
  bool operator==(const AbGroup& o) const { return rank == o.rank && torsion == o.torsion; }
  bool operator!=(const AbGroup& o) const { return !(*this == o); }
  ll ngens() const { return rank + (ll)torsion.size(); }
  bool trivial() const { return rank == 0 && torsion.empty(); }
  std::string render() const;
};

struct AbElem {
  AbGroup group;
  std::vector<ll> coords;
  bool operator==(const AbElem& o) const { return group == o.group && coords == o.coords; }
  bool is_zero() const;
};

AbGroup make_group(ll rank, std::vector<ll> moduli);
AbElem make_elem(const AbGroup& g, std::vector<ll> coords);
AbElem elem_add(const AbElem& a, const AbElem& b);
AbElem elem_neg(const AbElem& a);
AbElem elem_scale(const AbElem& a, ll k);

// Projection attached to a quotient: maps old coordinates to coordinates in
// the quotient group (matrix applied, then per-coordinate reduction).
struct Projection {
  AbGroup source, target;
  Mat matrix;  // target.ngens() x source.ngens()
  AbElem operator()(const AbElem& x) const;
};

// (g / <x>, projection), computed via Smith normal form of the relation
// matrix (g's torsion relations plus the row x).
std::pair<AbGroup, Projection> quotient_by_cyclic(const AbGroup& g, const AbElem& x);

// Convenience for the cyclic case used throughout the derived series:
// quotient of Z_m (m == 0 meaning Z) by the element s.
ll cyclic_quotient_mod(ll m, ll s);

// Group-ring element over g: finite sum of integer coefficients on
// canonical group elements ("exponents").
struct GroupRingElem {
  AbGroup group;
  std::map<std::vector<ll>, ll> terms;
  bool operator==(const GroupRingElem& o) const { return group == o.group && terms == o.terms; }
  bool is_zero() const { return terms.empty(); }
};

GroupRingElem ring_zero(const AbGroup& g);
void ring_add_term(GroupRingElem& p, const AbElem& e, ll coeff);
GroupRingElem ring_add(const GroupRingElem& p, const GroupRingElem& q);
GroupRingElem ring_neg(const GroupRingElem& p);
GroupRingElem ring_scale(const GroupRingElem& p, ll k);
std::string ring_render(const GroupRingElem& p);

// Laurent polynomial over a cyclic group: m == 0 is Z, otherwise Z_m;
// exponents are reduced into [0, m).
GroupRingElem laurent(ll m, const std::map<ll, ll>& coeff_by_exp);

}  // namespace kpar
