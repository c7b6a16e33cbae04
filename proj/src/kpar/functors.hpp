#pragma once
// Oriented parity functors with per-diagram coefficient groups: the
// quasi-index functor on Abar (+) Z, remainder shifts and their monodromy,
// tribal systems with their functor, and the extended-diagram view that
// reads a functor's parity cycle off self-R2 probe crossings.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kpar/groups.hpp"
#include "kpar/moves.hpp"
#include "kpar/parity.hpp"
#include "kpar/surface.hpp"

namespace kpar {

// Element of Abar (+) Z where Abar is cyclic (mod carried by the diagram).
struct QIValue {
  ll x = 0, y = 0;
  bool operator==(const QIValue& o) const { return x == o.x && y == o.y; }
};

// Shift of the remainder along a move: -pi'(v') k for R1+, -pi'(v'_1) for
// R2+, -lambda(f) k for R3; deletions contribute the inverse shifts.
ll remainder_delta(const Rule& pi, const GaussDiagram& d, const GaussDiagram& d2,
                   const MoveRecord& rec);
// (lambda, k) of an applied R3: the coherent epsilon-solution with
// lambda = eps_i (pi'(v_i) - pi(v_i)) constant over the triangle.
std::optional<std::pair<ll, ll>> r3_lambda_k(const Rule& pi, const GaussDiagram& d,
                                             const GaussDiagram& d2, const MoveRecord& rec);
ll lambda_of_r3(const Rule& pi, const GaussDiagram& d, const GaussDiagram& d2,
                const MoveRecord& rec);

// The parity functor of a quasi-index: values in Abar (+) Z with
// Abar = A/<sigma(pi)>, P(v) = (sum pi(v') (D^l_v . D^r_{v'}), ip(v)),
// transitions A(f)(x, y) = (x + Delta_pi(f) y, y).
struct QuasiIndexFunctor {
  Rule pi;
  ll abar_mod(const GaussDiagram& d) const;
  QIValue eval(const GaussDiagram& d, int v) const;
  QIValue transport(const GaussDiagram& d, const GaussDiagram& d2, const MoveRecord& rec,
                    QIValue val) const;
};
QuasiIndexFunctor quasiindex_functor(const Rule& pi);

// Accumulated remainder shifts over closed move walks d0 -> d0 (structural
// equality of Gauss codes), found by bounded BFS: a lower bound for the
// monodromy group of the quasi-index.
std::set<ll> monodromy_search(const Rule& pi, const GaussDiagram& d0, int depth,
                              int max_chords = 3);

// A move-compatible partition of crossings, given by the level sets of an
// index rule: the tribe of a crossing is its index value.
struct TribalSystem {
  std::string name;
  Rule tribe_of;
};
TribalSystem tribes_of_index(const Rule& pi);

// Functor of a tribal system: values in Z[tribes]/<sigma> (+) Z with
// P(v) = (sum e_{tribe(v')} (D^l_v . D^r_{v'}), -ip(v)).  The free part x
// is carried as a raw vector over tribe labels; comparisons project into
// the quotient group of the target diagram.
struct TribalValue {
  std::map<ll, ll> x;  // tribe label -> coefficient
  ll y = 0;
};
struct TribalFunctor {
  TribalSystem sys;
  std::vector<ll> tribes(const GaussDiagram& d) const;          // sorted labels
  std::map<ll, ll> signature(const GaussDiagram& d) const;      // sigma as raw vector
  std::pair<AbGroup, Projection> group_of(const GaussDiagram& d) const;
  AbElem project(const GaussDiagram& d, const std::map<ll, ll>& x) const;
  TribalValue eval(const GaussDiagram& d, int v) const;
  TribalValue transport(const GaussDiagram& d, const GaussDiagram& d2, const MoveRecord& rec,
                        TribalValue val) const;
};
TribalFunctor tribal_functor(const TribalSystem& sys);

// Extended-diagram view of the quasi-index functor: insert a self-R2 probe
// on every arc, read delta^P_a off the designated probe crossing, recover
// pi^P by the slot formula, and verify the cycle condition, normalization,
// (Q2) on cancelable pairs, and the (Q0)/(Q3) difference laws on R3 probes
// (the x-parts may shift by a common Delta times the y-part, which is
// exactly what a partial isomorphism allows).
struct ExtendedView {
  GaussDiagram ext;
  ll abar_mod = 0;                        // of the extended diagram
  std::vector<std::pair<int, int>> pairs; // probe chords per arc of d
  std::vector<QIValue> delta;             // per arc of d
  std::map<int, QIValue> pi;              // per crossing of d
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
ExtendedView extended_group_view(const GaussDiagram& d, const Rule& pi_rule,
                                 bool check_r3 = true);

}  // namespace kpar
