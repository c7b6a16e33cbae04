#pragma once
// Multi-component link diagrams: normalized invariant cycles, link parity,
// the relative-parity identity for mixed crossings, and random link
// generation for property checks.

#include <map>
#include <random>
#include <vector>

#include "kpar/linalg.hpp"
#include "kpar/surface.hpp"

namespace kpar {

// Conservation rows: one per chord, +arc_before - arc_after for both roles.
std::vector<std::vector<ll>> cycle_rows(const GaussDiagram& d);

// Basis of arc cycles delta with D_i . delta = 0 for every component walk
// D_i (normalized invariant cycles).
std::vector<std::vector<ll>> normalized_cycles_basis(const GaussDiagram& d);

// The standard path gamma = gamma_1 gamma_2 between mixed crossings v, w of
// the component pair (ci, cj): turn at v from cj onto ci, run along ci to w,
// turn onto cj and run back to v.
Walk gamma_walk(const GaussDiagram& d, int v, int w, int ci, int cj);

// Incidence index of a turning passage: -1 for the left turn, +1 for the
// right turn, 0 for a straight passage.
int eta(const GaussDiagram& d, const Passage& p);

// lp^l(v) = sgn(v) * (l[over component] - l[under component]).
ll link_parity(const GaussDiagram& d, const std::vector<ll>& l, int v);
// Per-arc parity cycle of lp^l (always the zero chain).
std::vector<ll> link_parity_cycle(const GaussDiagram& d, const std::vector<ll>& l);

// Mixed crossings joining exactly the components ci and cj.
std::vector<int> mixed_of_pair(const GaussDiagram& d, int ci, int cj);

// Anchored relative parity on the mixed crossings of (ci, cj): fix
// p(m0) = 0 and propagate eta_v p(v) + eta_w p(w) = gamma(v,w) . delta over
// all ordered pairs; returns whether the full system is consistent plus the
// solved values.
std::pair<bool, std::map<int, Rat>> solve_anchor(const GaussDiagram& d,
                                                 const std::vector<ll>& vec, int ci, int cj);

// lp^l coherence: eta_v lp(v) + eta_w lp(w) = 0 for all mixed pairs of every
// component pair.  Returns the number of violations.
int eta_signature_violations(const GaussDiagram& d);

// Random link with nch chords on ncomp components, all components nonempty.
GaussDiagram random_link(std::mt19937& rng, int nch, int ncomp);
// Random integer combination of basis vectors with coefficients in
// [-spread, spread].
std::vector<ll> random_cycle(std::mt19937& rng, const GaussDiagram& d,
                             const std::vector<std::vector<ll>>& basis, int spread = 3);

}  // namespace kpar
