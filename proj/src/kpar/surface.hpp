#pragma once
// The abstract diagram surface: rotation system, closed walks, the
// intersection pairing, faces/genus, homology membership tests, chains and
// their decomposition into the half-cycle basis.
//
// Conventions (fixed once by the calibration suite, see data/calibration.json):
//   CCW rotation at a positive crossing: (Oin, Uin, Oout, Uout) = (0,1,2,3);
//   at a negative crossing: (Oin, Uout, Oout, Uin) = (0,1,2,3).
//   D^+ = the U->O half (passage Oin -> Uout at the crossing),
//   D^- = the O->U half (passage Uin -> Oout),
//   D^l = D^{sgn(v)}, D^r = D^{-sgn(v)}.
//   intersect(W1, W2) perturbs W2: incoming ends +eps CCW, outgoing -eps.

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "kpar/gauss.hpp"
#include "kpar/linalg.hpp"

namespace kpar {

enum End : int { OIN = 0, UIN = 1, OOUT = 2, UOUT = 3 };

int rot_pos(int sign, End e);

struct Passage {
  int v;
  End in, out;
};
using Walk = std::vector<Passage>;

Walk full_walk(const GaussDiagram& d);         // D (single component)
Walk comp_walk(const GaussDiagram& d, int ci); // D_i
// which = '+' (U->O half) or '-' (O->U half); for links the chord must be a
// self-crossing and the walk stays inside its component.
Walk half_walk(const GaussDiagram& d, int v, char which);
std::pair<Walk, Walk> halves_lr(const GaussDiagram& d, int v);  // (left, right)

std::vector<int> half_arcs(const GaussDiagram& d, int v, char which);  // global arc ids
std::vector<ll> half_arcvec(const GaussDiagram& d, int v, char which);
std::vector<ll> right_arcvec(const GaussDiagram& d, int v);
std::vector<ll> left_arcvec(const GaussDiagram& d, int v);

// Geometric signed intersection count of two closed walks.
ll intersect(const GaussDiagram& d, const Walk& w1, const Walk& w2, int push = 1);

// Index parity via the pairing: ip(v) = D^r_v . D.
ll ip_walk(const GaussDiagram& d, int v);
// Independent chord-linking formula for ip (calibration cross-check).
ll ip_chord(const GaussDiagram& d, int v);
// Gaussian parity: endpoints strictly inside one half, mod 2.
ll gp_count(const GaussDiagram& d, int v);

ll writhe(const GaussDiagram& d);

// (n+1)x(n+1) matrix of pairings of the basis [D^r_{v_1},...,D^r_{v_n}, D]
// (chords in sorted order); for links the last row/column uses the sum of
// component walks.
Mat pairing_matrix(const GaussDiagram& d);

// Faces of the rotation system as lists of directed arcs (arc id, +-1);
// genus from the Euler characteristic.
std::vector<std::vector<std::pair<int, ll>>> faces(const GaussDiagram& d);
int genus(const GaussDiagram& d);

// Is the arc 1-cycle in the span of face boundaries (i.e. zero in H_1)?
bool null_homologous(const GaussDiagram& d, const std::vector<ll>& arc_vec);

// ---------------------------------------------------------------- chains

// Formal combination of arcs and chords with coefficients in Z or Z_mod.
// A chord coefficient k means k copies of the canonical through-chord
// orientation that completes right arcs into the cycle D^r_v.
struct Chain {
  ll mod = 0;
  std::vector<ll> arcs;       // indexed by global arc id
  std::map<int, ll> chords;
  bool operator==(const Chain& o) const;
};

Chain zero_chain(const GaussDiagram& d, ll mod = 0);
Chain full_chain(const GaussDiagram& d, ll mod = 0);  // D: every arc once

enum class HalfKind { Left, Right, Plus, Minus, Closed, Open };
Chain half_cycle(const GaussDiagram& d, int v, HalfKind which);

// delta = sum_v pi(v) D^r_v + rho_i D_i: chord part read off directly,
// remainder must be constant per component.  Throws if not.
struct Decomp {
  std::map<int, ll> pi;
  std::vector<ll> rho;  // per component
};
Decomp decompose(const GaussDiagram& d, const Chain& c);
Chain recompose(const GaussDiagram& d, const Decomp& dec, ll mod);

// Canonical slot decomposition of a pure-arc cycle on a knot: at a positive
// crossing pi(v) = vec[ui] - vec[uo], at a negative one vec[oi] - vec[oo]
// (arcs before/after the U resp. O endpoint); the leftover after removing
// sum pi(v) * right_arcvec(v) must be the constant rho.
struct SlotDecomp {
  std::map<int, ll> pi;
  ll rho = 0;
};
SlotDecomp slot_decompose(const GaussDiagram& d, const std::vector<ll>& vec, ll mod);

// W . delta for a pure-arc cycle on a knot, via the slot decomposition.
ll pair_walk_arcvec(const GaussDiagram& d, const Walk& w, const std::vector<ll>& vec, ll mod);
// W . c for a chain with chord coefficients, via decompose.
ll pair_walk_chain(const GaussDiagram& d, const Walk& w, const Chain& c);
// Chain-vs-chain pairing: c1 must decompose (integer coefficients).
ll intersect_chains(const GaussDiagram& d, const Chain& c1, const Chain& c2);

// ------------------------------------------------- link chain pairing

// Decompose an integer arc chain satisfying conservation into closed walks
// (arcs may be traversed backwards); pairing with a walk is the sum over
// the pieces.  Works for any number of components.
std::vector<Walk> chain_walks(const GaussDiagram& d, const std::vector<ll>& vec);
ll pair_walk_arcvec_link(const GaussDiagram& d, const Walk& w, const std::vector<ll>& vec);

}  // namespace kpar
