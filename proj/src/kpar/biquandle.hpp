#pragma once
// Finite biquandles: axioms, arc colourings, 1-cocycles and the arc cycles
// they induce, colour transport along Reidemeister moves, colour-monodromy
// search, the 2-cocycle lift with Boltzmann weights, and the remainder
// transport checker for quasi-indices read off coloured diagrams.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kpar/moves.hpp"
#include "kpar/parity.hpp"
#include "kpar/surface.hpp"

namespace kpar {

// Colours are 1-based (1..m), matching the usual printed table convention.
struct Biquandle {
  int m = 0;
  std::vector<std::vector<int>> circ;  // circ[x-1][y-1] = x o y
  std::vector<std::vector<int>> star;  // star[x-1][y-1] = x * y
  int c(int x, int y) const { return circ[x - 1][y - 1]; }
  int s(int x, int y) const { return star[x - 1][y - 1]; }
};

// Every violated instance of the diagonal law, the three bijectivity
// conditions, and the three exchange laws.
std::vector<std::string> biquandle_axiom_violations(const Biquandle& b);

// The 3-element biquandle isomorphic to Z_3 with x o y = -x, x * y = x + y.
Biquandle make_b3();
// theta = (0, 1, -1) over Z_3.
std::vector<ll> theta_b3();
inline constexpr ll kThetaMod3 = 3;

// File format: line 1 = m; then m rows of the o table and m rows of the *
// table (1-based entries); an optional final line holds theta values.
Biquandle load_biquandle(const std::string& path, std::vector<ll>* theta = nullptr);

// theta(x) - theta(x o y) = theta(y) - theta(y * x) for all x, y.
bool theta_is_cocycle(const Biquandle& b, const std::vector<ll>& theta, ll mod);

using Coloring = std::vector<int>;  // arc id -> colour

// All colourings of a closed knot diagram (exhaustive DFS with crossing-rule
// pruning, deterministic order).  The bare circle admits one arc and m
// colourings.
std::vector<Coloring> colourings(const GaussDiagram& d, const Biquandle& b);

// Per-arc values theta(c(a)).
std::vector<ll> theta_cycle(const GaussDiagram& d, const Coloring& col,
                            const std::vector<ll>& theta, ll mod);

// sigma_{theta,c} = D . delta^theta.
ll sigma_theta(const GaussDiagram& d, const std::vector<ll>& cyc, ll mod);

// delta^theta as a Chain (single colouring), the sum over the bounded
// monodromy orbit of col, or the sum over all colourings.  Throws if the
// resulting chain fails the cycle condition.
enum class InducedMode { Single, OrbitSum, FullSum };
Chain induced_cycle(const GaussDiagram& d, const Coloring& col, const Biquandle& b,
                    const std::vector<ll>& theta, ll mod, InducedMode mode = InducedMode::Single,
                    int depth = 4, int max_chords = 3);

// Reduce a cycle to a normalized one: quotient the coefficients by the
// subgroup generated by its signature.  Returns the chain over the new
// modulus.
Chain normalize_cycle(const GaussDiagram& d, const Chain& chain);

// phi_theta((x,i),(y,j)) = (theta(y) - theta(y*x)) (j - i) on B x B_ind.
ll phi_theta(const Biquandle& b, const std::vector<ll>& theta, ll mod, int x, ll i, int y, ll j);
// Both 2-cocycle conditions for phi_theta on B x B_ind, indices restricted
// to a window.  The conditions are affine-linear in the index differences,
// so a window of size 3 (all differences in [-2, 2]) decides the general
// case: each side is a fixed linear form in (j - i), (k - i), (k - j) and a
// linear form on Z^3 vanishing on that cube vanishes identically.
bool two_cocycle_check(const Biquandle& b, const std::vector<ll>& theta, ll mod, int window = 3);

// Phi_{phi_theta, c} with the B_ind component equal to the number of
// endpoint passages since the start of `base_arc`.  Positive crossings
// contribute phi(x, y), negative ones -phi(y, x), with the argument arcs
// fixed by the slot calibration recorded in data/calibration.json.
ll boltzmann_phi(const GaussDiagram& d, const Coloring& col, const Biquandle& b,
                 const std::vector<ll>& theta, ll mod, int base_arc = 0);

// The three index conditions on theta; each violated instance is reported.
// Their failure means the induced quasi-index need not be an index.
std::vector<std::string> index_condition_violations(const Biquandle& b,
                                                    const std::vector<ll>& theta, ll mod);

// Colourings of d2 that agree with col on corresponding arcs: split pieces
// via the record's arc map for insertions, bounding-endpoint-pair matching
// for deletions and R3, outer-arc colour for deletions down to the circle.
std::vector<Coloring> transport_colouring(const GaussDiagram& d, const Coloring& col,
                                          const GaussDiagram& d2, const MoveRecord& rec,
                                          const Biquandle& b);

// Bounded BFS over (diagram, colouring) states: which colourings of d0 are
// reachable from each colouring of d0 by closed move walks (a lower bound
// for the colour monodromy action).
std::map<Coloring, std::set<Coloring>> colour_monodromy_search(const GaussDiagram& d0,
                                                               const Biquandle& b, int depth,
                                                               int max_chords = 3);

// Quasi-index and remainder of a coloured diagram: slot decomposition of the
// theta cycle.
std::pair<std::map<int, ll>, ll> pi_rho(const GaussDiagram& d, const std::vector<ll>& vec,
                                        ll mod);

// Bounded breadth-first search over insertion sequences from the empty
// diagram for an unknot diagram with a colouring and an R3 site whose
// quasi-index shift lambda(f) is nonzero.
struct LambdaExample {
  GaussDiagram d;
  Coloring col;
  R3Site site;
  ll lambda = 0;
  std::array<ll, 3> pi_before{}, pi_after{};
};
std::optional<LambdaExample> find_lambda_example(const Biquandle& b,
                                                 const std::vector<ll>& theta, ll mod,
                                                 int max_depth = 3, int max_chords = 4);

// Random coloured walk checking colour transport, (Q0), (Q2), and the exact
// remainder transport laws for R1 (+-), R2 (+-), and R3.
AxiomReport verify_remainder_transport(const GaussDiagram& d0, const Biquandle& b,
                                       const std::vector<ll>& theta, ll mod, int steps,
                                       unsigned seed);

}  // namespace kpar
