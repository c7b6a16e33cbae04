#pragma once
// Parity and index rules on Gauss diagrams: potentials, parity cycles and the
// intersection formula, quasi-index decompositions, signatures, linking
// invariants, odd index polynomials, the index->parity constructions for
// closed / flat / rotational / long diagrams, and the random-walk axiom
// verifier.
//
// Coefficient groups are cyclic throughout: mod = 0 means Z, mod = m means
// Z_m; values are canonical representatives in [0, m).

#include <array>
#include <functional>
#include <optional>
#include <string>

#include "kpar/groups.hpp"
#include "kpar/moves.hpp"
#include "kpar/surface.hpp"

namespace kpar {

enum class RuleKind { Parity, Index, Signed };

struct Rule {
  std::string name;
  ll mod = 0;  // coefficient group Z_mod (0 = Z)
  RuleKind kind = RuleKind::Parity;
  std::function<ll(const GaussDiagram&, int)> eval;
  ll operator()(const GaussDiagram& d, int v) const { return pmod(eval(d, v), mod); }
};

Rule rule_gp();           // Gaussian parity, Z_2
Rule rule_ip();           // index parity, Z
Rule rule_zero(ll mod = 0);
Rule rule_sgn();          // the sign function, a signed index
Rule rule_sgn_times(const Rule& p);  // sgn * p
Rule rule_abs(const Rule& p);        // |p| (Z-valued rules only)

// Rule algebra: sum (same kind), tensor product (signed x signed = index,
// signed x index = signed, index x index = index), post-composition with an
// odd or even map (odd preserves kind; even turns signed into index).
Rule rule_sum(const Rule& a, const Rule& b);
Rule rule_tensor(const Rule& a, const Rule& b);
Rule rule_compose(const std::string& name, std::function<ll(ll)> f, bool odd, ll out_mod,
                  const Rule& r);
ll tensor_mod(ll a, ll b);

// ------------------------------------------------------------- potentials

inline constexpr int kSelfArc = -1;

// Parity of the designated crossing of an R2 insertion between arcs a and b
// (b = kSelfArc: the self variant on a single arc).
ll potential(const Rule& rule, const GaussDiagram& d, int a, int b, int designated = 0,
             bool over_first = true, int sign_first = 1);

// (end, start) arcs of the left half of v; p(v) = delta_{end,start}.
std::pair<int, int> left_half_boundary_arcs(const GaussDiagram& d, int v);

// ---------------------------------------------------------- parity cycles

// delta^p(a) = delta_a for every arc; asserts the cycle condition
// delta_a + delta_b = delta_c + delta_d at every crossing.
std::vector<ll> parity_cycle_of_rule(const Rule& rule, const GaussDiagram& d);

// Intersection formula p^delta(v) = D^l_v . delta for a pure-arc cycle.
ll parity_from_cycle(const GaussDiagram& d, const std::vector<ll>& delta, ll mod, int v);

// sigma(delta) = D . delta
ll signature_of_cycle(const GaussDiagram& d, const std::vector<ll>& delta, ll mod);
// sigma(pi) = -sum pi(v) ip(v)
ll signature_of_quasiindex(const GaussDiagram& d, const std::map<int, ll>& pi, ll mod);

// Per-crossing slot differences + remainder; checks that the two equivalent
// slot expressions agree (throws otherwise).
SlotDecomp quasi_index_of_cycle(const GaussDiagram& d, const std::vector<ll>& delta, ll mod);

// plain: sum pi(v) D^r_v + rho D; signed_base: sum sgn(v) pi(v) D^-_v.
Chain cycle_of_quasiindex(const GaussDiagram& d, const std::map<int, ll>& pi, ll rho,
                          bool signed_base = false, ll mod = 0);

// ------------------------------------------------------------ loop probes

// Values of a rule on the four R1 loop types (probes inserted on arc 0).
// For indices asserts the Whitney identities pi^{l-} = pi^{r+} = pi_bullet,
// pi^{l+} = pi^{r-} = pi_circ; for signed indices tau^{l-} = -tau_bullet,
// tau^{r-} = -tau_circ with tau_circ = tau^{l+}, tau_bullet = tau^{r+}.
struct LoopValues {
  ll l_plus, l_minus, r_plus, r_minus;
  ll circ, bullet;
};
LoopValues loop_values(const Rule& rule, const GaussDiagram& d);

// ------------------------------------------------- index -> parity

struct RuleValues {
  std::map<int, ll> values;  // per chord, canonical mod representatives
  ll mod;
};

enum class IndexParityMode { Reduced, Quotient, AlmostClassical, Rotational };
// tau: rotation number (Rotational mode only); mon: extra monodromy
// generators quotiented in Quotient mode.
RuleValues parity_from_index(const GaussDiagram& d, const Rule& pi, IndexParityMode mode,
                             ll tau = 0, const std::vector<ll>& mon = {});

enum class FlatParityMode { Floor, Half };
RuleValues flat_parity_from_index(const GaussDiagram& d, const Rule& pi, FlatParityMode mode);

// --------------------------------------------------------------- long knots

int long_order(const GaussDiagram& d, int v);  // +1 if the closed half is right
ll long_ip(const GaussDiagram& d, int v);      // ip of the closure
// p(v) = -o(v) * (D^c_v . delta), pure-arc cycle on the closure
ll long_parity_from_cycle(const GaussDiagram& d, const std::vector<ll>& delta, ll mod, int v);
// delta = sum o(v) pi(v) D^c_v + rho D
Chain long_cycle_of_quasiindex(const GaussDiagram& d, const std::map<int, ll>& pi, ll rho,
                               ll mod = 0);
ll long_parity_from_chain(const GaussDiagram& d, const Chain& delta, int v);
// chords of a long diagram ordered by first endpoint along the line
std::vector<int> long_chord_order(const GaussDiagram& d);
// Exhaustive search over long Gauss codes with 3 chords for given orders and
// closure ip values (in left-to-right chord order).
std::optional<GaussDiagram> find_long_example(const std::array<int, 3>& orders,
                                              const std::array<ll, 3>& ips);

// ------------------------------------------------------- linking invariants

enum class LinkingMode { Plain, RingReduced, QuotientReduced };
// Sum tau(v) over crossings for a signed index, sum sgn(v) pi(v) for an
// index.  Plain mode requires the rule to be R1-reduced (zero on kinks).
std::pair<ll, ll> linking_invariant(const GaussDiagram& d, const Rule& r, LinkingMode mode);

// LK = sum over crossings with sgn(v) pi(v) != 0 of sgn(v) t^{sgn(v) pi(v)};
// parities enter via sgn * p.
GroupRingElem odd_index_polynomial(const GaussDiagram& d, const Rule& r);

// <p1, p2> = sum sgn(v) p1(v) p2(v) in the tensor product of the two cyclic
// coefficient groups; returns (value, tensor modulus).
std::pair<ll, ll> inner_product(const GaussDiagram& d, const Rule& p1, const Rule& p2);

// ------------------------------------------------------------ verification

struct AxiomReport {
  int steps = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Seeded random Reidemeister walk checking (P0)-(P3+), static bigon and
// triangle sums, and constancy of sigma, lk, and LK derived from the rule.
// `allowed` restricts the walk to the listed move classes ("r1", "r2", "r3");
// empty means all.
AxiomReport verify_parity_axioms(const Rule& rule, const GaussDiagram& d0, int steps,
                                 unsigned seed, int max_chords = 12,
                                 const std::vector<std::string>& allowed = {});

}  // namespace kpar
