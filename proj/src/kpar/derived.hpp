#pragma once
// The derived-parity series: p0 = ip, p_{n+1} = M p_n over the shrinking
// chain of cyclic coefficient groups A_{n+1} = A_n / <sigma_n>, with the
// per-level signature, odd index polynomial, and a behaviour classification.

#include <string>
#include <vector>

#include "kpar/groups.hpp"
#include "kpar/parity.hpp"
#include "kpar/surface.hpp"

namespace kpar {

// M[i][j] = intersect(D^l_{v_i}, D^-_{v_j}), chords in sorted order.
Mat intersection_matrix(const GaussDiagram& d);

struct DerivedStep {
  int n = 0;
  ll mod = 0;             // coefficient group Z_mod (0 = Z, 1 = trivial)
  std::vector<ll> p;      // parity vector, chords in sorted order
  ll sigma = 0;           // -sum sgn(v) p(v) ip(v) in Z_mod
  GroupRingElem lk_poly;  // sum over sgn(v) p(v) != 0 of sgn(v) t^{sgn p}
};

enum class DerivedClass { Degeneration, Stabilization, Periodicity, Growth, Unresolved };
std::string class_name(DerivedClass c);

struct DerivedReport {
  std::vector<DerivedStep> steps;
  DerivedClass cls = DerivedClass::Unresolved;
  int period = 0;  // periodicity / growth period
  ll ratio = 0;    // growth ratio
};

DerivedReport derived_series(const GaussDiagram& d, int max_n = 12);

// Classification applied to a computed series (needs >= 3 steps):
// degeneration if some vector vanishes or some group is trivial;
// stabilization if the (group, vector) tail is constant; periodicity if the
// tail repeats with exact period >= 2; growth if all groups are Z and
// p_{n+q} = r p_n with |r| >= 2 and strictly increasing norms.
DerivedClass classify(const std::vector<DerivedStep>& steps, int* period = nullptr,
                      ll* ratio = nullptr);

// Level-n derived parity as a rule evaluable on any diagram met along a
// Reidemeister walk (series recomputed per diagram, cached by canonical
// code); the coefficient modulus is read off d0's series.
Rule derived_rule(const GaussDiagram& d0, int level);

}  // namespace kpar
