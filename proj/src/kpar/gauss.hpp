#pragma once
// Gauss diagram data model and Gauss code codec.
//
// A diagram is one or more cyclic sequences of chord endpoints; every chord
// appears once with role 'O' (over) and once with role 'U' (under) and
// carries a sign.  Arc i of a component is the gap after endpoint i; arcs
// get global ids by concatenating components.  Long knots are stored as the
// closure of the linear sequence plus the convention that the base arc (the
// one containing infinity) is the last arc of the single component.
// Flat diagrams keep roles and signs as traversal data; flat-only operations
// are covariant under crossing switches (role swap + sign flip), which leave
// the underlying rotation system untouched.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kpar/linalg.hpp"

namespace kpar {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Endpoint {
  int chord = 0;
  char role = 'O';  // 'O' or 'U'
  bool operator==(const Endpoint& o) const { return chord == o.chord && role == o.role; }
  bool operator!=(const Endpoint& o) const { return !(*this == o); }
  bool operator<(const Endpoint& o) const {
    return chord != o.chord ? chord < o.chord : role < o.role;
  }
};

class GaussDiagram {
 public:
  std::vector<std::vector<Endpoint>> comps;
  std::map<int, int> signs;  // chord -> +-1
  bool long_knot = false;
  bool flat = false;

  GaussDiagram() { rebuild(); }
  GaussDiagram(std::vector<std::vector<Endpoint>> c, std::map<int, int> s,
               bool lng = false, bool fl = false)
      : comps(std::move(c)), signs(std::move(s)), long_knot(lng), flat(fl) {
    rebuild();
  }

  void rebuild();

  int nchords() const { return (int)signs.size(); }
  int ncomps() const { return (int)comps.size(); }
  int narcs() const { return narcs_; }
  bool is_knot() const { return comps.size() == 1 && !long_knot; }
  std::vector<int> chords() const;
  int sign(int v) const;

  const std::vector<Endpoint>& seq() const;  // single-component accessor

  // endpoint positions
  std::pair<int, int> where(int chord, char role) const;  // (component, index)
  int pos(int chord, char role) const;                    // single component
  int comp_of(int chord, char role) const { return where(chord, role).first; }
  bool is_self(int chord) const { return comp_of(chord, 'O') == comp_of(chord, 'U'); }

  // global arc ids
  int arc_id(int comp, int idx) const;
  std::pair<int, int> arc_loc(int arc) const;  // (component, index)
  int arc_after(int chord, char role) const;
  int arc_before(int chord, char role) const;
  int comp_len(int ci) const { return (int)comps[ci].size(); }

  int base_arc() const;  // long knots: the arc containing infinity

 private:
  std::map<std::pair<int, char>, std::pair<int, int>> pos_;
  std::vector<std::pair<int, int>> arcs_;
  int narcs_ = 0;
};

GaussDiagram parse_gauss_code(const std::string& text);
std::string emit_gauss_code(const GaussDiagram& d);

// Flat copy: over/under is forgotten semantically (flag set); roles and
// signs are kept as auxiliary traversal data.
GaussDiagram flatten(const GaussDiagram& d);

// Crossing switch (flat move): swap the roles of chord v and flip its sign.
GaussDiagram switch_crossing(const GaussDiagram& d, int v);

// Minimal Gauss code over rotations of each component with chords
// renumbered by first occurrence; structural identity for monodromy.
std::string canonical_code(const GaussDiagram& d);

// Corpus file: one record per line, "name<TAB>code".  Malformed records are
// reported into `errors` and skipped; duplicate names throw.
std::map<std::string, GaussDiagram> load_corpus(const std::string& path,
                                                std::vector<std::string>* errors = nullptr);

// Defined in surface.cpp (needs the intersection pairing).
bool is_almost_classical(const GaussDiagram& d);

}  // namespace kpar
