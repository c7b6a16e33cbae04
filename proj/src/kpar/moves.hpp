#pragma once
// Reidemeister-move engine on single-component diagrams.  Every move returns
// the new diagram plus a record carrying the chord/arc correspondences needed
// to transport decorations (cycles, colourings, remainders) across the move.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "kpar/surface.hpp"

namespace kpar {

struct MoveRecord {
  std::string kind;       // "R1+", "R1-", "R2+", "R2-", "R3"
  std::string loop_type;  // R1 only: "l+", "l-", "r+", "r-"
  std::vector<int> v_new, v_old;
  std::map<int, int> cmap;  // surviving chords, identity here
  // insertions only: old arc -> its corresponding new arcs (first and last
  // piece, which touch the diagram outside the move region)
  std::map<int, std::vector<int>> amap;
  // insertions only: old arc -> all split pieces (covers every new arc)
  std::map<int, std::vector<int>> pieces;
  ll k = 0;           // R1: 1 for l-type loops (base point inside), 0 for r
  int loop_arc = -1;  // R1-: the old arc between the two deleted endpoints
  std::array<int, 3> tri{-1, -1, -1};      // R3 chords
  std::array<int, 3> tri_pos{-1, -1, -1};  // R3 short-arc positions
  bool has_amap() const { return !amap.empty(); }
};

// Loop classification: an adjacent endpoint pair (O then U) of a positive
// chord curls right, etc.  First letter 'l' means the rest of the diagram
// leaves on the left of the loop.
std::string loop_type(const std::string& pattern, int sign);
// type -> (pattern, sign)
std::pair<std::string, int> loop_spec(const std::string& ltype);

int new_chord_id(const GaussDiagram& d);

struct Insert {
  int arc;
  int rank;
  Endpoint ep;
};
// Place endpoints inside arcs (ordered by rank within an arc); returns the
// new diagram (signs must be filled by the caller before use) and the split
// map old arc -> new arc pieces.
std::pair<std::vector<Endpoint>, std::map<int, std::vector<int>>> insert_endpoints(
    const GaussDiagram& d, std::vector<Insert> inserts);

std::pair<GaussDiagram, MoveRecord> r1_insert(const GaussDiagram& d, int arc,
                                              const std::string& ltype);
// Chords removable by R1 (endpoints adjacent), with the readings available:
// 0 = the O->U gap is the loop, 1 = the U->O gap is the loop.
std::vector<std::pair<int, int>> r1_removable(const GaussDiagram& d);
// reading -1 = first available (O->U preferred), else 0/1 as above.
std::pair<GaussDiagram, MoveRecord> r1_delete(const GaussDiagram& d, int v, int reading = -1);

std::pair<GaussDiagram, MoveRecord> r2_insert(const GaussDiagram& d, int arc_a, int arc_b,
                                              bool over_first = true, int sign_first = 1);
// Self-R2 on a single arc, endpoint pattern v1 v2 v1 v2 along the arc.
std::pair<GaussDiagram, MoveRecord> r2_insert_self(const GaussDiagram& d, int arc,
                                                   bool over_first = true, int sign_first = 1);

// (c1, c2, i, j): chords adjacent at positions i and j in reversed order,
// one strand over at both crossings, opposite signs.
std::vector<std::array<int, 4>> cancelable_pairs(const GaussDiagram& d);
std::pair<GaussDiagram, MoveRecord> r2_delete(const GaussDiagram& d, int v1, int v2);

struct R3Site {
  std::array<int, 3> chords;
  std::array<int, 3> pos;  // positions of the three short arcs
};
// Triples of pairwise-adjacent chords whose three short arcs bound a
// triangular face, with the over/under strand condition unless the diagram
// is flat.
std::vector<R3Site> r3_sites(const GaussDiagram& d);
std::pair<GaussDiagram, MoveRecord> r3_apply(const GaussDiagram& d, const R3Site& site);
// All (eps, k) with sum eps_i D^r_{v_i} - k D null-homologous.
std::vector<std::pair<std::array<int, 3>, ll>> r3_epsilon(const GaussDiagram& d,
                                                          const R3Site& site);

// Transport a per-arc decoration across an insertion: every split piece
// inherits the value of its old arc.
std::vector<ll> transport_vec_insert(const GaussDiagram& d2, const MoveRecord& rec,
                                     const std::vector<ll>& vec);
// Arcs of d1 and d2 with identical bounding endpoint pairs (deletions, R3).
std::vector<std::pair<int, int>> matching_arcs(const GaussDiagram& d1, const GaussDiagram& d2);

// Self-R2 insertion on (the image of) every arc of d, in arc order.
struct ExtendResult {
  GaussDiagram ext;
  // per original arc: the inserted chord pair (v1, v2); sgn v1 = +1
  std::vector<std::pair<int, int>> pairs;
};
ExtendResult extend_diagram(const GaussDiagram& d);

// Uniform description of an available move, for random walks and searches.
struct MoveSpec {
  std::string op;  // "r1+", "r1-", "r2+", "r2s+", "r2-", "r3"
  int arc = 0, arc2 = 0;
  std::string ltype;
  bool over_first = true;
  int sign_first = 1;
  int v1 = 0, v2 = 0;
  int reading = -1;
  R3Site site;
};
// All moves applicable to d; insertions are offered only below the size cap.
std::vector<MoveSpec> enumerate_moves(const GaussDiagram& d, int max_chords = 14,
                                      bool with_self_r2 = false);
std::pair<GaussDiagram, MoveRecord> apply_move(const GaussDiagram& d, const MoveSpec& mv);

}  // namespace kpar
