#pragma once

// Local rewriting moves on Morse diagrams.
//
// Each move replaces a short run of consecutive events by another run, leaving
// the rest of the word untouched (positions of later events never change; the
// rewrite is width-neutral outside the replaced window).  All moves preserve
// the underlying curve up to isotopy of the plane, except the curl moves
// (RIInsert / RIDelete) which change writhe and rotation in a controlled way
// and are therefore kept out of random equivalence walks.
//
// apply_move returns the rewritten diagram together with an event map so that
// callers can transfer per-component data (in particular the orientation of
// closed components) across the rewrite.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "knotoid/diagram.hpp"

namespace knotoid {

enum class MoveKind : uint8_t {
  MinMaxInsert,    // straighten inverse: add a zigzag (cup+cap) on a strand
  MinMaxDelete,    // cancel an adjacent cup/cap zigzag
  Slide,           // move a crossing past an adjacent extremum (kind flips)
  RIIInsert,       // add a cancelling pair of opposite crossings
  RIIDelete,       // remove an adjacent cancelling pair
  RIII,            // braid relation on three adjacent crossings
  DistantCommute,  // swap two adjacent events acting on disjoint strands
  EndpointShift,   // same, but one of the events is an endpoint
  RIInsert,        // add a curl (cup+crossing+cap) on a strand
  RIDelete,        // remove an adjacent curl
};

const char* move_kind_name(MoveKind k);

struct Move {
  MoveKind kind;
  int at = 0;                   // index of the first replaced event
  int ndel = 0;                 // number of events removed at `at`
  std::vector<MorseEvent> ins;  // events inserted in their place
};

struct MoveResult {
  MorseDiagram d;
  // event_map[j] = index in the old diagram of new event j, or -1 if the
  // event was created (or rewritten) by the move.
  std::vector<int> event_map;
};

// Applies the rewrite and validates the result.  Throws std::invalid_argument
// if the move does not fit the diagram or produces an invalid word.
MoveResult apply_move(const MorseDiagram& d, const Move& mv);

// Same rewrite on an oriented diagram.  Closed components keep their
// orientation: every port of an event that survives the rewrite seeds the
// direction of its strand in the new diagram.
OrientedDiagram apply_move_oriented(const OrientedDiagram& od, const Move& mv);

// The underlying oriented splice: replaces events [at, at+ndel) by `ins`,
// carrying closed-component orientations via the surviving events.  Also used
// for rewrites that are not isotopy moves (e.g. skein smoothings).
OrientedDiagram splice_oriented(const OrientedDiagram& od, int at, int ndel,
                                const std::vector<MorseEvent>& ins);

// Move generators.  Each returns every move of its family that applies to the
// diagram; apply_move succeeds on all of them.
std::vector<Move> minmax_insert_moves(const MorseDiagram& d);
std::vector<Move> minmax_delete_moves(const MorseDiagram& d);
std::vector<Move> slide_moves(const MorseDiagram& d);
std::vector<Move> rii_insert_moves(const MorseDiagram& d);
std::vector<Move> rii_delete_moves(const MorseDiagram& d);
std::vector<Move> riii_moves(const MorseDiagram& d);
std::vector<Move> commute_moves(const MorseDiagram& d);  // incl. endpoint shifts
std::vector<Move> ri_insert_moves(const MorseDiagram& d);
std::vector<Move> ri_delete_moves(const MorseDiagram& d);

// All curve-preserving moves; curls only when include_ri is set.
std::vector<Move> all_moves(const MorseDiagram& d, bool include_ri = false);

struct RandomWalkOptions {
  int steps = 50;
  int max_crossings = 10;  // skip insertions that would exceed this
  int max_width = 10;      // skip insertions that would exceed this
  int max_events = 64;     // skip insertions that would exceed this
};

// Performs `steps` uniformly sampled moves (deterministic for a fixed rng
// state), keeping the diagram within the given size caps and carrying the
// orientation of closed components along.  Curl moves are never used, so the
// result is related to the input by moves that fix writhe and rotation.
OrientedDiagram random_equivalent(const OrientedDiagram& od,
                                  std::mt19937_64& rng,
                                  const RandomWalkOptions& opt = {});

}  // namespace knotoid
