#pragma once

// The knotoid invariants built on the strand models: the bracket family
// (partition-function matrix, rotational bracket, binary bracket), the
// Alexander state sum, its two-variable generalization, the one-variable
// Homflypt specializations, and skein-triple construction.

#include <optional>

#include "knotoid/diagram.hpp"
#include "knotoid/engine.hpp"
#include "knotoid/models.hpp"
#include "knotoid/poly.hpp"

namespace knotoid {

// --- bracket family (unoriented) ---------------------------------------------

// Partition-function matrix of the bracket model: 2x2 for open diagrams (rows
// indexed by the label at the first endpoint event), 1x1 for closed ones.
Matrix bracket_matrix(const MorseDiagram& d, const EngineLimits& lim = {});

// The same matrix from the explicit smoothing expansion: every crossing is
// resolved both ways (weights A and A^-1), each closed loop of a state
// contributes -A^2-A^-2, and the open arc is contracted through its extrema.
// Shares no code with the label-sweep engine.
Matrix bracket_matrix_state_sum(const MorseDiagram& d);

// Smoothing expansion keeping the rotation of the open arc: a state with m
// loops and arc rotation r contributes coeff * (-A^2-A^-2)^m * l^r.
LaurentPoly rotational_bracket(const MorseDiagram& d);

// Binary bracket {K}: bracket states whose components can be 2-colored with
// distinct colors across every smoothing site, the open component colored 0;
// closed diagrams count all colorings (a split circle doubles the value).
LaurentPoly binary_bracket(const MorseDiagram& d, const EngineLimits& lim = {});

// A^{-writhe} * {K}: also invariant under curl moves.  The writhe (and hence
// the value for diagrams with closed components) uses od's orientation.
LaurentPoly normalized_binary_bracket(const OrientedDiagram& od,
                                      const EngineLimits& lim = {});

// --- Alexander state sum ------------------------------------------------------

struct AlexanderResult {
  Matrix tilde;        // sweep matrix (diagonal)
  Matrix normalized;   // (iq)^{-rot} * tilde
  LaurentPoly scalar;  // trace(normalized) / 2
  int rot2 = 0;        // doubled rotation number of the input
};
AlexanderResult alexander_invariant(const OrientedDiagram& od,
                                    const EngineLimits& lim = {});

// --- generalized Alexander (two variables s, t) -------------------------------

struct SawollekResult {
  Matrix z;            // half the sweep matrix
  Matrix w;            // (-i*s*t^-1)^{rot} * z, the curl-stable form
  LaurentPoly scalar;  // trace(w)
  int rot2 = 0;
};
SawollekResult sawollek_invariant(const OrientedDiagram& od,
                                  const EngineLimits& lim = {});

// --- Homflypt specializations --------------------------------------------------

struct HomflyptResult {
  int n = 1;
  Matrix raw;                 // sweep matrix, (n+1)x(n+1) diagonal
  Matrix normalized;          // q^{-(n+1)*writhe} * raw
  LaurentPoly circle;         // value of a circle: sum over labels a of q^-a
  LaurentPoly numerator;      // trace(normalized)
  std::optional<LaurentPoly> scalar;  // numerator / circle when divisible
  int writhe = 0;
};

// Throws std::logic_error if a closed diagram's value is not divisible by the
// circle value (which would indicate a model bug); open diagrams for which the
// division is not exact simply leave `scalar` empty.
HomflyptResult homflypt_invariant(const OrientedDiagram& od, int n,
                                  const EngineLimits& lim = {});

// --- skein triples --------------------------------------------------------------

struct SkeinTriple {
  OrientedDiagram pos, neg, smooth;
};

// The three diagrams agreeing with od away from the chosen crossing; the
// smoothing follows the strand orientations (a vertical pass for parallel
// strands, a turn-back for antiparallel ones).  Closed components keep their
// orientation.  Throws std::invalid_argument if the event is not a crossing.
SkeinTriple skein_triple(const OrientedDiagram& od, int crossing_event);

}  // namespace knotoid
