#pragma once
// Exact contraction of Morse diagrams in a strand model.
//
// contract() sweeps bottom to top keeping a frontier map from strand label
// tuples to accumulated coefficients; the frontier never exceeds N^width
// states.  enumerate_oracle() recomputes the same value by brute recursion
// over per-segment label assignments with no frontier merging, as an
// independent cross-check of the sweep bookkeeping.

#include <stdexcept>
#include <string>
#include <vector>

#include "knotoid/diagram.hpp"
#include "knotoid/models.hpp"

namespace knotoid {

struct EngineLimits {
  int max_width = 12;     // frontier guard for contract()
  int max_segments = 24;  // recursion guard for enumerate_oracle()
};

// Thrown when a computation would exceed an EngineLimits guard.
struct EngineLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Partition function of the diagram.  Open diagrams give an N x N matrix:
// rows index the label fixed at the endpoint of lower height, columns the
// other endpoint.  Closed diagrams give a 1 x 1 matrix.
Matrix contract(const OrientedDiagram& od, const QuantumModel& m,
                const EngineLimits& lim = {});

Matrix enumerate_oracle(const OrientedDiagram& od, const QuantumModel& m,
                        const EngineLimits& lim = {});

// Runs both routes and compares; on mismatch fills *witness.
bool oracle_check(const OrientedDiagram& od, const QuantumModel& m,
                  std::string* witness = nullptr);

// --- model verification ------------------------------------------------------

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;  // first offending entry when pass is false
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  std::string summary() const;
};

// Structural identities a model must satisfy for the partition function to be
// a Morse-isotopy invariant: crossing invertibility, the braid relation for
// both crossings, snake cancellation of extremum pairs, crossings sliding
// past extrema (over all strand direction patterns for oriented models), and
// for oriented models the anti-parallel crossing cancellation, the chirality
// conversion weight mu, and label-sum conservation of the crossing matrices.
VerifyReport verify_model(const QuantumModel& m);

// Z(upper half) * Z(lower half) == Z(whole) when the diagram is cut at
// event index `split` (operator composition across the cut).
bool functoriality_check(const OrientedDiagram& od, const QuantumModel& m,
                         int split, std::string* witness = nullptr);

}  // namespace knotoid
