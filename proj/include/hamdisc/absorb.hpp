#pragma once

#include <string>
#include <vector>

#include "hamdisc/certify.hpp"
#include "hamdisc/graph.hpp"

namespace hamdisc {

/// Index sets of the general absorb step, as positions on the current cycle.
///
/// I = {i + k mod |C| : C[i] ~ u_1, k in [1, s-2]}, J = {j : C[j] ~ u_s}.
/// `rotation` is the position relabelled as the last cycle vertex (a
/// neighbour of u_1) and `chosen_j` the 1-based offset of the first
/// neighbour of u_s after it.
struct AbsorbScan {
  std::vector<int> I;
  std::vector<int> J;
  int rotation = -1;
  int chosen_j = -1;
};

struct AbsorbStep {
  int s = 0;     // |P| at this level
  int j = 0;     // chosen_j, 0 when the level did not scan
  std::string branch;
  int path_backward = 0;   // sigma^- of P after normalization
  int cycle_backward = 0;  // sigma^- of C after normalization
  bool path_flipped = false;
  bool cycle_flipped = false;
};

struct AbsorbTrace {
  std::vector<AbsorbStep> steps;
  int depth = 0;  // number of times P was replaced by a strictly shorter path
};

/// Merges a path P and a cycle C that partition V(G) into a Hamilton cycle
/// with sigma_min <= ell.
///
/// Requires min_degree >= n/2 + 1, sigma_min(P) <= 1, 2 <= |P| < min_degree
/// and sigma_min(C) <= ell - |P|. Violations raise PreconditionError naming
/// the failed condition; a stuck state raises InternalInvariantViolation.
CycleCert absorb_path(const OrientedGraph& g, const PathCert& p, const CycleCert& c, int ell,
                      AbsorbTrace* trace = nullptr);

/// Unchecked entry point used by the solver: `g` is a prefix view already
/// satisfying the preconditions, `min_degree` its minimum degree.
std::vector<VertexId> absorb(const GraphView& g, int min_degree, std::vector<VertexId> path,
                             std::vector<VertexId> cycle, int ell, AbsorbTrace* trace = nullptr);

}  // namespace hamdisc
