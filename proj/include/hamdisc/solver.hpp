#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hamdisc/absorb.hpp"
#include "hamdisc/certify.hpp"
#include "hamdisc/graph.hpp"

namespace hamdisc {

enum class Branch {
  Tournament,    // base: tournament, directed Hamilton path closed up
  DiracBase,     // base: n in {2 ell, 2 ell + 1}, any Hamilton cycle
  Insert,        // sigma^-(C) <= ell - 2, w inserted between two neighbours
  ForcedInsert,    // some consecutive insertion already meets ell
  PatternII,     // all-backward segment closed through w
  PatternIII,    // one-forward segment closed through w
  Absorb,        // leftover directed path merged back via absorb()
  ImproveCycle,  // (n-1)-cycle with strictly smaller sigma adopted
};

std::string_view branch_name(Branch b) noexcept;

struct TraceEvent {
  int n = 0;    // order of the level
  int ell = 0;  // n - min_degree at this level
  Branch branch = Branch::Insert;
  int sigma_minus = 0;  // sigma^- of the current (n-1)-cycle, or of the base cycle
  VertexId outside = -1;
};

struct SolveTrace {
  std::vector<TraceEvent> events;
  int base_order = 0;  // order of the base case level
  int depth = 0;       // n - base_order

  std::map<std::string, int> histogram() const;
};

struct SolveResult {
  CycleCert cycle;
  SolveTrace trace;
  SigmaStats stats;
};

/// Hamilton cycle with sigma_max >= min_degree (equivalently sigma_min <=
/// ell = n - min_degree). Requires n >= 3 and min_degree >= n/2.
///
/// Inducts on the prefix subgraphs G[0..k): the highest-index vertex is
/// removed until a base case (tournament, or k <= 2 ell + 1) is reached, and
/// the cycle is then lifted level by level. Each lift either inserts the
/// outside vertex directly, finds a short segment of the cycle that can be
/// rerouted through it, or recovers via absorb(). Throws
/// InternalInvariantViolation (with an interval report in the dump) if a lift
/// runs out of branches.
SolveResult max_discrepancy_hamilton(const OrientedGraph& g);

/// Path with sigma_max >= min_degree, spanning when min_degree >= n/2.
PathCert discrepancy_path(const OrientedGraph& g);

/// Bookkeeping state of an (n-1)-cycle with the outside vertex w.
///
/// Positions are 0-based on the rotated cycle: position p is index p + 1 in
/// the 1-based convention, so J starts at 0 and never contains n - 2.
struct IntervalReport {
  struct Interval {
    int a = 0;  // first position
    int t = 0;  // length
  };
  struct PairCheck {
    int interval = 0;
    std::vector<int> hits;  // W inside [a, a + t]
    bool ok = false;
  };

  int n = 0;
  int delta = 0;
  int ell = 0;
  int sigma = 0;  // sigma_min of the cycle
  VertexId w = -1;
  bool flipped = false;
  int rotation = 0;              // original position moved to position 0
  std::vector<VertexId> cycle;   // normalized and rotated
  std::vector<int> W;
  std::optional<int> i_star;
  bool forced_orientation_holds = true;
  std::vector<int> J;
  std::vector<Interval> intervals;
  std::vector<int> m;
  int q = 0;
  int sum_t = 0;
  int sum_m = 0;
  std::vector<PairCheck> pair_checks;

  bool sum_t_ok() const { return sum_t == ell; }
  bool sum_m_ok() const { return sum_m <= q - 1; }
  bool pair_checks_ok() const;
  std::string to_text() const;
};

/// Requires `c` to span V(G) \ {w} and sigma_min(c) in {ell - 1, ell}; when it
/// is ell - 1 some consecutive pair of c must lie in N(w).
IntervalReport diagnostics(const OrientedGraph& g, const CycleCert& c, VertexId w);

}  // namespace hamdisc
