#include "hamdisc/solver.hpp"

#include <algorithm>
#include <sstream>

#include "hamdisc/hamilton_base.hpp"
#include "internal.hpp"

namespace hamdisc {

std::string_view branch_name(Branch b) noexcept {
  switch (b) {
    case Branch::Tournament: return "tournament";
    case Branch::DiracBase: return "dirac-base";
    case Branch::Insert: return "insert";
    case Branch::ForcedInsert: return "forced-insert";
    case Branch::PatternII: return "pattern-ii";
    case Branch::PatternIII: return "pattern-iii";
    case Branch::Absorb: return "absorb";
    case Branch::ImproveCycle: return "improve-cycle";
  }
  return "unknown";
}

std::map<std::string, int> SolveTrace::histogram() const {
  std::map<std::string, int> h;
  for (const TraceEvent& e : events) ++h[std::string(branch_name(e.branch))];
  return h;
}

namespace {

bool normalize_cycle(const GraphView& g, std::vector<VertexId>& cycle) {
  const int back = backward_count(g, cycle, true);
  if (2 * back <= static_cast<int>(cycle.size())) return false;
  std::reverse(cycle.begin(), cycle.end());
  return true;
}

std::vector<VertexId> insert_after(const std::vector<VertexId>& cycle, std::size_t pos, VertexId w) {
  std::vector<VertexId> out;
  out.reserve(cycle.size() + 1);
  out.insert(out.end(), cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(pos + 1));
  out.push_back(w);
  out.insert(out.end(), cycle.begin() + static_cast<std::ptrdiff_t>(pos + 1), cycle.end());
  return out;
}

struct Lifter {
  const GraphView& g;
  int delta;
  int ell;
  SolveTrace& trace;

  [[noreturn]] void stuck(const std::vector<VertexId>& cycle, VertexId w, const std::string& what) const {
    std::ostringstream os;
    os << "lift stuck at n=" << g.order() << " ell=" << ell << " delta=" << delta << " w=" << w << " (label "
       << w + 1 << ")\ncycle (0-based):";
    for (VertexId v : cycle) os << ' ' << v;
    os << '\n';
    try {
      os << detail::interval_report(g, cycle, w).to_text();
    } catch (const std::exception& e) {
      os << "interval report unavailable: " << e.what() << '\n';
    }
    throw InternalInvariantViolation("solver: " + what, os.str());
  }

  void record(Branch b, int sigma_minus, VertexId w) const {
    trace.events.push_back(TraceEvent{g.order(), ell, b, sigma_minus, w});
  }

  struct PatternHit {
    enum Kind { None, Closed, Shorter, Leftover } kind = None;
    Branch branch = Branch::PatternII;
    std::vector<VertexId> rerouted;  // v_i w v_j ... v_{i-1}
    std::vector<VertexId> leftover;  // v_{i+1} ... v_{j-1}
    VertexId new_outside = -1;
  };

  // Segments v_i..v_j with v_i, v_j in N(w), scanned by length then start,
  // whose orientation into w lets the segment be bypassed through w.
  PatternHit scan_patterns(const std::vector<VertexId>& cycle, VertexId w, const std::vector<char>& nb,
                           const std::vector<char>& backward) const {
    const int len = static_cast<int>(cycle.size());
    const auto at = [len](int p) { return static_cast<std::size_t>(p % len); };
    // backward edges among edges i .. i+e-1, via prefix sums on the doubled cycle
    std::vector<int> prefix(static_cast<std::size_t>(2 * len) + 1, 0);
    for (int p = 0; p < 2 * len; ++p)
      prefix[static_cast<std::size_t>(p) + 1] = prefix[static_cast<std::size_t>(p)] + backward[at(p)];
    const int max_e = std::min(ell + 1, len - 2);
    PatternHit hit;
    for (int e = 1; e <= max_e; ++e) {
      for (int i = 0; i < len; ++i) {
        const int j = (i + e) % len;
        if (!nb[at(i)] || !nb[at(j)]) continue;
        const int b = prefix[static_cast<std::size_t>(i + e)] - prefix[static_cast<std::size_t>(i)];
        const VertexId vi = cycle[at(i)];
        const VertexId vj = cycle[at(j)];
        if (b == e && (g.has_arc(w, vj) || g.has_arc(vi, w)))
          hit.branch = Branch::PatternII;
        else if (b == e - 1 && g.has_arc(vi, w) && g.has_arc(w, vj))
          hit.branch = Branch::PatternIII;
        else
          continue;
        hit.rerouted.reserve(static_cast<std::size_t>(len - e + 2));
        hit.rerouted.push_back(vi);
        hit.rerouted.push_back(w);
        for (int t = 0; t < len - e; ++t) hit.rerouted.push_back(cycle[at(j + t)]);
        if (e == 1) {
          hit.kind = PatternHit::Closed;
        } else if (e == 2) {
          hit.kind = PatternHit::Shorter;
          hit.new_outside = cycle[at(i + 1)];
        } else {
          hit.kind = PatternHit::Leftover;
          for (int t = 1; t < e; ++t) hit.leftover.push_back(cycle[at(i + t)]);
        }
        return hit;
      }
    }
    return hit;
  }

  // Turns an (n-1)-cycle missing w with sigma_min <= ell into a Hamilton cycle
  // of the level with sigma_min <= ell.
  std::vector<VertexId> lift(std::vector<VertexId> cycle, VertexId w) const {
    const int n = g.order();
    const int len = n - 1;
    int improvements = 0;
    int previous = -1;
    for (;;) {
      normalize_cycle(g, cycle);
      const int back = backward_count(g, cycle, true);
      if (back > ell) stuck(cycle, w, "sub-level cycle exceeds ell");
      if (previous >= 0 && back >= previous) stuck(cycle, w, "improvement did not decrease sigma");
      previous = back;

      std::vector<char> nb(static_cast<std::size_t>(len));
      std::vector<char> backward(static_cast<std::size_t>(len));
      for (int p = 0; p < len; ++p) {
        const auto up = static_cast<std::size_t>(p);
        nb[up] = g.has_edge(cycle[up], w);
        backward[up] = g.has_arc(cycle[static_cast<std::size_t>((p + 1) % len)], cycle[up]);
      }
      const auto at = [len](int p) { return static_cast<std::size_t>(((p % len) + len) % len); };

      if (back <= ell - 2) {
        for (int p = 0; p < len; ++p)
          if (nb[at(p)] && nb[at(p + 1)]) {
            record(Branch::Insert, back, w);
            return insert_after(cycle, static_cast<std::size_t>(p), w);
          }
        stuck(cycle, w, "no consecutive neighbour pair");
      }

      for (int p = 0; p < len; ++p) {
        if (!nb[at(p)] || !nb[at(p + 1)]) continue;
        const int after = back - backward[at(p)] + g.has_arc(w, cycle[at(p)]) + g.has_arc(cycle[at(p + 1)], w);
        if (std::min(after, n - after) <= ell) {
          record(Branch::ForcedInsert, back, w);
          return insert_after(cycle, static_cast<std::size_t>(p), w);
        }
        if (back == ell - 1 &&
            !(g.has_arc(cycle[at(p)], cycle[at(p + 1)]) && g.has_arc(w, cycle[at(p)]) &&
              g.has_arc(cycle[at(p + 1)], w)))
          stuck(cycle, w, "failed insertion without the forced orientation");
      }

      PatternHit hit = scan_patterns(cycle, w, nb, backward);
      if (hit.kind == PatternHit::None) stuck(cycle, w, "no branch applies");
      if (hit.kind == PatternHit::Closed) {
        record(hit.branch, back, w);
        return std::move(hit.rerouted);
      }
      if (hit.kind == PatternHit::Shorter) {
        record(Branch::ImproveCycle, back, w);
        if (++improvements > ell) stuck(cycle, w, "more improvements than ell");
        w = hit.new_outside;
        cycle = std::move(hit.rerouted);
        continue;
      }
      record(hit.branch, back, w);
      record(Branch::Absorb, back, w);
      return absorb(g, delta, std::move(hit.leftover), std::move(hit.rerouted), ell);
    }
  }
};

}  // namespace

SolveResult max_discrepancy_hamilton(const OrientedGraph& g) {
  const int n = g.order();
  if (n < 3) throw PreconditionError("solve-order", "need n >= 3");
  const GraphView full = g.view();
  std::vector<int> deg = full.degrees();
  const int delta = *std::min_element(deg.begin(), deg.end());
  if (2 * delta < n) throw PreconditionError("solve-degree", "need min_degree >= n/2");

  // walk down the prefix chain to the first base case
  std::vector<int> level_delta(static_cast<std::size_t>(n) + 1, 0);
  int k = n;
  for (;;) {
    const int dk = *std::min_element(deg.begin(), deg.begin() + k);
    level_delta[static_cast<std::size_t>(k)] = dk;
    const int lk = k - dk;
    if (lk == 1 || k <= 2 * lk + 1) break;
    for (VertexId v = 0; v < k - 1; ++v)
      if (full.has_edge(v, k - 1)) --deg[static_cast<std::size_t>(v)];
    --k;
  }

  SolveResult result;
  SolveTrace& trace = result.trace;
  trace.base_order = k;
  trace.depth = n - k;
  std::vector<VertexId> cycle;
  {
    const GraphView base = g.prefix(k);
    const int lk = k - level_delta[static_cast<std::size_t>(k)];
    if (lk == 1) {
      std::vector<VertexId> order(static_cast<std::size_t>(k));
      for (VertexId v = 0; v < k; ++v) order[static_cast<std::size_t>(v)] = v;
      cycle = directed_hamilton_path(base, order);
      trace.events.push_back(TraceEvent{k, lk, Branch::Tournament, backward_count(base, cycle, true), -1});
    } else {
      cycle = dirac_cycle(base);
      trace.events.push_back(TraceEvent{k, lk, Branch::DiracBase, backward_count(base, cycle, true), -1});
    }
  }
  for (int level = k + 1; level <= n; ++level) {
    const GraphView view = g.prefix(level);
    const int dl = level_delta[static_cast<std::size_t>(level)];
    Lifter lifter{view, dl, level - dl, trace};
    cycle = lifter.lift(std::move(cycle), level - 1);
  }

  result.cycle = CycleCert{std::move(cycle), g.fingerprint()};
  const Verdict verdict = verify_hamilton_cycle(g, result.cycle, delta);
  if (!verdict)
    throw InternalInvariantViolation("solver produced an unverified cycle: " + verdict.detail,
                                     format_certificate(result.cycle));
  result.stats = verdict.stats;
  return result;
}

PathCert discrepancy_path(const OrientedGraph& g) {
  const int n = g.order();
  const int delta = g.min_degree();
  if (n >= 3 && 2 * delta >= n) {
    const SolveResult r = max_discrepancy_hamilton(g);
    return open_cycle_to_path(g, r.cycle, delta);
  }
  std::optional<PathCert> best;
  int best_sigma = -1;
  for (const auto& comp : connected_components(g)) {
    const Subgraph h = induced_subgraph(g, comp);
    const int size = h.graph.order();
    std::vector<VertexId> local;
    if (size >= 3 && 2 * delta >= size) {
      const SolveResult r = max_discrepancy_hamilton(h.graph);
      local = open_cycle_to_path(h.graph, r.cycle, delta).vertices;
    } else if (size <= 2) {
      local.resize(static_cast<std::size_t>(size));
      for (int v = 0; v < size; ++v) local[static_cast<std::size_t>(v)] = v;
    } else {
      local = long_path_connected(h.graph, delta).vertices;
    }
    PathCert mapped;
    for (VertexId v : local) mapped.vertices.push_back(h.new_to_old[static_cast<std::size_t>(v)]);
    const int s = path_sigma(g.view(), mapped.vertices).sigma_max;
    if (s > best_sigma) {
      best_sigma = s;
      best = std::move(mapped);
    }
  }
  best->graph_id = g.fingerprint();
  const Verdict verdict = verify_path(g, *best, delta, 2 * delta >= n);
  if (!verdict)
    throw InternalInvariantViolation("discrepancy path failed verification: " + verdict.detail,
                                     format_certificate(*best));
  return std::move(*best);
}

}  // namespace hamdisc
