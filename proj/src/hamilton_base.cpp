#include "hamdisc/hamilton_base.hpp"

#include <algorithm>
#include <sstream>

namespace hamdisc {

namespace {

// Grows `path` at either end until neither endpoint has a neighbour off the
// path. Candidates are taken lowest index first.
void extend_maximal(const GraphView& g, std::vector<VertexId>& path, std::vector<char>& on) {
  const int k = g.order();
  const auto extend_tail = [&] {
    const VertexId tail = path.back();
    for (VertexId y = 0; y < k; ++y) {
      if (on[static_cast<std::size_t>(y)] || !g.has_edge(tail, y)) continue;
      path.push_back(y);
      on[static_cast<std::size_t>(y)] = 1;
      return true;
    }
    return false;
  };
  for (;;) {
    if (extend_tail()) continue;
    std::reverse(path.begin(), path.end());
    if (!extend_tail()) return;
  }
}

// Maximal path with d(p_0) + d(p_last) >= |path| (all neighbours on the path)
// -> cycle on the same vertex set.
std::vector<VertexId> close_path(const GraphView& g, const std::vector<VertexId>& path) {
  const std::size_t s = path.size();
  if (s <= 2 || g.has_edge(path.front(), path.back())) return path;
  for (std::size_t i = 0; i + 1 < s; ++i) {
    if (g.has_edge(path.front(), path[i + 1]) && g.has_edge(path.back(), path[i])) {
      std::vector<VertexId> cycle(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(i + 1));
      cycle.insert(cycle.end(), path.rbegin(), path.rend() - static_cast<std::ptrdiff_t>(i + 1));
      return cycle;
    }
  }
  std::ostringstream dump;
  dump << "path:";
  for (VertexId v : path) dump << ' ' << v;
  throw InternalInvariantViolation("no crossing pair on a maximal path", dump.str());
}

// Reopens `cycle` at the lowest-index outside vertex adjacent to it. Returns
// false if no outside vertex touches the cycle.
bool open_at_outside(const GraphView& g, std::vector<VertexId>& cycle, std::vector<char>& on) {
  const int k = g.order();
  for (VertexId x = 0; x < k; ++x) {
    if (on[static_cast<std::size_t>(x)]) continue;
    for (std::size_t t = 0; t < cycle.size(); ++t) {
      if (!g.has_edge(x, cycle[t])) continue;
      std::vector<VertexId> path;
      path.reserve(cycle.size() + 1);
      path.push_back(x);
      for (std::size_t r = 0; r < cycle.size(); ++r) path.push_back(cycle[(t + r) % cycle.size()]);
      on[static_cast<std::size_t>(x)] = 1;
      cycle = std::move(path);
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<VertexId> dirac_cycle(const GraphView& g) {
  const int k = g.order();
  if (k < 3) throw PreconditionError("dirac-order", "Dirac cycle needs n >= 3");
  if (2 * g.min_degree() < k) throw PreconditionError("dirac-degree", "Dirac cycle needs min_degree >= n/2");
  std::vector<char> on(static_cast<std::size_t>(k), 0);
  std::vector<VertexId> path{0};
  on[0] = 1;
  for (;;) {
    extend_maximal(g, path, on);
    std::vector<VertexId> cycle = close_path(g, path);
    if (static_cast<int>(cycle.size()) == k) return cycle;
    if (!open_at_outside(g, cycle, on))
      throw InternalInvariantViolation("Dirac graph is disconnected", "order " + std::to_string(k));
    path = std::move(cycle);
  }
}

CycleCert dirac_cycle(const OrientedGraph& g) { return CycleCert{dirac_cycle(g.view()), g.fingerprint()}; }

std::vector<VertexId> directed_hamilton_path(const GraphView& g, std::span<const VertexId> vertices) {
  std::vector<VertexId> path;
  path.reserve(vertices.size());
  for (VertexId v : vertices) {
    if (path.empty() || g.has_arc(v, path.front())) {
      path.insert(path.begin(), v);
      continue;
    }
    std::size_t t = 0;
    while (t + 1 < path.size() && !(g.has_arc(path[t], v) && g.has_arc(v, path[t + 1]))) ++t;
    if (!g.has_arc(path[t], v))
      throw PreconditionError("not-tournament", "vertex set does not induce a tournament");
    path.insert(path.begin() + static_cast<std::ptrdiff_t>(t + 1), v);
  }
  return path;
}

PathCert tournament_directed_hamilton_path(const OrientedGraph& g) {
  if (!g.is_tournament()) throw PreconditionError("not-tournament", "input is not a tournament");
  std::vector<VertexId> order(static_cast<std::size_t>(g.order()));
  for (VertexId v = 0; v < g.order(); ++v) order[static_cast<std::size_t>(v)] = v;
  return PathCert{directed_hamilton_path(g.view(), order), g.fingerprint()};
}

PathCert long_path_connected(const OrientedGraph& g, int d) {
  const int n = g.order();
  if (d < 0) throw PreconditionError("degree", "d must be non-negative");
  if (g.min_degree() < d) throw PreconditionError("degree", "min_degree below d");
  if (connected_components(g).size() != 1) throw PreconditionError("disconnected", "graph is disconnected");
  const auto want = static_cast<std::size_t>(std::min(n, 2 * d + 1));
  const GraphView view = g.view();
  std::vector<char> on(static_cast<std::size_t>(n), 0);
  std::vector<VertexId> path{0};
  on[0] = 1;
  for (;;) {
    extend_maximal(view, path, on);
    if (path.size() >= want) return PathCert{path, g.fingerprint()};
    std::vector<VertexId> cycle = close_path(view, path);
    if (!open_at_outside(view, cycle, on))
      throw InternalInvariantViolation("connected graph has no outside neighbour", "order " + std::to_string(n));
    path = std::move(cycle);
  }
}

PathCert open_cycle_to_path(const OrientedGraph& g, const CycleCert& c, int target) {
  const Verdict verdict = verify_hamilton_cycle(g, c, target);
  if (!verdict) throw PreconditionError("cycle", "cycle certificate rejected: " + verdict.detail);
  if (target > g.order() - 1) throw PreconditionError("target", "target exceeds n - 1");
  const auto& cyc = c.vertices;
  const std::size_t len = cyc.size();
  const GraphView view = g.view();
  std::vector<VertexId> path;
  path.reserve(len);
  if (verdict.stats.sigma_min == 0) {
    path = cyc;
  } else {
    // cut the first edge pointing in the minority direction
    const bool minority_is_backward = verdict.stats.sigma_minus == verdict.stats.sigma_min;
    std::size_t cut = 0;
    for (; cut < len; ++cut) {
      const VertexId a = cyc[cut];
      const VertexId b = cyc[(cut + 1) % len];
      if (minority_is_backward ? view.has_arc(b, a) : view.has_arc(a, b)) break;
    }
    for (std::size_t r = 1; r <= len; ++r) path.push_back(cyc[(cut + r) % len]);
  }
  PathCert out{std::move(path), g.fingerprint()};
  if (path_sigma(view, out.vertices).sigma_max < target)
    throw InternalInvariantViolation("opened path fell below target", format_certificate(out));
  return out;
}

}  // namespace hamdisc
