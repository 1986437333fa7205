#include "hamdisc/absorb.hpp"

#include <algorithm>
#include <sstream>

#include "hamdisc/hamilton_base.hpp"

namespace hamdisc {

namespace {

std::string state_dump(const GraphView& g, const std::vector<VertexId>& path, const std::vector<VertexId>& cycle,
                       int ell, const AbsorbScan* scan) {
  std::ostringstream os;
  os << "absorb state: n=" << g.order() << " ell=" << ell << " |P|=" << path.size() << " |C|=" << cycle.size()
     << '\n'
     << "P (0-based):";
  for (VertexId v : path) os << ' ' << v;
  os << "\nC (0-based):";
  for (VertexId v : cycle) os << ' ' << v;
  os << "\nsigma^-(P)=" << backward_count(g, path, false) << " sigma^-(C)=" << backward_count(g, cycle, true);
  if (scan) {
    os << "\nI:";
    for (int i : scan->I) os << ' ' << i;
    os << "\nJ:";
    for (int j : scan->J) os << ' ' << j;
    os << "\nrotation=" << scan->rotation << " j=" << scan->chosen_j;
  }
  os << '\n';
  return os.str();
}

[[noreturn]] void stuck(const GraphView& g, const std::vector<VertexId>& path, const std::vector<VertexId>& cycle,
                        int ell, const AbsorbScan* scan, const std::string& what) {
  throw InternalInvariantViolation("absorb: " + what, state_dump(g, path, cycle, ell, scan));
}

// Orients `seq` so that its backward count is the minority count.
bool normalize(const GraphView& g, std::vector<VertexId>& seq, bool closed) {
  const int edges = static_cast<int>(seq.size()) - (closed ? 0 : 1);
  const int back = backward_count(g, seq, closed);
  if (2 * back <= edges) return false;
  std::reverse(seq.begin(), seq.end());
  return true;
}

// Splices the whole path between consecutive cycle vertices C[i] ~ u_1 and
// C[i+1] ~ u_s. Returns empty if no such pair exists.
std::vector<VertexId> splice(const GraphView& g, const std::vector<VertexId>& path,
                             const std::vector<VertexId>& cycle) {
  const std::size_t m = cycle.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (!g.has_edge(cycle[i], path.front()) || !g.has_edge(cycle[(i + 1) % m], path.back())) continue;
    std::vector<VertexId> out(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(i + 1));
    out.insert(out.end(), path.begin(), path.end());
    out.insert(out.end(), cycle.begin() + static_cast<std::ptrdiff_t>(i + 1), cycle.end());
    return out;
  }
  return {};
}

bool induces_tournament(const GraphView& g, const std::vector<VertexId>& vs) {
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (!g.has_edge(vs[a], vs[b])) return false;
  return true;
}

AbsorbScan scan_indices(const GraphView& g, const std::vector<VertexId>& path, const std::vector<VertexId>& cycle) {
  const int m = static_cast<int>(cycle.size());
  const int s = static_cast<int>(path.size());
  const VertexId u1 = path.front();
  const VertexId us = path.back();
  AbsorbScan scan;
  std::vector<char> near_u1(static_cast<std::size_t>(m)), near_us(static_cast<std::size_t>(m));
  for (int p = 0; p < m; ++p) {
    near_u1[static_cast<std::size_t>(p)] = g.has_edge(cycle[static_cast<std::size_t>(p)], u1);
    near_us[static_cast<std::size_t>(p)] = g.has_edge(cycle[static_cast<std::size_t>(p)], us);
    if (near_us[static_cast<std::size_t>(p)]) scan.J.push_back(p);
  }
  // I via a cyclic difference array over the windows (i, i + s - 2]
  const int span = std::min(s - 2, m);
  std::vector<int> diff(static_cast<std::size_t>(m) + 1, 0);
  for (int i = 0; i < m; ++i) {
    if (!near_u1[static_cast<std::size_t>(i)] || span <= 0) continue;
    const int lo = (i + 1) % m;
    const int hi = lo + span;  // exclusive, may wrap
    if (hi <= m) {
      ++diff[static_cast<std::size_t>(lo)];
      --diff[static_cast<std::size_t>(hi)];
    } else {
      ++diff[static_cast<std::size_t>(lo)];
      --diff[static_cast<std::size_t>(m)];
      ++diff[0];
      --diff[static_cast<std::size_t>(hi - m)];
    }
  }
  for (int p = 0, acc = 0; p < m; ++p) {
    acc += diff[static_cast<std::size_t>(p)];
    if (acc > 0) scan.I.push_back(p);
  }
  // offset from each position to the next neighbour of u_s strictly after it
  std::vector<int> next(static_cast<std::size_t>(m), 0);
  int last_seen = -1;
  for (int p = 2 * m - 1; p >= 0; --p) {
    if (p < m) next[static_cast<std::size_t>(p)] = last_seen < 0 ? 0 : last_seen - p;
    if (near_us[static_cast<std::size_t>(p % m)]) last_seen = p;
  }
  const int j_cap = std::min(s - 2, m - 1);
  for (int r = 0; r < m; ++r) {
    if (!near_u1[static_cast<std::size_t>(r)]) continue;
    const int j = next[static_cast<std::size_t>(r)];
    if (j < 1 || j > j_cap) continue;
    if (scan.chosen_j < 0 || j < scan.chosen_j) {
      scan.chosen_j = j;
      scan.rotation = r;
    }
  }
  return scan;
}

}  // namespace

std::vector<VertexId> absorb(const GraphView& g, int min_degree, std::vector<VertexId> path,
                             std::vector<VertexId> cycle, int ell, AbsorbTrace* trace) {
  AbsorbTrace local;
  AbsorbTrace& tr = trace ? *trace : local;
  const int n = g.order();
  const auto finish = [&](std::vector<VertexId> result, std::string branch, AbsorbStep step) {
    step.branch = std::move(branch);
    tr.steps.push_back(step);
    if (static_cast<int>(result.size()) != n) stuck(g, path, cycle, ell, nullptr, "result is not spanning");
    const SigmaStats st = cycle_sigma(g, result);
    if (st.sigma_min > ell) stuck(g, path, cycle, ell, nullptr, "result exceeds ell (" + step.branch + ")");
    return result;
  };

  for (;;) {
    AbsorbStep step;
    step.path_flipped = normalize(g, path, false);
    step.cycle_flipped = normalize(g, cycle, true);
    const int s = static_cast<int>(path.size());
    const int m = static_cast<int>(cycle.size());
    step.s = s;
    step.path_backward = backward_count(g, path, false);
    step.cycle_backward = backward_count(g, cycle, true);
    const int bp = step.path_backward;
    const int bc = step.cycle_backward;
    if (bp > 1 || s < 2 || s >= min_degree || bc > ell - s || m < 3 || s + m != n)
      stuck(g, path, cycle, ell, nullptr, "intermediate pair violates the preconditions");

    if (s == 2 || s == 3) {
      auto out = splice(g, path, cycle);
      if (out.empty()) stuck(g, path, cycle, ell, nullptr, "no splice position for a short path");
      return finish(std::move(out), s == 2 ? "splice-2" : "splice-3", step);
    }

    if (s == 4 && bp == 1) {
      if (induces_tournament(g, path)) {
        std::vector<VertexId> order = path;
        std::sort(order.begin(), order.end());
        path = directed_hamilton_path(g, order);
        step.branch = "redirect-4";
        tr.steps.push_back(step);
        continue;
      }
      auto out = splice(g, path, cycle);
      if (out.empty()) stuck(g, path, cycle, ell, nullptr, "no splice position for a non-tournament 4-path");
      return finish(std::move(out), "splice-4", step);
    }

    const AbsorbScan scan = scan_indices(g, path, cycle);
    if (scan.J.size() < 2) stuck(g, path, cycle, ell, &scan, "u_s has fewer than two cycle neighbours");
    if (scan.chosen_j < 0) stuck(g, path, cycle, ell, &scan, "I and J are disjoint");
    const int r = scan.rotation;
    const int j = scan.chosen_j;
    step.j = j;
    // relabelled cycle, 1-based: v(m) = C[r] ~ u_1, v(j) ~ u_s
    const auto v = [&](int t) { return cycle[static_cast<std::size_t>((r + t) % m)]; };
    const auto u = [&](int k) { return path[static_cast<std::size_t>(k - 1)]; };
    const auto cycle_with = [&](int cut, int from, int to) {
      // v_1..v_{cut-1}, u_from..u_to, v_cut..v_m
      std::vector<VertexId> out;
      out.reserve(static_cast<std::size_t>(m + to - from + 1));
      for (int t = 1; t < cut; ++t) out.push_back(v(t));
      for (int k = from; k <= to; ++k) out.push_back(u(k));
      for (int t = cut; t <= m; ++t) out.push_back(v(t));
      return out;
    };

    if (j == 1) return finish(cycle_with(1, 1, s), "rotate-join", step);

    const VertexId before_j = v(j - 1);
    // a neighbour u_k of v_{j-1} lets u_k..u_s move into the cycle
    std::vector<VertexId> next_path, next_cycle;
    for (int k = 1; k <= s - 2 && next_cycle.empty(); ++k) {
      if (k == 2 || !g.has_edge(before_j, u(k))) continue;
      next_cycle = cycle_with(j, k, s);
      next_path.assign(path.begin(), path.begin() + (k - 1));
      step.branch = "shorten-tail";
    }
    if (next_cycle.empty() && g.has_arc(u(s - 1), u(s)) && g.has_edge(before_j, u(s - 1))) {
      next_cycle = cycle_with(j, s - 1, s);
      next_path.assign(path.begin(), path.begin() + (s - 2));
      step.branch = "shorten-tail-2";
    }
    // mirror image at v_1: v_1..v_m u_1..u_k closes through u_k ~ v_1
    const VertexId first = v(1);
    if (next_cycle.empty()) {
      for (int k = 2; k <= s && next_cycle.empty(); ++k) {
        if (k == s - 1) continue;
        if (k == 2 && !g.has_arc(u(1), u(2))) continue;
        if (!g.has_edge(first, u(k))) continue;
        next_cycle = cycle_with(m + 1, 1, k);
        next_path.assign(path.begin() + k, path.end());
        step.branch = "shorten-head";
      }
    }
    if (!next_cycle.empty()) {
      if (next_path.empty()) return finish(std::move(next_cycle), step.branch + "-close", step);
      tr.steps.push_back(step);
      ++tr.depth;
      path = std::move(next_path);
      cycle = std::move(next_cycle);
      continue;
    }

    int hits = 0;
    for (VertexId x : path) hits += g.has_edge(first, x) + g.has_edge(before_j, x);
    if (hits > 2 + bp) stuck(g, path, cycle, ell, &scan, "v_1 / v_{j-1} degree bound into P violated");
    // exchange: v_1..v_{j-1} v_{k+1}..v_m u_1..u_s v_j..v_k
    for (int k = j; k <= m - 1; ++k) {
      if (!g.has_edge(v(k), first) || !g.has_edge(v(k + 1), before_j)) continue;
      std::vector<VertexId> out;
      out.reserve(static_cast<std::size_t>(n));
      for (int t = 1; t < j; ++t) out.push_back(v(t));
      for (int t = k + 1; t <= m; ++t) out.push_back(v(t));
      for (int q = 1; q <= s; ++q) out.push_back(u(q));
      for (int t = j; t <= k; ++t) out.push_back(v(t));
      return finish(std::move(out), "exchange", step);
    }
    stuck(g, path, cycle, ell, &scan, "no exchange position");
  }
}

CycleCert absorb_path(const OrientedGraph& g, const PathCert& p, const CycleCert& c, int ell, AbsorbTrace* trace) {
  const int n = g.order();
  const int delta = g.min_degree();
  if (c.vertices.empty()) throw PreconditionError("absorb-empty-cycle", "cycle is empty");
  if (p.vertices.size() + c.vertices.size() != static_cast<std::size_t>(n))
    throw PreconditionError("absorb-partition", "|P| + |C| != n");
  if (2 * delta < n + 2) throw PreconditionError("absorb-degree", "min_degree must be at least n/2 + 1");
  SigmaStats ps, cs;
  try {
    ps = sigma(p, g);
  } catch (const CertificateError& e) {
    throw PreconditionError("absorb-invalid-path", std::string("path: ") + e.what());
  }
  try {
    cs = sigma(c, g);
  } catch (const CertificateError& e) {
    throw PreconditionError("absorb-invalid-cycle", std::string("cycle: ") + e.what());
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (VertexId v : p.vertices) seen[static_cast<std::size_t>(v)] = 1;
  for (VertexId v : c.vertices)
    if (seen[static_cast<std::size_t>(v)]++) throw PreconditionError("absorb-partition", "P and C intersect");
  const int s = static_cast<int>(p.vertices.size());
  if (ps.sigma_min > 1) throw PreconditionError("absorb-path-sigma", "sigma_min(P) must be at most 1");
  if (s < 2 || s >= delta) throw PreconditionError("absorb-path-length", "need 2 <= |P| < min_degree");
  if (cs.sigma_min > ell - s) throw PreconditionError("absorb-cycle-sigma", "sigma_min(C) must be at most ell - |P|");

  CycleCert out{absorb(g.view(), delta, p.vertices, c.vertices, ell, trace), g.fingerprint()};
  const Verdict verdict = verify_hamilton_cycle(g, out, 0);
  if (!verdict || verdict.stats.sigma_min > ell)
    throw InternalInvariantViolation("absorb produced an invalid cycle", format_certificate(out));
  return out;
}

}  // namespace hamdisc
