#include <algorithm>
#include <sstream>

#include "hamdisc/solver.hpp"
#include "internal.hpp"

namespace hamdisc {

bool IntervalReport::pair_checks_ok() const {
  return std::all_of(pair_checks.begin(), pair_checks.end(), [](const PairCheck& c) { return c.ok; });
}

std::string IntervalReport::to_text() const {
  // positions are printed 1-based to line up with the usual indexing
  std::ostringstream os;
  const auto list = [&os](const char* name, const std::vector<int>& xs) {
    os << name << ':';
    for (int x : xs) os << ' ' << x + 1;
    os << '\n';
  };
  os << "interval report: n=" << n << " delta=" << delta << " ell=" << ell << " sigma=" << sigma << " w=" << w + 1
     << " flipped=" << flipped << " rotation=" << rotation << '\n';
  os << "cycle (labels):";
  for (VertexId v : cycle) os << ' ' << v + 1;
  os << '\n';
  list("W", W);
  if (i_star) os << "i*: " << *i_star + 1 << " forced=" << forced_orientation_holds << '\n';
  list("J", J);
  os << "q=" << q << '\n';
  for (std::size_t j = 0; j < intervals.size(); ++j)
    os << "  J_" << j + 1 << ": a=" << intervals[j].a + 1 << " t=" << intervals[j].t << " m=" << m[j] << '\n';
  os << "sum t=" << sum_t << (sum_t_ok() ? " ok" : " FAIL") << "; sum m=" << sum_m
     << (sum_m_ok() ? " ok" : " FAIL") << '\n';
  for (const PairCheck& c : pair_checks) {
    os << "  pair check J_" << c.interval + 1 << ':';
    for (int h : c.hits) os << ' ' << h + 1;
    os << (c.ok ? " ok" : " FAIL") << '\n';
  }
  return os.str();
}

namespace detail {

IntervalReport interval_report(const GraphView& g, std::span<const VertexId> cyc, VertexId w) {
  const int n = g.order();
  const int len = n - 1;
  IntervalReport rep;
  rep.n = n;
  rep.w = w;
  rep.delta = g.min_degree();
  rep.ell = n - rep.delta;
  const int ell = rep.ell;

  if (static_cast<int>(cyc.size()) != len || len < 3)
    throw PreconditionError("diag-cycle", "cycle must have n - 1 >= 3 vertices");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (VertexId v : cyc) {
    if (v < 0 || v >= n || v == w || seen[static_cast<std::size_t>(v)])
      throw PreconditionError("diag-cycle", "cycle must span V(G) minus w exactly once");
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (int p = 0; p < len; ++p)
    if (!g.has_edge(cyc[static_cast<std::size_t>(p)], cyc[static_cast<std::size_t>((p + 1) % len)]))
      throw PreconditionError("diag-cycle", "consecutive cycle vertices are not adjacent");

  std::vector<VertexId> c(cyc.begin(), cyc.end());
  int back = backward_count(g, c, true);
  if (2 * back > len) {
    std::reverse(c.begin(), c.end());
    back = len - back;
    rep.flipped = true;
  }
  rep.sigma = back;
  if (back != ell && back != ell - 1)
    throw PreconditionError("diag-sigma", "sigma_min of the cycle must be ell - 1 or ell");

  const auto at = [len](int p) { return static_cast<std::size_t>(((p % len) + len) % len); };
  const auto is_back = [&](int p) { return g.has_arc(c[at(p + 1)], c[at(p)]); };
  const auto near_w = [&](int p) { return g.has_edge(c[at(p)], w); };

  std::vector<char> in_j(static_cast<std::size_t>(len), 0);
  for (int p = 0; p < len; ++p) in_j[at(p)] = is_back(p);
  std::optional<int> i_star;
  if (back == ell - 1) {
    // prefer a pair whose edge points forward, so J gains a new element
    for (int p = 0; p < len && !i_star; ++p)
      if (near_w(p) && near_w(p + 1) && !is_back(p)) i_star = p;
    for (int p = 0; p < len && !i_star; ++p)
      if (near_w(p) && near_w(p + 1)) i_star = p;
    if (!i_star) throw PreconditionError("diag-istar", "no consecutive pair of the cycle lies in N(w)");
    in_j[at(*i_star)] = 1;
  }
  const int j_size = static_cast<int>(std::count(in_j.begin(), in_j.end(), 1));
  if (j_size == 0 || j_size >= len) throw PreconditionError("diag-j", "J must be a proper nonempty subset");

  // rotate so position 0 starts a run of J (and the last position is outside J)
  int start = 0;
  while (!(in_j[at(start)] && !in_j[at(start - 1)])) ++start;
  rep.rotation = start;
  rep.cycle.resize(static_cast<std::size_t>(len));
  for (int p = 0; p < len; ++p) rep.cycle[static_cast<std::size_t>(p)] = c[at(p + start)];
  c = rep.cycle;
  if (i_star) {
    rep.i_star = static_cast<int>(at(*i_star - start));
    const int p = *rep.i_star;
    rep.forced_orientation_holds = g.has_arc(c[at(p)], c[at(p + 1)]) && g.has_arc(w, c[at(p)]) && g.has_arc(c[at(p + 1)], w);
  }
  std::vector<char> in_w(static_cast<std::size_t>(len), 0);
  for (int p = 0; p < len; ++p) {
    if (in_j[at(p + start)]) rep.J.push_back(p);
    if (near_w(p)) {
      rep.W.push_back(p);
      in_w[static_cast<std::size_t>(p)] = 1;
    }
  }

  for (std::size_t k = 0; k < rep.J.size();) {
    std::size_t e = k;
    while (e + 1 < rep.J.size() && rep.J[e + 1] == rep.J[e] + 1) ++e;
    rep.intervals.push_back({rep.J[k], static_cast<int>(e - k + 1)});
    k = e + 1;
  }
  rep.q = static_cast<int>(rep.intervals.size());
  for (int j = 0; j < rep.q; ++j) {
    const auto& iv = rep.intervals[static_cast<std::size_t>(j)];
    rep.sum_t += iv.t;
    const int next_a = j + 1 < rep.q ? rep.intervals[static_cast<std::size_t>(j) + 1].a : len;
    int outside = 0;
    for (int p = iv.a; p < next_a; ++p) outside += !in_w[static_cast<std::size_t>(p)];
    rep.m.push_back(outside - iv.t + 1);
    rep.sum_m += rep.m.back();

    IntervalReport::PairCheck check;
    check.interval = j;
    for (int p = iv.a; p <= iv.a + iv.t && p < len; ++p)
      if (in_w[static_cast<std::size_t>(p)]) check.hits.push_back(p);
    if (check.hits.size() >= 2) {
      check.ok = check.hits.size() == 2 && g.has_arc(w, c[at(check.hits[0])]) && g.has_arc(c[at(check.hits[1])], w);
      rep.pair_checks.push_back(std::move(check));
    }
  }
  return rep;
}

}  // namespace detail

IntervalReport diagnostics(const OrientedGraph& g, const CycleCert& c, VertexId w) {
  if (w < 0 || w >= g.order()) throw PreconditionError("vertex-range", "w out of range");
  if (c.graph_id && *c.graph_id != g.fingerprint())
    throw PreconditionError("diag-cycle", "certificate is bound to a different graph");
  return detail::interval_report(g.view(), c.vertices, w);
}

}  // namespace hamdisc
