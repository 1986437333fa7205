#include "hamdisc/certify.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace hamdisc {

namespace {

SigmaStats make_stats(int plus, int minus) {
  return SigmaStats{plus, minus, std::max(plus, minus), std::min(plus, minus)};
}

// Structural check shared by sigma() and the verifiers. Returns Ok or the
// first defect found.
Reason check_sequence(const OrientedGraph& g, std::span<const VertexId> seq,
                      const std::optional<std::uint64_t>& graph_id, bool closed, std::string& detail) {
  if (graph_id && *graph_id != g.fingerprint()) {
    detail = "certificate is bound to a different graph";
    return Reason::WrongGraph;
  }
  for (VertexId v : seq)
    if (v < 0 || v >= g.order()) {
      detail = "vertex " + std::to_string(v) + " out of range";
      return Reason::OutOfRange;
    }
  if (seq.size() < (closed ? 3U : 1U)) {
    detail = closed ? "cycle needs at least 3 vertices" : "path needs at least 1 vertex";
    return Reason::TooShort;
  }
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (VertexId v : seq) {
    if (seen[static_cast<std::size_t>(v)]) {
      detail = "vertex " + std::to_string(v) + " repeated";
      return Reason::RepeatedVertex;
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
  const std::size_t edges = closed ? seq.size() : seq.size() - 1;
  for (std::size_t i = 0; i < edges; ++i) {
    const VertexId a = seq[i];
    const VertexId b = seq[(i + 1) % seq.size()];
    if (!g.has_edge(a, b)) {
      detail = "vertices " + std::to_string(a) + " and " + std::to_string(b) + " are not adjacent";
      return Reason::NonAdjacentPair;
    }
  }
  return Reason::Ok;
}

std::vector<VertexId> parse_vertex_list(std::string_view s) {
  std::vector<VertexId> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    if (i >= s.size()) break;
    VertexId v = 0;
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), v);
    if (ec != std::errc()) throw CertificateError("certificate: expected vertex ids");
    out.push_back(v);
    i = static_cast<std::size_t>(ptr - s.data());
  }
  return out;
}

}  // namespace

int backward_count(const GraphView& g, std::span<const VertexId> seq, bool closed) {
  if (seq.size() < 2) return 0;
  const std::size_t edges = closed ? seq.size() : seq.size() - 1;
  int back = 0;
  for (std::size_t i = 0; i < edges; ++i)
    if (g.has_arc(seq[(i + 1) % seq.size()], seq[i])) ++back;
  return back;
}

SigmaStats cycle_sigma(const GraphView& g, std::span<const VertexId> cycle) {
  const int minus = backward_count(g, cycle, true);
  return make_stats(static_cast<int>(cycle.size()) - minus, minus);
}

SigmaStats path_sigma(const GraphView& g, std::span<const VertexId> path) {
  const int minus = backward_count(g, path, false);
  const int edges = path.empty() ? 0 : static_cast<int>(path.size()) - 1;
  return make_stats(edges - minus, minus);
}

SigmaStats sigma(const CycleCert& cert, const OrientedGraph& g) {
  std::string detail;
  if (check_sequence(g, cert.vertices, cert.graph_id, true, detail) != Reason::Ok) throw CertificateError(detail);
  return cycle_sigma(g.view(), cert.vertices);
}

SigmaStats sigma(const PathCert& cert, const OrientedGraph& g) {
  std::string detail;
  if (check_sequence(g, cert.vertices, cert.graph_id, false, detail) != Reason::Ok) throw CertificateError(detail);
  return path_sigma(g.view(), cert.vertices);
}

std::string_view reason_name(Reason r) noexcept {
  switch (r) {
    case Reason::Ok: return "ok";
    case Reason::WrongGraph: return "wrong graph";
    case Reason::OutOfRange: return "out of range";
    case Reason::TooShort: return "too short";
    case Reason::RepeatedVertex: return "repeated vertex";
    case Reason::NotSpanning: return "not spanning";
    case Reason::NonAdjacentPair: return "non-adjacent pair";
    case Reason::BelowTarget: return "below target";
  }
  return "unknown";
}

Verdict verify_hamilton_cycle(const OrientedGraph& g, const CycleCert& cert, int target) {
  Verdict v;
  const auto fail = [&v](Reason r, std::string detail) {
    v.ok = false;
    v.reason = r;
    v.detail = std::move(detail);
    return v;
  };
  if (cert.graph_id && *cert.graph_id != g.fingerprint())
    return fail(Reason::WrongGraph, "certificate is bound to a different graph");
  for (VertexId x : cert.vertices)
    if (x < 0 || x >= g.order()) return fail(Reason::OutOfRange, "vertex " + std::to_string(x) + " out of range");
  // spanning is checked before adjacency so a repeated vertex is reported as
  // the vertex it displaced
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (VertexId x : cert.vertices) seen[static_cast<std::size_t>(x)] = 1;
  const auto covered = static_cast<std::size_t>(std::count(seen.begin(), seen.end(), 1));
  if (cert.vertices.size() != static_cast<std::size_t>(g.order()) || covered != cert.vertices.size())
    return fail(Reason::NotSpanning, "certificate covers " + std::to_string(covered) + " of " +
                                         std::to_string(g.order()) + " vertices exactly once");
  std::string detail;
  if (const Reason r = check_sequence(g, cert.vertices, std::nullopt, true, detail); r != Reason::Ok)
    return fail(r, detail);
  v.stats = cycle_sigma(g.view(), cert.vertices);
  if (v.stats.sigma_max < target)
    return fail(Reason::BelowTarget,
                "sigma_max " + std::to_string(v.stats.sigma_max) + " < target " + std::to_string(target));
  v.ok = true;
  return v;
}

Verdict verify_path(const OrientedGraph& g, const PathCert& cert, int target, bool require_spanning) {
  Verdict v;
  const auto fail = [&v](Reason r, std::string detail) {
    v.ok = false;
    v.reason = r;
    v.detail = std::move(detail);
    return v;
  };
  std::string detail;
  if (const Reason r = check_sequence(g, cert.vertices, cert.graph_id, false, detail); r != Reason::Ok)
    return fail(r, detail);
  if (require_spanning && cert.vertices.size() != static_cast<std::size_t>(g.order()))
    return fail(Reason::NotSpanning, "path covers " + std::to_string(cert.vertices.size()) + " of " +
                                         std::to_string(g.order()) + " vertices");
  v.stats = path_sigma(g.view(), cert.vertices);
  if (v.stats.sigma_max < target)
    return fail(Reason::BelowTarget,
                "sigma_max " + std::to_string(v.stats.sigma_max) + " < target " + std::to_string(target));
  v.ok = true;
  return v;
}

namespace {
std::string format_list(std::string_view tag, const std::vector<VertexId>& vs) {
  std::ostringstream os;
  os << tag << ':';
  for (VertexId v : vs) os << ' ' << v;
  return os.str();
}
}  // namespace

std::string format_certificate(const CycleCert& cert) { return format_list("cycle", cert.vertices); }
std::string format_certificate(const PathCert& cert) { return format_list("path", cert.vertices); }

Certificate parse_certificate(std::string_view text) {
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (line.starts_with("cycle:")) return CycleCert{parse_vertex_list(line.substr(6)), std::nullopt};
    if (line.starts_with("path:")) return PathCert{parse_vertex_list(line.substr(5)), std::nullopt};
  }
  throw CertificateError("no 'cycle:' or 'path:' line found");
}

std::vector<VertexId> canonical_cycle(std::span<const VertexId> cycle) {
  if (cycle.empty()) return {};
  const auto len = cycle.size();
  const auto start = static_cast<std::size_t>(std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
  std::vector<VertexId> fwd(len), bwd(len);
  for (std::size_t i = 0; i < len; ++i) {
    fwd[i] = cycle[(start + i) % len];
    bwd[i] = cycle[(start + len - i) % len];
  }
  return (len < 2 || fwd[1] <= bwd[1]) ? fwd : bwd;
}

}  // namespace hamdisc
