#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hamdisc/graph.hpp"

namespace hamdisc {

/// Claimed cycle v_1 ... v_l (closing edge v_l v_1 implicit). Carries no sigma
/// data; the verifier always recomputes it.
struct CycleCert {
  std::vector<VertexId> vertices;
  std::optional<std::uint64_t> graph_id;

  friend bool operator==(const CycleCert&, const CycleCert&) = default;
};

/// Claimed path v_1 ... v_l.
struct PathCert {
  std::vector<VertexId> vertices;
  std::optional<std::uint64_t> graph_id;

  friend bool operator==(const PathCert&, const PathCert&) = default;
};

struct SigmaStats {
  int sigma_plus = 0;
  int sigma_minus = 0;
  int sigma_max = 0;
  int sigma_min = 0;

  friend bool operator==(const SigmaStats&, const SigmaStats&) = default;
};

/// Raised by sigma() on a structurally invalid certificate.
class CertificateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

SigmaStats sigma(const CycleCert& cert, const OrientedGraph& g);
SigmaStats sigma(const PathCert& cert, const OrientedGraph& g);

// Unchecked counters for vertex sequences already known to be valid.
SigmaStats cycle_sigma(const GraphView& g, std::span<const VertexId> cycle);
SigmaStats path_sigma(const GraphView& g, std::span<const VertexId> path);
int backward_count(const GraphView& g, std::span<const VertexId> seq, bool closed);

enum class Reason {
  Ok,
  WrongGraph,
  OutOfRange,
  TooShort,
  RepeatedVertex,
  NotSpanning,
  NonAdjacentPair,
  BelowTarget,
};

std::string_view reason_name(Reason r) noexcept;

struct Verdict {
  bool ok = false;
  Reason reason = Reason::Ok;
  SigmaStats stats;
  std::string detail;

  explicit operator bool() const noexcept { return ok; }
};

/// True iff the certificate visits every vertex exactly once, consecutive
/// vertices (cyclically) are adjacent, and sigma_max >= target.
Verdict verify_hamilton_cycle(const OrientedGraph& g, const CycleCert& cert, int target);
Verdict verify_path(const OrientedGraph& g, const PathCert& cert, int target, bool require_spanning);

using Certificate = std::variant<CycleCert, PathCert>;

/// "cycle: v1 v2 ..." / "path: v1 v2 ..." with 0-based ids.
std::string format_certificate(const CycleCert& cert);
std::string format_certificate(const PathCert& cert);
/// Reads the first "cycle:" or "path:" line, ignoring any other lines.
Certificate parse_certificate(std::string_view text);

/// Rotates so the smallest vertex comes first and picks the traversal whose
/// second vertex is smaller. Two certificates of the same cycle normalize to
/// the same sequence.
std::vector<VertexId> canonical_cycle(std::span<const VertexId> cycle);

}  // namespace hamdisc
