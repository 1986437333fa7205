#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hamdisc {

using VertexId = int;

/// Thrown when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(std::string code, const std::string& message)
      : std::invalid_argument(message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Thrown when a constructive step that is guaranteed to exist was not found.
/// Always a bug; `dump()` carries the full state for replay.
class InternalInvariantViolation : public std::logic_error {
 public:
  InternalInvariantViolation(const std::string& message, std::string dump)
      : std::logic_error(message), dump_(std::move(dump)) {}
  const std::string& dump() const noexcept { return dump_; }

 private:
  std::string dump_;
};

// Per-thread counter of has_arc/has_edge calls, used to measure work.
std::uint64_t arc_probes() noexcept;
void reset_arc_probes() noexcept;

namespace detail {
extern thread_local std::uint64_t probe_counter;
}

class GraphView;

/// Simple graph where every adjacent pair carries exactly one direction.
///
/// Adjacency is two bit matrices (out-rows and in-rows), so arc tests are
/// O(1) and degree queries are a popcount over one row.
class OrientedGraph {
 public:
  explicit OrientedGraph(int n);

  int order() const noexcept { return n_; }
  std::size_t arc_count() const noexcept { return arcs_; }

  /// Adds u->v. Rejects loops, duplicates, anti-parallel arcs and bad ids.
  void add_arc(VertexId u, VertexId v);

  bool has_arc(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    return arc_unchecked(u, v);
  }
  bool has_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    return edge_unchecked(u, v);
  }

  std::vector<VertexId> neighbors(VertexId v) const;
  std::vector<VertexId> out_neighbors(VertexId v) const;
  std::vector<VertexId> in_neighbors(VertexId v) const;
  int degree(VertexId v) const;
  int out_degree(VertexId v) const;
  int in_degree(VertexId v) const;
  int min_degree() const;

  bool is_tournament() const;

  /// Arcs in lexicographic (u, v) order.
  std::vector<std::pair<VertexId, VertexId>> arcs() const;

  /// Identity used by certificates to tie themselves to one graph.
  std::uint64_t fingerprint() const;

  GraphView view() const;
  /// Induced subgraph on vertices [0, k).
  GraphView prefix(int k) const;

  friend bool operator==(const OrientedGraph& a, const OrientedGraph& b) {
    return a.n_ == b.n_ && a.out_ == b.out_;
  }

 private:
  friend class GraphView;

  void check_vertex(VertexId v) const {
    if (v < 0 || v >= n_)
      throw PreconditionError("vertex-range", "vertex " + std::to_string(v) +
                                                  " out of range [0, " + std::to_string(n_) + ")");
  }
  bool arc_unchecked(VertexId u, VertexId v) const noexcept {
    ++detail::probe_counter;
    return (out_[row(u) + (static_cast<unsigned>(v) >> 6)] >> (v & 63)) & 1U;
  }
  bool edge_unchecked(VertexId u, VertexId v) const noexcept {
    ++detail::probe_counter;
    const std::size_t w = row(u) + (static_cast<unsigned>(v) >> 6);
    return ((out_[w] | in_[w]) >> (v & 63)) & 1U;
  }
  std::size_t row(VertexId u) const noexcept { return static_cast<std::size_t>(u) * words_; }

  int n_;
  std::size_t words_;
  std::size_t arcs_ = 0;
  std::vector<std::uint64_t> out_;
  std::vector<std::uint64_t> in_;
};

/// Read-only window onto the induced subgraph G[{0..k-1}] of a graph.
///
/// Removing the highest-index vertex repeatedly gives a chain of prefixes, so
/// the solver's induction works on views without copying adjacency.
class GraphView {
 public:
  GraphView(const OrientedGraph& g, int k);

  int order() const noexcept { return k_; }
  const OrientedGraph& graph() const noexcept { return *g_; }

  bool has_arc(VertexId u, VertexId v) const noexcept { return g_->arc_unchecked(u, v); }
  bool has_edge(VertexId u, VertexId v) const noexcept { return g_->edge_unchecked(u, v); }

  int degree(VertexId v) const;
  int min_degree() const;
  /// degree of every vertex inside the view
  std::vector<int> degrees() const;
  bool contains(VertexId v) const noexcept { return v >= 0 && v < k_; }

 private:
  const OrientedGraph* g_;
  int k_;
};

/// A fresh graph plus old->new index map (removed or dropped vertices map to -1).
struct Subgraph {
  OrientedGraph graph;
  std::vector<VertexId> old_to_new;
  std::vector<VertexId> new_to_old;
};

/// Removes w. Survivors keep their relative order: v -> v for v < w and
/// v -> v - 1 for v > w.
Subgraph remove_vertex(const OrientedGraph& g, VertexId w);

/// Induced subgraph on `keep`, relabelled in ascending order of old id.
Subgraph induced_subgraph(const OrientedGraph& g, std::vector<VertexId> keep);

/// Connected components of the underlying graph, each sorted, ordered by
/// smallest member.
std::vector<std::vector<VertexId>> connected_components(const OrientedGraph& g);

}  // namespace hamdisc
