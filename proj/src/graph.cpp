#include "hamdisc/graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace hamdisc {

namespace detail {
thread_local std::uint64_t probe_counter = 0;
}

std::uint64_t arc_probes() noexcept { return detail::probe_counter; }
void reset_arc_probes() noexcept { detail::probe_counter = 0; }

OrientedGraph::OrientedGraph(int n) : n_(n), words_(0) {
  if (n < 1) throw PreconditionError("empty-graph", "graph needs at least one vertex");
  words_ = (static_cast<std::size_t>(n) + 63) / 64;
  out_.assign(words_ * static_cast<std::size_t>(n), 0);
  in_.assign(words_ * static_cast<std::size_t>(n), 0);
}

void OrientedGraph::add_arc(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw PreconditionError("loop", "loop at vertex " + std::to_string(u));
  const auto bit = [](VertexId x) { return std::uint64_t{1} << (x & 63); };
  const std::size_t uv = row(u) + (static_cast<unsigned>(v) >> 6);
  const std::size_t vu = row(v) + (static_cast<unsigned>(u) >> 6);
  if (out_[uv] & bit(v))
    throw PreconditionError("duplicate-arc",
                            "arc " + std::to_string(u) + "->" + std::to_string(v) + " already present");
  if (in_[uv] & bit(v))
    throw PreconditionError("anti-parallel", "arc " + std::to_string(v) + "->" + std::to_string(u) +
                                                 " already present");
  out_[uv] |= bit(v);
  in_[vu] |= bit(u);
  ++arcs_;
}

std::vector<VertexId> OrientedGraph::neighbors(VertexId v) const {
  check_vertex(v);
  std::vector<VertexId> out;
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = out_[row(v) + w] | in_[row(v) + w];
    while (bits) {
      out.push_back(static_cast<VertexId>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<VertexId> OrientedGraph::out_neighbors(VertexId v) const {
  check_vertex(v);
  std::vector<VertexId> out;
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = out_[row(v) + w];
    while (bits) {
      out.push_back(static_cast<VertexId>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<VertexId> OrientedGraph::in_neighbors(VertexId v) const {
  check_vertex(v);
  std::vector<VertexId> out;
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = in_[row(v) + w];
    while (bits) {
      out.push_back(static_cast<VertexId>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

int OrientedGraph::out_degree(VertexId v) const {
  check_vertex(v);
  int d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += std::popcount(out_[row(v) + w]);
  return d;
}

int OrientedGraph::in_degree(VertexId v) const {
  check_vertex(v);
  int d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += std::popcount(in_[row(v) + w]);
  return d;
}

int OrientedGraph::degree(VertexId v) const { return out_degree(v) + in_degree(v); }

int OrientedGraph::min_degree() const { return view().min_degree(); }

bool OrientedGraph::is_tournament() const {
  return arcs_ == static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ - 1) / 2;
}

std::vector<std::pair<VertexId, VertexId>> OrientedGraph::arcs() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(arcs_);
  for (VertexId u = 0; u < n_; ++u)
    for (VertexId v : out_neighbors(u)) out.emplace_back(u, v);
  return out;
}

std::uint64_t OrientedGraph::fingerprint() const {
  // FNV-1a over the order and the out-rows
  std::uint64_t h = 0xcbf29ce484222325ULL;
  const auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<std::uint64_t>(n_));
  for (std::uint64_t w : out_) mix(w);
  return h;
}

GraphView OrientedGraph::view() const { return GraphView(*this, n_); }

GraphView OrientedGraph::prefix(int k) const { return GraphView(*this, k); }

GraphView::GraphView(const OrientedGraph& g, int k) : g_(&g), k_(k) {
  if (k < 1 || k > g.order())
    throw PreconditionError("view-range", "prefix view of size " + std::to_string(k) +
                                              " on graph of order " + std::to_string(g.order()));
}

int GraphView::degree(VertexId v) const {
  const std::size_t full = static_cast<std::size_t>(k_) / 64;
  const std::size_t base = g_->row(v);
  int d = 0;
  for (std::size_t w = 0; w < full; ++w) d += std::popcount(g_->out_[base + w] | g_->in_[base + w]);
  if (const int rem = k_ & 63) {
    const std::uint64_t mask = (std::uint64_t{1} << rem) - 1;
    d += std::popcount((g_->out_[base + full] | g_->in_[base + full]) & mask);
  }
  return d;
}

std::vector<int> GraphView::degrees() const {
  std::vector<int> d(static_cast<std::size_t>(k_));
  for (VertexId v = 0; v < k_; ++v) d[static_cast<std::size_t>(v)] = degree(v);
  return d;
}

int GraphView::min_degree() const {
  int best = std::numeric_limits<int>::max();
  for (VertexId v = 0; v < k_; ++v) best = std::min(best, degree(v));
  return best;
}

Subgraph induced_subgraph(const OrientedGraph& g, std::vector<VertexId> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.empty()) throw PreconditionError("empty-graph", "induced subgraph on no vertices");
  std::vector<VertexId> old_to_new(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= g.order())
      throw PreconditionError("vertex-range", "vertex " + std::to_string(keep[i]) + " out of range");
    old_to_new[static_cast<std::size_t>(keep[i])] = static_cast<VertexId>(i);
  }
  OrientedGraph h(static_cast<int>(keep.size()));
  for (VertexId u : keep)
    for (VertexId v : g.out_neighbors(u)) {
      const VertexId nv = old_to_new[static_cast<std::size_t>(v)];
      if (nv >= 0) h.add_arc(old_to_new[static_cast<std::size_t>(u)], nv);
    }
  return Subgraph{std::move(h), std::move(old_to_new), std::move(keep)};
}

Subgraph remove_vertex(const OrientedGraph& g, VertexId w) {
  if (g.order() < 2) throw PreconditionError("too-small", "cannot remove the only vertex");
  if (w < 0 || w >= g.order())
    throw PreconditionError("vertex-range", "vertex " + std::to_string(w) + " out of range");
  std::vector<VertexId> keep;
  keep.reserve(static_cast<std::size_t>(g.order() - 1));
  for (VertexId v = 0; v < g.order(); ++v)
    if (v != w) keep.push_back(v);
  return induced_subgraph(g, std::move(keep));
}

std::vector<std::vector<VertexId>> connected_components(const OrientedGraph& g) {
  const int n = g.order();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<VertexId>> out;
  for (VertexId s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<VertexId> stack{s};
    comp[static_cast<std::size_t>(s)] = id;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (VertexId u : g.neighbors(v))
        if (comp[static_cast<std::size_t>(u)] < 0) {
          comp[static_cast<std::size_t>(u)] = id;
          stack.push_back(u);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

}  // namespace hamdisc
