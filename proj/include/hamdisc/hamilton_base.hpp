#pragma once

#include <span>
#include <vector>

#include "hamdisc/certify.hpp"
#include "hamdisc/graph.hpp"

namespace hamdisc {

/// Hamilton cycle of the underlying undirected graph (orientation ignored).
/// Requires n >= 3 and min_degree >= n/2.
///
/// Extends a maximal path, closes it through a crossing pair
/// (u_1 ~ p_{i+1}, u_s ~ p_i), then reopens the cycle at an outside vertex
/// and repeats. O(n^2) arc tests.
CycleCert dirac_cycle(const OrientedGraph& g);
std::vector<VertexId> dirac_cycle(const GraphView& g);

/// Directed Hamilton path of a tournament (every arc points forward).
/// Vertices are inserted in ascending order at the first feasible position.
PathCert tournament_directed_hamilton_path(const OrientedGraph& g);

/// Same insertion on an explicit vertex set whose induced subgraph is a
/// tournament; `vertices` fixes the insertion order.
std::vector<VertexId> directed_hamilton_path(const GraphView& g, std::span<const VertexId> vertices);

/// Path on at least min(n, 2d + 1) vertices in a connected graph with
/// min_degree >= d.
PathCert long_path_connected(const OrientedGraph& g, int d);

/// Turns a cycle with sigma_max >= target into a path on the same vertices
/// with sigma_max >= target, by dropping one minority-direction edge (or any
/// edge if the cycle is directed).
PathCert open_cycle_to_path(const OrientedGraph& g, const CycleCert& c, int target);

}  // namespace hamdisc
