#pragma once

#include <span>

#include "hamdisc/solver.hpp"

namespace hamdisc::detail {

// diagnostics() on a prefix view with a raw cycle
IntervalReport interval_report(const GraphView& g, std::span<const VertexId> cycle, VertexId w);

}  // namespace hamdisc::detail
