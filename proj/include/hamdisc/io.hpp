#pragma once

#include <string>
#include <string_view>

#include "hamdisc/graph.hpp"

namespace hamdisc {

enum class GraphFormat { Auto, EdgeList, Digraph6 };

/// "edge-list" / "digraph6" / "auto"; throws PreconditionError otherwise.
GraphFormat parse_format_name(std::string_view name);

/// Text form: a header line "n <count>" then one "u v" line per arc u->v,
/// arcs in lexicographic order. Blank lines and '#' comments are ignored
/// when parsing.
std::string to_edge_list(const OrientedGraph& g);
OrientedGraph parse_edge_list(std::string_view text);

/// nauty digraph6: '&', N(n), then the n*n adjacency matrix row by row
/// packed six bits per byte (big-endian within the group, +63).
std::string to_digraph6(const OrientedGraph& g);
OrientedGraph parse_digraph6(std::string_view text);

/// Auto-detects by header: a leading '&' means digraph6, "n " means edge-list.
OrientedGraph parse_graph(std::string_view text, GraphFormat format = GraphFormat::Auto);
std::string format_graph(const OrientedGraph& g, GraphFormat format);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace hamdisc
