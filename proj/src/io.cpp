#include "hamdisc/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace hamdisc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

std::vector<long long> parse_ints(std::string_view line, int line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t'))
      throw PreconditionError("parse", "line " + std::to_string(line_no) + ": expected integers");
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

}  // namespace

GraphFormat parse_format_name(std::string_view name) {
  if (name == "edge-list") return GraphFormat::EdgeList;
  if (name == "digraph6") return GraphFormat::Digraph6;
  if (name == "auto") return GraphFormat::Auto;
  throw PreconditionError("format", "unknown graph format '" + std::string(name) + "'");
}

std::string to_edge_list(const OrientedGraph& g) {
  std::ostringstream os;
  os << "n " << g.order() << '\n';
  for (auto [u, v] : g.arcs()) os << u << ' ' << v << '\n';
  return os.str();
}

OrientedGraph parse_edge_list(std::string_view text) {
  std::optional<OrientedGraph> g;
  int line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (!g) {
      if (line.size() < 2 || line[0] != 'n' || (line[1] != ' ' && line[1] != '\t'))
        throw PreconditionError("parse", "edge-list must start with 'n <count>'");
      const auto nums = parse_ints(line.substr(1), line_no);
      if (nums.size() != 1) throw PreconditionError("parse", "malformed header line");
      if (nums[0] < 1 || nums[0] > (1 << 20)) throw PreconditionError("parse", "vertex count out of range");
      g.emplace(static_cast<int>(nums[0]));
      continue;
    }
    const auto nums = parse_ints(line, line_no);
    if (nums.size() != 2)
      throw PreconditionError("parse", "line " + std::to_string(line_no) + ": expected 'u v'");
    if (nums[0] < 0 || nums[1] < 0 || nums[0] >= g->order() || nums[1] >= g->order())
      throw PreconditionError("vertex-range", "line " + std::to_string(line_no) + ": vertex out of range");
    g->add_arc(static_cast<VertexId>(nums[0]), static_cast<VertexId>(nums[1]));
  }
  if (!g) throw PreconditionError("parse", "empty edge-list input");
  return std::move(*g);
}

std::string to_digraph6(const OrientedGraph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out = "&";
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (VertexId u = 0; u < g.order(); ++u)
    for (VertexId v = 0; v < g.order(); ++v) {
      acc = (acc << 1) | (u != v && g.has_arc(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

OrientedGraph parse_digraph6(std::string_view text) {
  text = trim(text);
  if (text.empty() || text.front() != '&') throw PreconditionError("parse", "digraph6 must start with '&'");
  text.remove_prefix(1);
  const auto sixbits = [](char c) {
    if (c < 63 || c > 126) throw PreconditionError("parse", "invalid digraph6 byte");
    return static_cast<std::uint64_t>(c - 63);
  };
  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (text.empty()) throw PreconditionError("parse", "truncated digraph6 header");
  if (text[0] != '~') {
    n = sixbits(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != '~') {
    if (text.size() < 4) throw PreconditionError("parse", "truncated digraph6 header");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | sixbits(text[i]);
    pos = 4;
  } else {
    if (text.size() < 8) throw PreconditionError("parse", "truncated digraph6 header");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sixbits(text[i]);
    pos = 8;
  }
  if (n < 1 || n > (1 << 20)) throw PreconditionError("parse", "digraph6 vertex count out of range");
  const std::uint64_t bits = n * n;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) throw PreconditionError("parse", "digraph6 body has wrong length");
  OrientedGraph g(static_cast<int>(n));
  for (std::uint64_t k = 0; k < bits; ++k) {
    const std::uint64_t byte = sixbits(text[pos + k / 6]);
    if ((byte >> (5 - k % 6)) & 1) {
      const auto u = static_cast<VertexId>(k / n);
      const auto v = static_cast<VertexId>(k % n);
      g.add_arc(u, v);
    }
  }
  // padding bits must be zero for a bit-exact round trip
  if (const std::uint64_t pad = bytes * 6 - bits; pad > 0) {
    const std::uint64_t last = sixbits(text[pos + bytes - 1]);
    if (last & ((std::uint64_t{1} << pad) - 1)) throw PreconditionError("parse", "nonzero digraph6 padding");
  }
  return g;
}

OrientedGraph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::Auto) {
    const std::string_view t = trim(text);
    format = (!t.empty() && t.front() == '&') ? GraphFormat::Digraph6 : GraphFormat::EdgeList;
  }
  return format == GraphFormat::Digraph6 ? parse_digraph6(text) : parse_edge_list(text);
}

std::string format_graph(const OrientedGraph& g, GraphFormat format) {
  if (format == GraphFormat::Digraph6) return to_digraph6(g) + "\n";
  return to_edge_list(g);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("io", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("io", "cannot write '" + path + "'");
  out << contents;
}

}  // namespace hamdisc
