#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brute.hpp"
#include "hamdisc/instruments.hpp"
#include "hamdisc/solver.hpp"

using namespace hamdisc;

namespace {

// K7 minus {6-3, 0-2, 1-4}: min degree 5, ell 2. The cycle 0..5 closes with
// 5->0 and has backward arcs 2->1 and 4->3; other pairs go low -> high.
OrientedGraph seven_vertex_instance(bool backward_arcs) {
  OrientedGraph g(7);
  const auto missing = [](int u, int v) {
    return (u == 3 && v == 6) || (u == 0 && v == 2) || (u == 1 && v == 4);
  };
  for (VertexId u = 0; u < 7; ++u)
    for (VertexId v = u + 1; v < 7; ++v) {
      if (missing(u, v)) continue;
      if ((u == 0 && v == 5) || (backward_arcs && ((u == 1 && v == 2) || (u == 3 && v == 4))))
        g.add_arc(v, u);
      else
        g.add_arc(u, v);
    }
  return g;
}

// J by definition on the rotated cycle: positions whose edge points backward
std::vector<int> backward_positions(const OrientedGraph& g, const std::vector<VertexId>& c) {
  std::vector<int> j;
  for (std::size_t p = 0; p < c.size(); ++p)
    if (g.has_arc(c[(p + 1) % c.size()], c[p])) j.push_back(static_cast<int>(p));
  return j;
}

}  // namespace

TEST_CASE("hand-built instance with two backward arcs") {
  const OrientedGraph g = seven_vertex_instance(true);
  REQUIRE(g.min_degree() == 5);
  const IntervalReport rep = diagnostics(g, CycleCert{{0, 1, 2, 3, 4, 5}, std::nullopt}, 6);
  CHECK(rep.ell == 2);
  CHECK(rep.sigma == 2);
  CHECK_FALSE(rep.flipped);
  CHECK(rep.J.size() == 2);
  CHECK(rep.J == backward_positions(g, rep.cycle));
  CHECK(rep.sum_t == 2);
  CHECK(rep.sum_t_ok());
  CHECK(rep.J.front() == 0);
  CHECK(std::find(rep.J.begin(), rep.J.end(), 5) == rep.J.end());
  CHECK(rep.cycle == std::vector<VertexId>{1, 2, 3, 4, 5, 0});
  CHECK(rep.W == std::vector<int>{0, 1, 3, 4, 5});
  CHECK(rep.q == 2);
  REQUIRE(rep.m.size() == 2);
  CHECK(rep.m[0] == 0);
  CHECK(rep.m[1] == 1);
  CHECK(rep.sum_m_ok());
  CHECK_FALSE(rep.i_star.has_value());
  const std::string text = rep.to_text();
  CHECK(text.find("w=7") != std::string::npos);  // 1-based label
  CHECK(text.find("sum t=2 ok") != std::string::npos);
}

TEST_CASE("reversed traversal is normalized") {
  const OrientedGraph g = seven_vertex_instance(true);
  const IntervalReport rep = diagnostics(g, CycleCert{{5, 4, 3, 2, 1, 0}, std::nullopt}, 6);
  CHECK(rep.flipped);
  CHECK(rep.sigma == 2);
  CHECK(rep.J == backward_positions(g, rep.cycle));
}

TEST_CASE("sigma two below ell is rejected") {
  const OrientedGraph g = seven_vertex_instance(false);
  try {
    diagnostics(g, CycleCert{{0, 1, 2, 3, 4, 5}, std::nullopt}, 6);
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    CHECK(e.code() == "diag-sigma");
  }
}

TEST_CASE("cycle must avoid w and span the rest") {
  const OrientedGraph g = seven_vertex_instance(true);
  CHECK_THROWS_AS(diagnostics(g, CycleCert{{0, 1, 2, 3, 4, 6}, std::nullopt}, 5), PreconditionError);
  CHECK_THROWS_AS(diagnostics(g, CycleCert{{0, 1, 2, 3, 4}, std::nullopt}, 6), PreconditionError);
  CHECK_THROWS_AS(diagnostics(g, CycleCert{{0, 1, 2, 3, 4, 5}, std::nullopt}, 9), PreconditionError);
}

TEST_CASE("interval arithmetic on reachable states") {
  // (n-1)-cycles from solving G minus its last vertex, paired with that vertex
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 4000 && checked < 300; ++seed) {
    const int n = 7 + static_cast<int>(seed % 10);
    const OrientedGraph g = random_min_degree_oriented(n, n / 2 + 1 + static_cast<int>(seed % 2), seed);
    const int delta = g.min_degree();
    const int ell = n - delta;
    const Subgraph h = remove_vertex(g, n - 1);
    if (2 * h.graph.min_degree() < n - 1) continue;
    const SolveResult r = max_discrepancy_hamilton(h.graph);
    const int sig = r.stats.sigma_min;
    if (sig != ell && sig != ell - 1) continue;
    IntervalReport rep;
    try {
      rep = diagnostics(g, CycleCert{r.cycle.vertices, std::nullopt}, n - 1);
    } catch (const PreconditionError& e) {
      CHECK(std::string(e.code()).starts_with("diag-"));
      continue;
    }
    ++checked;
    int total = 0;
    for (const auto& iv : rep.intervals) total += iv.t;
    CHECK(total == static_cast<int>(rep.J.size()));
    CHECK(rep.sum_t == total);
    if (static_cast<int>(rep.J.size()) == ell) {
      CHECK(rep.sum_t_ok());
      CHECK(rep.sum_m_ok());
    }
    CHECK(rep.J.front() == 0);
    CHECK(rep.J.back() != n - 2);
    CHECK(static_cast<int>(rep.W.size()) == g.degree(n - 1));
  }
  CHECK(checked > 50);
}
