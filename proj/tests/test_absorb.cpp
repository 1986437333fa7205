#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "brute.hpp"
#include "hamdisc/absorb.hpp"
#include "hamdisc/instruments.hpp"

using namespace hamdisc;

namespace {

// tournament on 6 vertices containing the path 4->5 and the cycle 0->1->2->3->0
OrientedGraph tournament_with_path_and_cycle(std::uint64_t seed) {
  OrientedGraph g = brute::from_arcs(6, {{4, 5}, {0, 1}, {1, 2}, {2, 3}, {3, 0}});
  Rng rng(seed);
  for (VertexId u = 0; u < 6; ++u)
    for (VertexId v = u + 1; v < 6; ++v) {
      if (g.has_edge(u, v)) continue;
      if (rng.coin())
        g.add_arc(u, v);
      else
        g.add_arc(v, u);
    }
  return g;
}

void check_config(const AbsorbConfig& c, std::set<std::string>* branches = nullptr) {
  AbsorbTrace trace;
  const CycleCert out = absorb_path(c.graph, c.path, c.cycle, c.ell, &trace);
  const int n = c.graph.order();
  const Verdict v = verify_hamilton_cycle(c.graph, out, n - c.ell);
  REQUIRE(v.ok);
  CHECK(v.stats.sigma_min <= c.ell);
  CHECK(trace.depth <= static_cast<int>(c.path.vertices.size()));
  for (std::size_t k = 1; k < trace.steps.size(); ++k) CHECK(trace.steps[k].s <= trace.steps[k - 1].s);
  if (branches)
    for (const AbsorbStep& st : trace.steps) branches->insert(st.branch);
}

}  // namespace

TEST_CASE("tournament with a 2-path and a directed 4-cycle") {
  for (std::uint64_t seed = 0; seed < 16; ++seed) {
    const OrientedGraph g = tournament_with_path_and_cycle(seed);
    REQUIRE(g.min_degree() == 5);
    // some Hamilton cycle with sigma_min <= 2 exists
    const auto best = brute::best_cycle_sigma_max(g);
    REQUIRE(best.has_value());
    CHECK(*best >= 4);
    const CycleCert out = absorb_path(g, PathCert{{4, 5}, std::nullopt}, CycleCert{{0, 1, 2, 3}, std::nullopt}, 2);
    const Verdict v = verify_hamilton_cycle(g, out, 4);
    CHECK(v.ok);
  }
}

TEST_CASE("absorb preconditions are reported by name") {
  const OrientedGraph g = tournament_with_path_and_cycle(1);
  const auto code_of = [&](const PathCert& p, const CycleCert& c, int ell) -> std::string {
    try {
      absorb_path(g, p, c, ell);
    } catch (const PreconditionError& e) {
      return e.code();
    }
    return "";
  };
  CHECK(code_of({{4, 5}, std::nullopt}, {{}, std::nullopt}, 2) == "absorb-empty-cycle");
  CHECK(code_of({{4}, std::nullopt}, {{0, 1, 2, 3}, std::nullopt}, 2) == "absorb-partition");
  CHECK(code_of({{4, 5}, std::nullopt}, {{0, 1, 2, 4}, std::nullopt}, 2) == "absorb-partition");
  CHECK(code_of({{4, 5}, std::nullopt}, {{0, 1, 2, 3}, std::nullopt}, 1) == "absorb-cycle-sigma");
  CHECK(code_of({{4, 5}, std::nullopt}, {{0, 2, 1, 3}, std::nullopt}, 2) != "");
  CHECK_THROWS_AS(absorb_path(brute::directed_cycle(6), {{4, 5}, std::nullopt}, {{0, 1, 2, 3}, std::nullopt}, 2),
                  PreconditionError);
}

TEST_CASE("path as long as the minimum degree is rejected") {
  // path 0..6 (complete among itself), cycle 7 8 9; min degree 7 = |P|
  OrientedGraph g(10);
  for (VertexId u = 0; u < 7; ++u)
    for (VertexId v = u + 1; v < 7; ++v) g.add_arc(u, v);
  for (VertexId c = 7; c < 10; ++c)
    for (VertexId u = 0; u < 5; ++u) g.add_arc(u, c);
  g.add_arc(7, 8);
  g.add_arc(8, 9);
  g.add_arc(9, 7);
  g.add_arc(5, 7);
  g.add_arc(6, 8);
  REQUIRE(g.min_degree() == 7);
  try {
    absorb_path(g, PathCert{{0, 1, 2, 3, 4, 5, 6}, std::nullopt}, CycleCert{{7, 8, 9}, std::nullopt}, 9);
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    CHECK(e.code() == "absorb-path-length");
  }
}

TEST_CASE("path with two minority arcs is rejected") {
  // dense graph: tournament on 10 vertices, path 0->1<-2->3<-4, cycle on the rest
  OrientedGraph g(10);
  const std::vector<std::pair<int, int>> fixed{{0, 1}, {2, 1}, {2, 3}, {4, 3}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 5}};
  for (auto [u, v] : fixed) g.add_arc(u, v);
  for (VertexId u = 0; u < 10; ++u)
    for (VertexId v = u + 1; v < 10; ++v)
      if (!g.has_edge(u, v)) g.add_arc(u, v);
  try {
    absorb_path(g, PathCert{{0, 1, 2, 3, 4}, std::nullopt}, CycleCert{{5, 6, 7, 8, 9}, std::nullopt}, 9);
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    CHECK(e.code() == "absorb-path-sigma");
  }
}

TEST_CASE("random configurations satisfy the stated preconditions") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 6 + static_cast<int>(seed % 7);
    const AbsorbConfig c = random_absorb_config(n, seed);
    const int delta = brute::min_degree(c.graph);
    const int s = static_cast<int>(c.path.vertices.size());
    CHECK(2 * delta >= n + 2);
    CHECK(c.ell == n - delta);
    CHECK(s >= 2);
    CHECK(s < delta);
    CHECK(brute::is_path(c.graph, c.path.vertices));
    CHECK(brute::is_cycle(c.graph, c.cycle.vertices));
    const int pb = brute::backward_arcs(c.graph, c.path.vertices, false);
    CHECK(std::min(pb, s - 1 - pb) <= 1);
    const int cb = brute::backward_arcs(c.graph, c.cycle.vertices, true);
    CHECK(std::min(cb, n - s - cb) <= c.ell - s);
  }
}

TEST_CASE("random configurations absorb into verified cycles") {
  std::set<std::string> branches;
  for (std::uint64_t seed = 0; seed < 3000; ++seed) check_config(random_absorb_config(8 + static_cast<int>(seed % 5), seed), &branches);
  for (std::uint64_t seed = 0; seed < 300; ++seed) check_config(random_absorb_config(20 + static_cast<int>(seed % 40), seed));
  CHECK(branches.count("splice-2"));
  CHECK(branches.count("splice-3"));
  CHECK(branches.count("rotate-join"));
}

TEST_CASE("configurations reaching every branch") {
  // seeds located by scanning; n = 8 + seed % 5
  const std::pair<std::uint64_t, const char*> cases[] = {
      {0, "splice-2"},          {1, "splice-3"},       {2, "splice-4"},         {4, "rotate-join"},
      {17, "redirect-4"},       {3269, "shorten-tail"}, {4547, "shorten-tail-2"}, {18904, "shorten-head"},
      {217469, "exchange"},
  };
  for (const auto& [seed, branch] : cases) {
    CAPTURE(branch);
    std::set<std::string> seen;
    check_config(random_absorb_config(8 + static_cast<int>(seed % 5), seed), &seen);
    CHECK(seen.count(branch) == 1);
  }
}

TEST_CASE("absorb trace records normalization") {
  const AbsorbConfig c = random_absorb_config(12, 217469);
  AbsorbTrace trace;
  absorb_path(c.graph, c.path, c.cycle, c.ell, &trace);
  REQUIRE_FALSE(trace.steps.empty());
  for (const AbsorbStep& st : trace.steps) {
    CHECK(st.path_backward <= 1);
    CHECK(st.s >= 2);
  }
  CHECK(trace.depth <= static_cast<int>(c.path.vertices.size()));
}
