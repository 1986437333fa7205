#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brute.hpp"
#include "hamdisc/certify.hpp"
#include "hamdisc/instruments.hpp"
#include "hamdisc/solver.hpp"

using namespace hamdisc;

TEST_CASE("sigma of the cyclic triangle in both directions") {
  const OrientedGraph g = brute::cyclic_triangle();
  CHECK(sigma(CycleCert{{0, 1, 2}, std::nullopt}, g) == SigmaStats{3, 0, 3, 0});
  CHECK(sigma(CycleCert{{2, 1, 0}, std::nullopt}, g) == SigmaStats{0, 3, 3, 0});
}

TEST_CASE("sigma of a path with one arc each way") {
  const OrientedGraph g = brute::from_arcs(3, {{0, 1}, {2, 1}});
  CHECK(sigma(PathCert{{0, 1, 2}, std::nullopt}, g) == SigmaStats{1, 1, 1, 1});
  CHECK(sigma(PathCert{{1}, std::nullopt}, g) == SigmaStats{0, 0, 0, 0});
}

TEST_CASE("sigma rejects invalid certificates") {
  const OrientedGraph g = brute::directed_cycle(4);
  CHECK_THROWS_AS(sigma(CycleCert{{0, 1, 2, 0}, std::nullopt}, g), CertificateError);
  CHECK_THROWS_AS(sigma(CycleCert{{0, 2, 1, 3}, std::nullopt}, g), CertificateError);
  CHECK_THROWS_AS(sigma(CycleCert{{0, 1, 2, 3}, g.fingerprint() + 1}, g), CertificateError);
  CHECK_THROWS_AS(sigma(CycleCert{{0, 1}, std::nullopt}, g), CertificateError);
  CHECK_THROWS_AS(sigma(PathCert{{0, 7}, std::nullopt}, g), CertificateError);
  CHECK_THROWS_AS(sigma(PathCert{{}, std::nullopt}, g), CertificateError);
  CHECK(sigma(CycleCert{{0, 1, 2, 3}, g.fingerprint()}, g).sigma_plus == 4);
}

TEST_CASE("verify_hamilton_cycle verdicts") {
  const OrientedGraph tri = brute::cyclic_triangle();
  const Verdict ok = verify_hamilton_cycle(tri, CycleCert{{0, 1, 2}, std::nullopt}, 2);
  CHECK(ok.ok);
  CHECK(ok.stats.sigma_max == 3);

  const OrientedGraph c4 = brute::directed_cycle(4);
  const Verdict short_cycle = verify_hamilton_cycle(c4, CycleCert{{0, 1, 2}, std::nullopt}, 0);
  CHECK_FALSE(short_cycle.ok);
  CHECK(short_cycle.reason == Reason::NotSpanning);
  CHECK(reason_name(short_cycle.reason) == "not spanning");

  CHECK(verify_hamilton_cycle(c4, CycleCert{{0, 2, 1, 3}, std::nullopt}, 0).reason == Reason::NonAdjacentPair);
  CHECK(reason_name(Reason::NonAdjacentPair) == "non-adjacent pair");
  // a repeated vertex shows up as the vertex it displaced
  CHECK(verify_hamilton_cycle(c4, CycleCert{{0, 1, 2, 2}, std::nullopt}, 0).reason == Reason::NotSpanning);
  CHECK(verify_hamilton_cycle(c4, CycleCert{{0, 1, 2, 9}, std::nullopt}, 0).reason == Reason::OutOfRange);
  CHECK(verify_hamilton_cycle(c4, CycleCert{{0, 1, 2, 3}, 1234}, 0).reason == Reason::WrongGraph);
  CHECK(verify_hamilton_cycle(c4, CycleCert{{0, 1, 2, 3}, std::nullopt}, 5).reason == Reason::BelowTarget);
  CHECK(verify_hamilton_cycle(c4, CycleCert{{0, 1, 2, 3}, std::nullopt}, 4).ok);
}

TEST_CASE("verify_path verdicts") {
  const OrientedGraph g = brute::from_arcs(3, {{0, 1}, {1, 2}});
  CHECK(verify_path(g, PathCert{{0, 1, 2}, std::nullopt}, 2, true).ok);
  const Verdict missing = verify_path(g, PathCert{{0, 1}, std::nullopt}, 1, true);
  CHECK_FALSE(missing.ok);
  CHECK(missing.reason == Reason::NotSpanning);
  CHECK(verify_path(g, PathCert{{0, 1}, std::nullopt}, 1, false).ok);
  CHECK(verify_path(g, PathCert{{0, 2}, std::nullopt}, 0, false).reason == Reason::NonAdjacentPair);
  CHECK(verify_path(g, PathCert{{0, 1, 2}, std::nullopt}, 3, false).reason == Reason::BelowTarget);
}

TEST_CASE("discrepancy path on two cyclic triangles verifies without spanning") {
  const OrientedGraph g = brute::two_cyclic_triangles();
  CHECK(brute::best_path_sigma_max(g) == 2);
  const PathCert p = discrepancy_path(g);
  CHECK(verify_path(g, p, 2, false).ok);
  CHECK_FALSE(verify_path(g, p, 2, true).ok);
}

TEST_CASE("solver output on the extremal graph passes with target d") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const OrientedGraph g = construction_gnd({7, 4, seed});
    const SolveResult r = max_discrepancy_hamilton(g);
    const Verdict v = verify_hamilton_cycle(g, r.cycle, 4);
    CHECK(v.ok);
    CHECK(v.stats.sigma_max == 4);
    CHECK(brute::best_cycle_sigma_max(g) == 4);
  }
}

TEST_CASE("sigma properties on random cycles") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 3 + static_cast<int>(seed % 9);
    const OrientedGraph g = random_min_degree_oriented(n, (n + 1) / 2, seed);
    const SolveResult r = max_discrepancy_hamilton(g);
    std::vector<VertexId> c = r.cycle.vertices;
    const SigmaStats s = sigma(CycleCert{c, std::nullopt}, g);
    CHECK(s.sigma_plus + s.sigma_minus == n);
    CHECK(s.sigma_plus == brute::forward_arcs(g, c, true));
    CHECK(s.sigma_minus == brute::backward_arcs(g, c, true));
    CHECK(s.sigma_max == std::max(s.sigma_plus, s.sigma_minus));
    CHECK(s.sigma_min == std::min(s.sigma_plus, s.sigma_minus));

    std::vector<VertexId> rev(c.rbegin(), c.rend());
    const SigmaStats sr = sigma(CycleCert{rev, std::nullopt}, g);
    CHECK(sr.sigma_plus == s.sigma_minus);
    CHECK(sr.sigma_minus == s.sigma_plus);
    CHECK(sr.sigma_max == s.sigma_max);
    CHECK(sr.sigma_min == s.sigma_min);

    for (int k = 1; k < n; ++k) {
      std::vector<VertexId> rot = c;
      std::rotate(rot.begin(), rot.begin() + k, rot.end());
      CHECK(sigma(CycleCert{rot, std::nullopt}, g) == s);
    }
    CHECK(canonical_cycle(rev) == canonical_cycle(c));

    PathCert p{std::vector<VertexId>(c.begin(), c.end() - 1), std::nullopt};
    const SigmaStats sp = sigma(p, g);
    CHECK(sp.sigma_plus + sp.sigma_minus == n - 2);
  }
}

TEST_CASE("certificate text") {
  const CycleCert c{{0, 2, 1}, std::nullopt};
  CHECK(format_certificate(c) == "cycle: 0 2 1");
  CHECK(format_certificate(PathCert{{4, 3}, std::nullopt}) == "path: 4 3");
  const Certificate back = parse_certificate("# header\n{\"record\":1}\ncycle: 0 2 1\n");
  REQUIRE(std::holds_alternative<CycleCert>(back));
  CHECK(std::get<CycleCert>(back).vertices == c.vertices);
  const Certificate path = parse_certificate("path: 5\n");
  REQUIRE(std::holds_alternative<PathCert>(path));
  CHECK(std::get<PathCert>(path).vertices == std::vector<VertexId>{5});
  CHECK_THROWS_AS(parse_certificate("nothing here"), CertificateError);
  CHECK_THROWS_AS(parse_certificate("cycle: 0 x 1"), CertificateError);
}

TEST_CASE("canonical cycle") {
  CHECK(canonical_cycle(std::vector<VertexId>{2, 0, 3, 1}) == std::vector<VertexId>{0, 2, 1, 3});
  CHECK(canonical_cycle(std::vector<VertexId>{1, 2, 0}) == std::vector<VertexId>{0, 1, 2});
  CHECK(canonical_cycle(std::vector<VertexId>{0, 2, 1}) == std::vector<VertexId>{0, 1, 2});
}
