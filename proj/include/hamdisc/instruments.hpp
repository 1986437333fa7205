#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hamdisc/certify.hpp"
#include "hamdisc/graph.hpp"

namespace hamdisc {

/// Seeded generator with portable draws (std::mt19937_64's output sequence
/// is fixed by the standard; the distributions on top of it are not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  bool coin() { return (engine_() >> 63) != 0; }
  /// uniform in [0, k)
  std::uint64_t below(std::uint64_t k) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(engine_()) * k) >> 64);
  }
  /// uniform in [0, 1)
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1p-53; }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Mixes a base seed with a stream index into an independent seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Extremal graph: A = {0..d-1} dominates, B = {d..n-1} is independent and
/// every B-A edge points into A; A-internal orientations come from `seed`.
struct GndSpec {
  int n = 0;
  int d = 0;
  std::uint64_t seed = 0;
};

OrientedGraph construction_gnd(const GndSpec& spec);
OrientedGraph random_tournament(int n, std::uint64_t seed);
/// Each vertex pair is absent, u->v or v->u with probability 1/3 each.
OrientedGraph random_oriented(int n, std::uint64_t seed);
/// G(n, p) underlying graph with uniform orientations, p chosen so that
/// min_degree >= delta_target usually holds on the first draw; rejected draws
/// are resampled, and after `max_rejections` deficient vertices are repaired
/// with seeded random arcs.
OrientedGraph random_min_degree_oriented(int n, int delta_target, std::uint64_t seed, int max_rejections = 1000);

/// A (G, P, C, ell) input for absorb_path meeting its preconditions.
struct AbsorbConfig {
  OrientedGraph graph{1};
  PathCert path;
  CycleCert cycle;
  int ell = 0;
};

/// Random path/cycle partition on n vertices (6 <= n <= 64) with the path and
/// cycle orientations planted first and extra edges added at deficient
/// vertices; draws that miss the preconditions are redrawn.
AbsorbConfig random_absorb_config(int n, std::uint64_t seed);

struct OracleResult {
  std::optional<int> best;  // max sigma_max over all Hamilton cycles
  std::optional<CycleCert> witness;
  std::uint64_t cycles = 0;  // Hamilton cycles enumerated
};

inline constexpr int kOracleCap = 10;

/// Enumerates every Hamilton cycle once (first vertex fixed to 0, second
/// vertex below the last) with adjacency-prefix pruning.
OracleResult best_discrepancy_exhaustive(const OrientedGraph& g, int cap = kOracleCap);

enum class Family { Oriented, Tournament };

struct EnumerationSpec {
  int n = 3;
  int min_degree = 0;
  Family family = Family::Oriented;
  bool exhaustive = true;
  std::uint64_t samples = 0;  // sample mode only
  std::uint64_t seed = 0;     // sample mode only
  std::uint64_t budget = 14348907;  // 3^15: all oriented graphs on 6 vertices
};

using InstanceVisitor = std::function<void(std::uint64_t id, const OrientedGraph& g)>;

/// Exhaustive mode visits every labelled graph of the family on n vertices
/// passing the min-degree filter exactly once, with id = its code (base 3 per
/// pair for oriented graphs, base 2 for tournaments). Sample mode visits
/// `samples` seeded instances with id = sample index.
void enumerate_instances(const EnumerationSpec& spec, const InstanceVisitor& visit);

/// Rebuilds one instance from its id, for replaying failures.
OrientedGraph instance_from_id(const EnumerationSpec& spec, std::uint64_t id);

/// Number of vertex pairs, and the code space of the family.
std::uint64_t family_size(int n, Family family);

struct SweepOptions {
  std::vector<int> n_values;
  Family family = Family::Oriented;
  bool exhaustive = true;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  bool oracle = false;
  int jobs = 1;
  std::uint64_t budget = 14348907;
};

struct SweepFailure {
  int n = 0;
  std::uint64_t id = 0;
  std::string reason;
};

struct SweepReport {
  std::uint64_t instances = 0;
  std::uint64_t successes = 0;
  std::vector<SweepFailure> failures;
  std::map<int, std::uint64_t> sigma_max_histogram;
  std::uint64_t oracle_agreement = 0;
  std::uint64_t invariant_violations = 0;
  double elapsed_seconds = 0;

  void merge(const SweepReport& other);
};

/// For every instance with min_degree >= n/2: solve, verify against
/// min_degree, and (optionally) compare with the oracle.
SweepReport conjecture_sweep(const SweepOptions& options);

}  // namespace hamdisc
