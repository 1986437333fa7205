#include "hamdisc/instruments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <thread>

#include "hamdisc/solver.hpp"

namespace hamdisc {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over the combined words
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

OrientedGraph construction_gnd(const GndSpec& spec) {
  const int n = spec.n;
  const int d = spec.d;
  if (d < 1 || d >= n) throw PreconditionError("gnd-parameters", "construction needs n > d >= 1");
  OrientedGraph g(n);
  Rng rng(spec.seed);
  for (VertexId a = 0; a < d; ++a)
    for (VertexId b = a + 1; b < d; ++b) {
      if (rng.coin())
        g.add_arc(a, b);
      else
        g.add_arc(b, a);
    }
  for (VertexId b = d; b < n; ++b)
    for (VertexId a = 0; a < d; ++a) g.add_arc(b, a);
  return g;
}

OrientedGraph random_tournament(int n, std::uint64_t seed) {
  if (n < 1) throw PreconditionError("order", "need n >= 1");
  OrientedGraph g(n);
  Rng rng(seed);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) {
      if (rng.coin())
        g.add_arc(u, v);
      else
        g.add_arc(v, u);
    }
  return g;
}

OrientedGraph random_oriented(int n, std::uint64_t seed) {
  if (n < 1) throw PreconditionError("order", "need n >= 1");
  OrientedGraph g(n);
  Rng rng(seed);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) {
      const std::uint64_t digit = rng.below(3);
      if (digit == 1) g.add_arc(u, v);
      if (digit == 2) g.add_arc(v, u);
    }
  return g;
}

OrientedGraph random_min_degree_oriented(int n, int delta_target, std::uint64_t seed, int max_rejections) {
  if (n < 1) throw PreconditionError("order", "need n >= 1");
  if (delta_target < 0 || delta_target > n - 1)
    throw PreconditionError("infeasible-degree", "delta_target must lie in [0, n-1]");
  if (n == 1) return OrientedGraph(1);
  const double spread = 0.5 * std::sqrt(static_cast<double>(n - 1));
  const double margin = 1.3 * std::sqrt(2.0 * std::log(static_cast<double>(n))) * spread;
  const double p = std::min(1.0, (delta_target + 1 + margin) / static_cast<double>(n - 1));

  Rng rng(seed);
  const auto draw = [&] {
    OrientedGraph g(n);
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v) {
        if (p < 1.0 && rng.uniform() >= p) continue;
        if (rng.coin())
          g.add_arc(u, v);
        else
          g.add_arc(v, u);
      }
    return g;
  };

  OrientedGraph g = draw();
  for (int attempt = 0; attempt < max_rejections && g.min_degree() < delta_target; ++attempt) g = draw();
  if (g.min_degree() >= delta_target) return g;

  // repair: give every deficient vertex random new neighbours
  for (VertexId v = 0; v < n; ++v) {
    while (g.degree(v) < delta_target) {
      std::vector<VertexId> free;
      for (VertexId u = 0; u < n; ++u)
        if (u != v && !g.has_edge(u, v)) free.push_back(u);
      const VertexId u = free[static_cast<std::size_t>(rng.below(free.size()))];
      if (rng.coin())
        g.add_arc(u, v);
      else
        g.add_arc(v, u);
    }
  }
  return g;
}

namespace {

std::optional<AbsorbConfig> try_absorb_config(int n, Rng& rng) {
  const int lo = n / 2 + 1;
  const int hi = n - 2;  // leaves room for |P| = 2 with a directed cycle
  // half the draws sit at the extremal degree with the longest allowed path
  const bool extremal = rng.coin();
  const int target = extremal ? lo : lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
  const int room = n - target;  // ell if the minimum degree lands on target
  const int s_max = std::min(room, target - 1);
  const int s = extremal ? s_max : 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(s_max - 1)));
  const int cycle_back = static_cast<int>(rng.below(static_cast<std::uint64_t>(room - s + 1)));
  const int path_back = static_cast<int>(rng.below(2));

  std::vector<VertexId> order(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  for (std::size_t k = order.size(); k > 1; --k) std::swap(order[k - 1], order[rng.below(k)]);
  const std::vector<VertexId> path(order.begin(), order.begin() + s);
  const std::vector<VertexId> cycle(order.begin() + s, order.end());
  const int m = n - s;

  OrientedGraph g(n);
  const auto orient = [&](VertexId a, VertexId b, bool forward) {
    if (forward)
      g.add_arc(a, b);
    else
      g.add_arc(b, a);
  };
  const bool path_dir = rng.coin();
  const int path_flip = path_back ? static_cast<int>(rng.below(static_cast<std::uint64_t>(s - 1))) : -1;
  for (int t = 0; t + 1 < s; ++t)
    orient(path[static_cast<std::size_t>(t)], path[static_cast<std::size_t>(t) + 1], path_dir != (t == path_flip));
  std::vector<char> flipped(static_cast<std::size_t>(m), 0);
  for (int placed = 0; placed < cycle_back;) {
    const auto at = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(m)));
    if (!flipped[at]) {
      flipped[at] = 1;
      ++placed;
    }
  }
  const bool cycle_dir = rng.coin();
  for (int t = 0; t < m; ++t)
    orient(cycle[static_cast<std::size_t>(t)], cycle[static_cast<std::size_t>((t + 1) % m)],
           cycle_dir != static_cast<bool>(flipped[static_cast<std::size_t>(t)]));

  for (VertexId v = 0; v < n; ++v) {
    while (g.degree(v) < target) {
      std::vector<VertexId> free;
      for (VertexId u = 0; u < n; ++u)
        if (u != v && !g.has_edge(u, v)) free.push_back(u);
      orient(v, free[static_cast<std::size_t>(rng.below(free.size()))], rng.coin());
    }
  }
  const int delta = g.min_degree();
  const int ell = n - delta;
  if (2 * delta < n + 2 || s >= delta || std::min(cycle_back, m - cycle_back) > ell - s) return std::nullopt;
  return AbsorbConfig{std::move(g), PathCert{path, std::nullopt}, CycleCert{cycle, std::nullopt}, ell};
}

}  // namespace

AbsorbConfig random_absorb_config(int n, std::uint64_t seed) {
  if (n < 6 || n > 64) throw PreconditionError("absorb-config", "need 6 <= n <= 64");
  Rng rng(seed);
  for (int attempt = 0; attempt < 10000; ++attempt)
    if (auto config = try_absorb_config(n, rng)) {
      const std::uint64_t id = config->graph.fingerprint();
      config->path.graph_id = id;
      config->cycle.graph_id = id;
      return std::move(*config);
    }
  throw PreconditionError("absorb-config", "no valid configuration drawn");
}

namespace {

struct OracleSearch {
  int n;
  std::uint32_t adj[32];
  std::uint32_t out[32];
  VertexId path[32];
  OracleResult result;

  void dfs(int depth, std::uint32_t visited, int forward) {
    const VertexId last = path[depth - 1];
    if (depth == n) {
      if (!(adj[last] & 1U) || path[1] > path[n - 1]) return;
      const int plus = forward + static_cast<int>(out[last] & 1U);
      const int best_here = std::max(plus, n - plus);
      ++result.cycles;
      if (!result.best || best_here > *result.best) {
        result.best = best_here;
        result.witness = CycleCert{std::vector<VertexId>(path, path + n), std::nullopt};
      }
      return;
    }
    std::uint32_t candidates = adj[last] & ~visited;
    while (candidates) {
      const VertexId v = __builtin_ctz(candidates);
      candidates &= candidates - 1;
      if (depth == n - 1 && v < path[1]) continue;
      path[depth] = v;
      dfs(depth + 1, visited | (1U << v), forward + static_cast<int>((out[last] >> v) & 1U));
      if (result.best && *result.best == n) return;
    }
  }
};

}  // namespace

OracleResult best_discrepancy_exhaustive(const OrientedGraph& g, int cap) {
  const int n = g.order();
  if (n > cap || n > 31) throw PreconditionError("oracle-cap", "oracle is limited to n <= " + std::to_string(cap));
  OracleSearch s{};
  s.n = n;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v) {
      if (g.has_arc(u, v)) s.out[u] |= 1U << v;
      if (g.has_edge(u, v)) s.adj[u] |= 1U << v;
    }
  if (n >= 3) {
    s.path[0] = 0;
    s.dfs(1, 1U, 0);
  }
  if (s.result.witness) s.result.witness->graph_id = g.fingerprint();
  return s.result;
}

std::uint64_t family_size(int n, Family family) {
  const int pairs = n * (n - 1) / 2;
  const std::uint64_t base = family == Family::Oriented ? 3 : 2;
  std::uint64_t size = 1;
  for (int k = 0; k < pairs; ++k) {
    if (size > UINT64_MAX / base) return UINT64_MAX;
    size *= base;
  }
  return size;
}

namespace {

std::vector<std::pair<VertexId, VertexId>> pair_list(int n) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return pairs;
}

// digit 0: absent (oriented) / u->v (tournament); then u->v, v->u
OrientedGraph graph_from_digits(int n, Family family, const std::vector<int>& digits) {
  const auto pairs = pair_list(n);
  OrientedGraph g(n);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const int d = family == Family::Oriented ? digits[k] : digits[k] + 1;
    if (d == 1) g.add_arc(pairs[k].first, pairs[k].second);
    if (d == 2) g.add_arc(pairs[k].second, pairs[k].first);
  }
  return g;
}

std::uint64_t sample_seed(const EnumerationSpec& spec, std::uint64_t id) {
  return derive_seed(derive_seed(spec.seed, static_cast<std::uint64_t>(spec.n)), id);
}

OrientedGraph sample_instance(const EnumerationSpec& spec, std::uint64_t id) {
  const std::uint64_t seed = sample_seed(spec, id);
  for (std::uint64_t attempt = 0; attempt < 100000; ++attempt) {
    const std::uint64_t s = derive_seed(seed, attempt);
    OrientedGraph g = spec.family == Family::Oriented ? random_oriented(spec.n, s) : random_tournament(spec.n, s);
    if (g.min_degree() >= spec.min_degree) return g;
  }
  throw PreconditionError("sample-filter", "min-degree filter rejected 100000 consecutive samples");
}

}  // namespace

void enumerate_instances(const EnumerationSpec& spec, const InstanceVisitor& visit) {
  const int n = spec.n;
  if (n < 1) throw PreconditionError("order", "need n >= 1");
  if (!spec.exhaustive) {
    for (std::uint64_t id = 0; id < spec.samples; ++id) visit(id, sample_instance(spec, id));
    return;
  }
  const std::uint64_t total = family_size(n, spec.family);
  if (total > spec.budget)
    throw PreconditionError("budget", "exhaustive space of " + std::to_string(total) + " instances exceeds budget " +
                                          std::to_string(spec.budget));
  const auto pairs = pair_list(n);
  const int base = spec.family == Family::Oriented ? 3 : 2;
  std::vector<int> digits(pairs.size(), 0);
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  if (spec.family == Family::Tournament) std::fill(deg.begin(), deg.end(), n - 1);
  const auto adjacent = [&](int d) { return spec.family == Family::Tournament || d != 0; };

  for (std::uint64_t code = 0; code < total; ++code) {
    if (*std::min_element(deg.begin(), deg.end()) >= spec.min_degree)
      visit(code, graph_from_digits(n, spec.family, digits));
    // odometer increment, pair 0 least significant
    for (std::size_t k = 0; k < digits.size(); ++k) {
      const int before = digits[k];
      digits[k] = (before + 1) % base;
      const int change = static_cast<int>(adjacent(digits[k])) - static_cast<int>(adjacent(before));
      deg[static_cast<std::size_t>(pairs[k].first)] += change;
      deg[static_cast<std::size_t>(pairs[k].second)] += change;
      if (digits[k] != 0) break;
    }
  }
}

OrientedGraph instance_from_id(const EnumerationSpec& spec, std::uint64_t id) {
  if (!spec.exhaustive) return sample_instance(spec, id);
  const int n = spec.n;
  if (id >= family_size(n, spec.family)) throw PreconditionError("instance-id", "id outside the code space");
  const int base = spec.family == Family::Oriented ? 3 : 2;
  std::vector<int> digits(static_cast<std::size_t>(n * (n - 1) / 2));
  for (int& d : digits) {
    d = static_cast<int>(id % static_cast<std::uint64_t>(base));
    id /= static_cast<std::uint64_t>(base);
  }
  return graph_from_digits(n, spec.family, digits);
}

void SweepReport::merge(const SweepReport& other) {
  instances += other.instances;
  successes += other.successes;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  for (const auto& [k, v] : other.sigma_max_histogram) sigma_max_histogram[k] += v;
  oracle_agreement += other.oracle_agreement;
  invariant_violations += other.invariant_violations;
}

namespace {

void sweep_instance(const OrientedGraph& g, std::uint64_t id, bool oracle, SweepReport& report) {
  const int n = g.order();
  const int delta = g.min_degree();
  ++report.instances;
  const auto fail = [&](std::string reason) { report.failures.push_back(SweepFailure{n, id, std::move(reason)}); };
  try {
    const SolveResult solved = max_discrepancy_hamilton(g);
    const Verdict verdict = verify_hamilton_cycle(g, solved.cycle, delta);
    if (!verdict) return fail("verify: " + std::string(reason_name(verdict.reason)));
    ++report.sigma_max_histogram[verdict.stats.sigma_max];
    if (oracle) {
      const OracleResult best = best_discrepancy_exhaustive(g);
      if (!best.best) return fail("oracle: no hamilton cycle");
      if (*best.best < delta) return fail("oracle: best " + std::to_string(*best.best) + " below delta");
      if (verdict.stats.sigma_max > *best.best) return fail("oracle: solver exceeds oracle best");
      ++report.oracle_agreement;
    }
    ++report.successes;
  } catch (const InternalInvariantViolation& e) {
    ++report.invariant_violations;
    fail(std::string("invariant: ") + e.what());
  } catch (const PreconditionError& e) {
    fail("precondition " + e.code() + ": " + e.what());
  }
}

}  // namespace

SweepReport conjecture_sweep(const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const int jobs = std::max(1, options.jobs);
  for (int n : options.n_values) {
    if (n < 3) throw PreconditionError("sweep-order", "sweep needs n >= 3");
    if (options.oracle && n > kOracleCap)
      throw PreconditionError("oracle-cap", "oracle cross-check needs n <= " + std::to_string(kOracleCap));
    if (options.exhaustive && family_size(n, options.family) > options.budget)
      throw PreconditionError("budget", "exhaustive space for n = " + std::to_string(n) + " exceeds budget");
  }

  std::vector<SweepReport> partial(static_cast<std::size_t>(jobs));
  const auto worker = [&](int t) {
    SweepReport& mine = partial[static_cast<std::size_t>(t)];
    for (int n : options.n_values) {
      EnumerationSpec spec;
      spec.n = n;
      spec.min_degree = (n + 1) / 2;
      spec.family = options.family;
      spec.exhaustive = options.exhaustive;
      spec.samples = options.samples;
      spec.seed = options.seed;
      spec.budget = options.budget;
      std::uint64_t index = 0;
      enumerate_instances(spec, [&](std::uint64_t id, const OrientedGraph& g) {
        if (index++ % static_cast<std::uint64_t>(jobs) == static_cast<std::uint64_t>(t))
          sweep_instance(g, id, options.oracle, mine);
      });
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker, t);
    for (auto& th : threads) th.join();
  }

  SweepReport report;
  for (const SweepReport& p : partial) report.merge(p);
  std::sort(report.failures.begin(), report.failures.end(), [](const SweepFailure& a, const SweepFailure& b) {
    return std::tie(a.n, a.id) < std::tie(b.n, b.id);
  });
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace hamdisc
