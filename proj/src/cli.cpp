#include "hamdisc/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <chrono>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <sstream>

#include "hamdisc/certify.hpp"
#include "hamdisc/instruments.hpp"
#include "hamdisc/solver.hpp"

namespace hamdisc::cli {

using Record = nlohmann::ordered_json;

namespace {

[[noreturn]] void usage(const std::string& message) { throw PreconditionError("usage", message); }

int parse_int(std::string_view text) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) usage("expected an integer, got '" + std::string(text) + "'");
  return value;
}

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  return read_file(path);
}

void emit(const CommandSpec& spec, std::ostream& out, const std::string& text) {
  if (spec.output.empty())
    out << text;
  else
    write_file(spec.output, text);
}

void add_stats(Record& r, const SigmaStats& s) {
  r["sigma_plus"] = s.sigma_plus;
  r["sigma_minus"] = s.sigma_minus;
  r["sigma_max"] = s.sigma_max;
  r["sigma_min"] = s.sigma_min;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

OrientedGraph load_graph(const CommandSpec& spec) { return parse_graph(read_input(spec.input), spec.format); }

int run_gen(const CommandSpec& spec, std::ostream& out) {
  if (!spec.seed) usage("gen needs --seed");
  if (spec.n < 1) usage("gen needs --n >= 1");
  OrientedGraph g(1);
  if (spec.construction == "gnd")
    g = construction_gnd(GndSpec{spec.n, spec.d, *spec.seed});
  else if (spec.construction == "tournament")
    g = random_tournament(spec.n, *spec.seed);
  else if (spec.construction == "oriented")
    g = random_oriented(spec.n, *spec.seed);
  else if (spec.construction == "min-degree")
    g = random_min_degree_oriented(spec.n, spec.d, *spec.seed);
  else
    usage("unknown construction '" + spec.construction + "'");
  const GraphFormat fmt = spec.format == GraphFormat::Auto ? GraphFormat::EdgeList : spec.format;
  std::string text = format_graph(g, fmt);
  if (text.empty() || text.back() != '\n') text += '\n';
  emit(spec, out, text);
  return kOk;
}

int run_solve(const CommandSpec& spec, std::ostream& out, std::ostream& err) {
  const OrientedGraph g = load_graph(spec);
  const auto t0 = std::chrono::steady_clock::now();
  const SolveResult result = max_discrepancy_hamilton(g);
  const double elapsed = seconds_since(t0);
  const int delta = g.min_degree();
  if (spec.trace) {
    for (const TraceEvent& e : result.trace.events) {
      Record r;
      r["record"] = "trace";
      r["n"] = e.n;
      r["ell"] = e.ell;
      r["branch"] = branch_name(e.branch);
      r["sigma_minus"] = e.sigma_minus;
      r["outside"] = e.outside;
      r["outside_label"] = e.outside < 0 ? -1 : e.outside + 1;
      err << r.dump() << '\n';
    }
  }
  Record r;
  r["record"] = "solve";
  r["n"] = g.order();
  r["delta"] = delta;
  r["ell"] = g.order() - delta;
  add_stats(r, result.stats);
  r["base_order"] = result.trace.base_order;
  r["depth"] = result.trace.depth;
  r["branches"] = result.trace.histogram();
  r["verified"] = true;
  if (spec.timing) r["elapsed"] = elapsed;
  const std::string cert = format_certificate(result.cycle) + '\n';
  if (spec.output.empty()) {
    out << cert;
  } else {
    write_file(spec.output, cert);
  }
  out << r.dump() << '\n';
  return kOk;
}

int run_path(const CommandSpec& spec, std::ostream& out) {
  const OrientedGraph g = load_graph(spec);
  const PathCert path = discrepancy_path(g);
  const int delta = g.min_degree();
  const Verdict v = verify_path(g, path, delta, 2 * delta >= g.order());
  if (!v) throw InternalInvariantViolation("path failed verification", format_certificate(path));
  Record r;
  r["record"] = "path";
  r["n"] = g.order();
  r["delta"] = delta;
  r["length"] = path.vertices.size();
  add_stats(r, v.stats);
  r["spanning"] = static_cast<int>(path.vertices.size()) == g.order();
  r["verified"] = true;
  const std::string cert = format_certificate(path) + '\n';
  if (spec.output.empty())
    out << cert;
  else
    write_file(spec.output, cert);
  out << r.dump() << '\n';
  return kOk;
}

int run_verify(const CommandSpec& spec, std::ostream& out) {
  if (spec.certificate.empty()) usage("verify needs a certificate file");
  const OrientedGraph g = load_graph(spec);
  const Certificate cert = parse_certificate(read_file(spec.certificate));
  const int target = spec.target.value_or(g.min_degree());
  Record r;
  r["record"] = "verify";
  Verdict v;
  if (const auto* c = std::get_if<CycleCert>(&cert)) {
    r["kind"] = "cycle";
    v = verify_hamilton_cycle(g, *c, target);
  } else {
    r["kind"] = "path";
    const bool spanning = spec.spanning.value_or(2 * g.min_degree() >= g.order());
    r["require_spanning"] = spanning;
    v = verify_path(g, std::get<PathCert>(cert), target, spanning);
  }
  r["ok"] = v.ok;
  r["reason"] = reason_name(v.reason);
  r["target"] = target;
  if (!v.detail.empty()) r["detail"] = v.detail;
  if (v.ok || v.reason == Reason::BelowTarget) add_stats(r, v.stats);
  out << r.dump() << '\n';
  return v.ok ? kOk : kVerifyFailed;
}

int run_oracle(const CommandSpec& spec, std::ostream& out) {
  const OrientedGraph g = load_graph(spec);
  const OracleResult o = best_discrepancy_exhaustive(g, spec.cap);
  Record r;
  r["record"] = "oracle";
  r["n"] = g.order();
  r["delta"] = g.min_degree();
  r["best"] = o.best ? Record(*o.best) : Record(nullptr);
  r["cycles"] = o.cycles;
  if (o.witness) {
    const std::string cert = format_certificate(*o.witness) + '\n';
    if (spec.output.empty())
      out << cert;
    else
      write_file(spec.output, cert);
  }
  out << r.dump() << '\n';
  return kOk;
}

int run_sweep(const CommandSpec& spec, std::ostream& out) {
  if (spec.n_values.empty()) usage("sweep needs --n");
  if (!spec.exhaustive && spec.samples == 0) usage("sweep needs --exhaustive or --samples");
  if (!spec.exhaustive && !spec.seed) usage("sampled sweep needs --seed");
  SweepOptions o;
  o.n_values = spec.n_values;
  o.family = spec.tournaments ? Family::Tournament : Family::Oriented;
  o.exhaustive = spec.exhaustive;
  o.samples = spec.samples;
  o.seed = spec.seed.value_or(0);
  o.oracle = spec.oracle;
  o.jobs = spec.jobs;
  const SweepReport report = conjecture_sweep(o);
  std::ostringstream os;
  for (const SweepFailure& f : report.failures) {
    Record r;
    r["record"] = "failure";
    r["n"] = f.n;
    r["id"] = f.id;
    r["reason"] = f.reason;
    os << r.dump() << '\n';
  }
  Record r;
  r["record"] = "summary";
  r["n"] = spec.n_values;
  r["family"] = spec.tournaments ? "tournament" : "oriented";
  r["mode"] = spec.exhaustive ? "exhaustive" : "sample";
  r["instances"] = report.instances;
  r["successes"] = report.successes;
  r["failures"] = report.failures.size();
  r["invariant_violations"] = report.invariant_violations;
  r["oracle_agreement"] = report.oracle_agreement;
  Record hist = Record::object();
  for (const auto& [k, v] : report.sigma_max_histogram) hist[std::to_string(k)] = v;
  r["sigma_max_histogram"] = hist;
  if (spec.timing) r["elapsed"] = report.elapsed_seconds;
  os << r.dump() << '\n';
  emit(spec, out, os.str());
  return report.failures.empty() ? kOk : kVerifyFailed;
}

int run_diag(const CommandSpec& spec, std::ostream& out) {
  if (spec.certificate.empty()) usage("diag needs a certificate file");
  const OrientedGraph g = load_graph(spec);
  const Certificate cert = parse_certificate(read_file(spec.certificate));
  const auto* c = std::get_if<CycleCert>(&cert);
  if (!c) usage("diag needs a cycle certificate");
  const IntervalReport rep = diagnostics(g, *c, spec.w);
  Record r;
  r["record"] = "diag";
  r["n"] = rep.n;
  r["delta"] = rep.delta;
  r["ell"] = rep.ell;
  r["sigma"] = rep.sigma;
  r["w"] = rep.w;
  r["flipped"] = rep.flipped;
  r["rotation"] = rep.rotation;
  r["cycle"] = rep.cycle;
  r["W"] = rep.W;
  r["i_star"] = rep.i_star ? Record(*rep.i_star) : Record(nullptr);
  r["forced_orientation_holds"] = rep.forced_orientation_holds;
  r["J"] = rep.J;
  Record intervals = Record::array();
  for (std::size_t j = 0; j < rep.intervals.size(); ++j)
    intervals.push_back({{"a", rep.intervals[j].a}, {"t", rep.intervals[j].t}, {"m", rep.m[j]}});
  r["intervals"] = intervals;
  r["q"] = rep.q;
  r["sum_t"] = rep.sum_t;
  r["sum_t_ok"] = rep.sum_t_ok();
  r["sum_m"] = rep.sum_m;
  r["sum_m_ok"] = rep.sum_m_ok();
  r["pair_checks_ok"] = rep.pair_checks_ok();
  std::string text = r.dump() + '\n';
  if (spec.trace) text += rep.to_text();
  emit(spec, out, text);
  return kOk;
}

}  // namespace

std::vector<int> parse_n_range(const std::string& text) {
  std::vector<int> values;
  if (const std::size_t dots = text.find(".."); dots != std::string::npos) {
    const int a = parse_int(std::string_view(text).substr(0, dots));
    const int b = parse_int(std::string_view(text).substr(dots + 2));
    if (a > b) usage("empty range '" + text + "'");
    for (int n = a; n <= b; ++n) values.push_back(n);
    return values;
  }
  std::string_view rest = text;
  while (!rest.empty()) {
    const std::size_t comma = rest.find(',');
    values.push_back(parse_int(rest.substr(0, comma)));
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
  }
  if (values.empty()) usage("empty --n");
  return values;
}

CommandSpec parse_command(const std::vector<std::string>& args, std::string* help) {
  CommandSpec spec;
  CLI::App app{"Hamilton cycles of large oriented discrepancy", "hamdisc"};
  app.require_subcommand(1);
  std::string format = "auto";
  std::string n_text;
  std::uint64_t seed = 0;
  int target = 0;
  bool spanning = false;
  bool no_spanning = false;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "edge-list | digraph6 | auto");
    sub->add_option("-o,--output", spec.output, "output file (default stdout)");
  };
  CLI::App* gen = app.add_subcommand("gen", "write a generated instance");
  common(gen);
  gen->add_option("--construction", spec.construction, "gnd | tournament | oriented | min-degree");
  gen->add_option("--n", spec.n, "vertex count")->required();
  gen->add_option("--d", spec.d, "size of A for gnd, minimum degree for min-degree");
  CLI::Option* gen_seed = gen->add_option("--seed", seed, "generator seed");

  CLI::App* solve = app.add_subcommand("solve", "Hamilton cycle with sigma_max >= min degree");
  common(solve);
  solve->add_option("input", spec.input, "graph file or -");
  solve->add_flag("--trace", spec.trace, "emit the solve trace on stderr");
  solve->add_flag("--timing", spec.timing, "include elapsed time in the record");
  solve->add_option("--dump", spec.dump, "file receiving invariant-violation dumps");

  CLI::App* path = app.add_subcommand("path", "path with sigma_max >= min degree");
  common(path);
  path->add_option("input", spec.input, "graph file or -");
  path->add_option("--dump", spec.dump, "file receiving invariant-violation dumps");

  CLI::App* verify = app.add_subcommand("verify", "check a certificate against a graph");
  common(verify);
  verify->add_option("input", spec.input, "graph file or -")->required();
  verify->add_option("certificate", spec.certificate, "certificate file")->required();
  CLI::Option* verify_target = verify->add_option("--target", target, "required sigma_max (default: min degree)");
  verify->add_flag("--spanning", spanning, "require a spanning path");
  verify->add_flag("--no-spanning", no_spanning, "accept non-spanning paths");

  CLI::App* oracle = app.add_subcommand("oracle", "best sigma_max over all Hamilton cycles");
  common(oracle);
  oracle->add_option("input", spec.input, "graph file or -");
  oracle->add_option("--cap", spec.cap, "largest n accepted");

  CLI::App* sweep = app.add_subcommand("sweep", "solve, verify and cross-check an instance family");
  common(sweep);
  sweep->add_option("--n", n_text, "a..b, a,b,c or a")->required();
  sweep->add_flag("--exhaustive", spec.exhaustive, "every labelled instance");
  sweep->add_option("--samples", spec.samples, "seeded samples per n");
  CLI::Option* sweep_seed = sweep->add_option("--seed", seed, "sample seed");
  sweep->add_flag("--oracle", spec.oracle, "compare with the exhaustive oracle");
  sweep->add_flag("--tournaments", spec.tournaments, "restrict to tournaments");
  sweep->add_option("--jobs", spec.jobs, "worker threads")->check(CLI::Range(1, 256));
  sweep->add_flag("--timing", spec.timing, "include elapsed time in the summary");

  CLI::App* diag = app.add_subcommand("diag", "interval report of an (n-1)-cycle and outside vertex");
  common(diag);
  diag->add_option("input", spec.input, "graph file or -")->required();
  diag->add_option("certificate", spec.certificate, "cycle certificate on n - 1 vertices")->required();
  diag->add_option("--w", spec.w, "outside vertex")->required();
  diag->add_flag("--text", spec.trace, "append the 1-based text report");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream e2;
    if (app.exit(e, o, e2) == 0 && help) {
      *help = o.str();
      return spec;
    }
    usage(e.what());
  }

  const std::pair<CLI::App*, Subcommand> table[] = {
      {gen, Subcommand::Gen},       {solve, Subcommand::Solve},   {path, Subcommand::Path},
      {verify, Subcommand::Verify}, {oracle, Subcommand::Oracle}, {sweep, Subcommand::Sweep},
      {diag, Subcommand::Diag}};
  for (const auto& [sub, kind] : table)
    if (sub->parsed()) spec.subcommand = kind;
  spec.format = parse_format_name(format);
  if (gen_seed->count() || sweep_seed->count()) spec.seed = seed;
  if (verify_target->count()) spec.target = target;
  if (spanning && no_spanning) usage("--spanning and --no-spanning are exclusive");
  if (spanning) spec.spanning = true;
  if (no_spanning) spec.spanning = false;
  if (!n_text.empty()) spec.n_values = parse_n_range(n_text);
  return spec;
}

int run(const CommandSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    switch (spec.subcommand) {
      case Subcommand::Gen: return run_gen(spec, out);
      case Subcommand::Solve: return run_solve(spec, out, err);
      case Subcommand::Path: return run_path(spec, out);
      case Subcommand::Verify: return run_verify(spec, out);
      case Subcommand::Oracle: return run_oracle(spec, out);
      case Subcommand::Sweep: return run_sweep(spec, out);
      case Subcommand::Diag: return run_diag(spec, out);
    }
  } catch (const PreconditionError& e) {
    err << "error [" << e.code() << "]: " << e.what() << '\n';
    return kUsage;
  } catch (const CertificateError& e) {
    err << "error [certificate]: " << e.what() << '\n';
    return kUsage;
  } catch (const InternalInvariantViolation& e) {
    try {
      write_file(spec.dump, std::string(e.what()) + '\n' + e.dump());
      err << "internal invariant violation: " << e.what() << " (dump written to " << spec.dump << ")\n";
    } catch (const PreconditionError&) {
      err << "internal invariant violation: " << e.what() << '\n' << e.dump();
    }
    return kInvariant;
  }
  return kUsage;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandSpec spec;
  std::string help;
  try {
    spec = parse_command(args, &help);
  } catch (const PreconditionError& e) {
    err << "error [" << e.code() << "]: " << e.what() << '\n';
    return kUsage;
  }
  if (!help.empty()) {
    out << help;
    return kOk;
  }
  return run(spec, out, err);
}

}  // namespace hamdisc::cli
