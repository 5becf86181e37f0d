#include "qadsim/cli/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <unistd.h>

#include <CLI11.hpp>

#include "qadsim/cli/run_config.hpp"
#include "qadsim/decision/report.hpp"
#include "qadsim/decision/sampling.hpp"
#include "qadsim/diophantine/parser.hpp"
#include "qadsim/error.hpp"
#include "qadsim/hamiltonian/spectrum.hpp"
#include "qadsim/kernels/kernels.hpp"

namespace qadsim::cli {

namespace fs = std::filesystem;
using nlohmann::json;

void write_atomic(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw Error("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

int threads_from_env() {
  const char* v = std::getenv("QADSIM_THREADS");
  if (!v) return 0;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || n <= 0 || n > 4096) return 0;
  return static_cast<int>(n);
}

namespace {

// Flag values; only the ones given on the command line override the config.
struct Flags {
  std::optional<std::string> config_path;
  std::optional<std::string> equation;
  std::optional<std::string> out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> cutoff;
  std::optional<double> T0;
  std::optional<int> jmax;
  std::optional<double> step;
  std::optional<std::string> integrator;
  std::optional<std::string> semantics;
  bool strict = false;
  bool reproducible = false;
  std::optional<double> T;
  std::optional<std::int64_t> bound;
  std::optional<std::vector<double>> alphas;
  std::optional<std::vector<std::int64_t>> cutoffs;
  std::optional<std::size_t> grid;
  std::optional<std::size_t> levels;
  std::optional<std::uint64_t> shots;           // sample
  std::optional<std::uint64_t> decision_shots;  // decide
  std::optional<std::vector<double>> extrapolation_steps;
  bool extrapolate = false;
  bool dump_probabilities = false;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("equation", f.equation, "Diophantine equation, e.g. \"x + y = 5\"");
  sub->add_option("--config", f.config_path, "JSON run configuration");
  sub->add_option("--out", f.out_dir, "output directory");
  sub->add_option("--seed", f.seed, "random seed");
  sub->add_option("--cutoff", f.cutoff, "per-mode occupation cutoff N_max");
  sub->add_option("--T0", f.T0, "first run time of the T schedule");
  sub->add_option("--jmax", f.jmax, "schedule T0 * 2^j for j = 0..jmax");
  sub->add_option("--step", f.step, "integrator step h");
  sub->add_option("--integrator", f.integrator, "rk4 or midexp")
      ->check(CLI::IsMember({"rk4", "midexp"}));
  sub->add_option("--semantics", f.semantics, "nonneg or positive")
      ->check(CLI::IsMember({"nonneg", "positive"}));
  sub->add_flag("--strict-criterion", f.strict, "apply >1/2 to the single top state");
  sub->add_flag("--reproducible", f.reproducible,
                "reproducibility mode (thread count from QADSIM_THREADS)");
  sub->add_option("--alpha", f.alphas, "real displacement per mode (one value applies to all)");
}

RunConfig resolve(const Flags& f) {
  RunConfig c = f.config_path ? load_run_config(*f.config_path) : RunConfig{};
  if (f.equation) c.equation = *f.equation;
  if (f.out_dir) c.out_dir = *f.out_dir;
  if (f.seed) c.decision.seed = *f.seed;
  if (f.cutoff) c.decision.cutoff = *f.cutoff;
  if (f.T0) c.decision.T0 = *f.T0;
  if (f.jmax) c.decision.j_max = *f.jmax;
  if (f.step) c.decision.step = *f.step;
  if (f.integrator) c.decision.integrator = integrator_from_string(*f.integrator);
  if (f.semantics) c.decision.semantics = semantics_from_string(*f.semantics);
  if (f.strict) c.decision.criterion = CriterionMode::StrictSingleState;
  if (f.reproducible) c.reproducible = true;
  if (f.T) c.T = *f.T;
  if (f.bound) c.bound = *f.bound;
  if (f.alphas) {
    c.decision.alphas.clear();
    for (double a : *f.alphas) c.decision.alphas.emplace_back(a, 0.0);
  }
  if (f.cutoffs) c.cutoffs = *f.cutoffs;
  if (f.grid) c.grid_size = *f.grid;
  if (f.levels) c.levels = *f.levels;
  if (f.shots) c.sample_shots = *f.shots;
  if (f.decision_shots) c.decision.shots = *f.decision_shots;
  if (f.extrapolation_steps) c.extrapolation_steps = *f.extrapolation_steps;
  if (f.extrapolate) c.decision.extrapolate = true;
  if (f.dump_probabilities) c.dump_probabilities = true;
  c.validate();
  if (c.equation.empty()) throw ConfigError("no equation given (positional or config \"equation\")");
  return c;
}

std::string point_text(const Point& p) {
  std::ostringstream s;
  s << '(';
  for (std::size_t i = 0; i < p.size(); ++i) s << (i ? "," : "") << p[i];
  s << ')';
  return s.str();
}

std::string csv_of(const std::function<void(std::ostream&)>& write) {
  std::ostringstream s;
  write(s);
  return s.str();
}

struct Problem {
  Polynomial input;
  Polynomial occupation;
};

Problem load_problem(const RunConfig& c) {
  Polynomial p = parse(c.equation);
  Polynomial q = substitute_shift(p, c.decision.semantics);
  return {std::move(p), std::move(q)};
}

std::vector<cplx> alphas_for(const RunConfig& c, std::size_t k) {
  auto a = c.decision.alphas;
  if (a.empty()) return default_alphas(k);
  if (a.size() == 1 && k > 1) a.assign(k, a.front());
  if (a.size() != k) throw ConfigError("need one alpha per variable");
  return a;
}

struct Setup {
  FockBasis basis;
  AdiabaticFamily family;
  StateVector init;
};

Setup build_setup(const RunConfig& c, const Polynomial& occupation) {
  FockBasis basis(occupation.num_vars(), c.decision.cutoff);
  if (basis.dimension() > kMaxDenseDimension) {
    throw ConfigError("dimension " + std::to_string(basis.dimension()) + " exceeds " +
                      std::to_string(kMaxDenseDimension));
  }
  auto alphas = alphas_for(c, occupation.num_vars());
  InitialHamiltonian hi = build_initial_hamiltonian(basis, alphas);
  StateVector init = ground_state(hi.hamiltonian).vector;
  AdiabaticFamily family(std::move(hi.hamiltonian), problem_levels(occupation, basis),
                         c.decision.schedule);
  return {basis, std::move(family), std::move(init)};
}

EvolutionTrace run_evolution(const RunConfig& c, const Setup& s) {
  EvolutionParams params;
  params.total_time = c.run_time();
  params.step = std::min(c.decision.step, params.total_time);
  params.integrator = c.decision.integrator;
  params.record_grid = c.record_grid;
  return evolve(s.family, s.init, params);
}

double ground_class_probability(const std::vector<double>& p, const AdiabaticFamily& f) {
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (f.levels()[i] == f.ground_level()) sum += p[i];
  }
  return sum;
}

// The output directory says where a report went, not what produced it, so it
// lives in the sidecar with the other non-content fields.
json with_run_config(json doc, const RunConfig& c) {
  json config = to_json(c);
  config.erase("out_dir");
  doc["run_config"] = std::move(config);
  doc["sidecar"]["out_dir"] = c.out_dir;
  stamp_hash(doc);
  return doc;
}

// Subcommands ----------------------------------------------------------------

int cmd_check(const RunConfig& c, std::ostream& out) {
  const Polynomial p = parse(c.equation);
  out << "input:     " << c.equation << '\n';
  out << "canonical: " << p.to_string() << " = 0\n";
  out << "variables: ";
  for (std::size_t i = 0; i < p.num_vars(); ++i) out << (i ? ", " : "") << p.variables()[i];
  out << "\nk = " << p.num_vars() << ", degree = " << p.degree() << '\n';
  if (c.decision.semantics == Semantics::Positive) {
    out << "occupation form (x -> x+1): " << substitute_shift(p, Semantics::Positive).to_string()
        << '\n';
  }
  return kExitOk;
}

int cmd_oracle(const RunConfig& c, std::ostream& out) {
  const auto [p, q] = load_problem(c);
  const std::int64_t lo = c.decision.semantics == Semantics::Positive ? 1 : 0;
  auto w = brute_force_search(q, c.bound - lo, c.decision.limits);
  if (w) {
    if (lo == 1) {
      for (auto& v : *w) ++v;
    }
    out << point_text(*w) << '\n';
  } else {
    out << "none within bound " << c.bound << '\n';
  }
  return kExitOk;
}

int cmd_spectrum(const RunConfig& c, std::ostream& out) {
  const auto problem = load_problem(c);
  const Setup s = build_setup(c, problem.occupation);
  SpectralOptions opts;
  opts.grid_size = c.grid_size;
  opts.levels = std::min(c.levels, s.basis.dimension());
  opts.gap_tolerance = c.gap_tolerance;
  const SpectralProfile prof = spectral_profile(s.family, opts);
  const fs::path path = fs::path(c.out_dir) / "spectrum.csv";
  write_atomic(path, csv_of([&](std::ostream& o) { write_csv(prof, o); }));
  out << "wrote " << path.string() << " (" << prof.s.size() << " rows)\n";
  out << "min gap " << prof.min_gap << " at s = " << prof.min_gap_s
      << (prof.endpoint_excluded ? " (s=1 excluded: degenerate H_P ground level)" : "") << '\n';
  if (prof.crossing_suspected) out << "crossing suspected: min gap below " << prof.gap_tolerance << '\n';
  return kExitOk;
}

int cmd_evolve(const RunConfig& c, std::ostream& out) {
  const auto problem = load_problem(c);
  const Setup s = build_setup(c, problem.occupation);
  const EvolutionTrace trace = run_evolution(c, s);
  const fs::path path = fs::path(c.out_dir) / "trace.csv";
  write_atomic(path, csv_of([&](std::ostream& o) { write_csv(trace, o); }));
  out << "wrote " << path.string() << " (" << trace.snapshots.size() << " snapshots, "
      << trace.steps << " steps)\n";

  if (c.dump_probabilities) {
    json snaps = json::array();
    for (const auto& snap : trace.snapshots) {
      snaps.push_back({{"t", snap.t}, {"norm_error", snap.norm_error},
                       {"probabilities", snap.probabilities}});
    }
    json doc = {{"schema", kReportSchemaVersion},
                {"basis", {{"modes", s.basis.num_modes()}, {"cutoff", s.basis.cutoff()},
                           {"dimension", s.basis.dimension()}}},
                {"snapshots", std::move(snaps)}};
    const fs::path pj = fs::path(c.out_dir) / "probabilities.json";
    write_atomic(pj, with_run_config(std::move(doc), c).dump(1) + "\n");
    out << "wrote " << pj.string() << '\n';
  }

  const auto p = trace.final_state.probabilities();
  const Candidate top = top_candidate(p, s.family, c.decision.tie_tol);
  out << "T = " << c.run_time() << ": top state " << point_text(top.top_occupation)
      << " p = " << top.top_probability << ", ground-class p = "
      << ground_class_probability(p, s.family) << ", max norm error " << trace.max_norm_error
      << '\n';

  if (!c.extrapolation_steps.empty()) {
    std::vector<std::size_t> ground;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (s.family.levels()[i] == s.family.ground_level()) ground.push_back(i);
    }
    const Extrapolation e = extrapolate_to_zero_step(s.family, s.init, c.run_time(),
                                                     c.extrapolation_steps, ground,
                                                     c.decision.integrator);
    out << "zero-step extrapolated ground-class p = " << e.value << " +- " << e.error_estimate;
    if (e.order) out << " (observed order " << *e.order << ")";
    out << '\n';
  }
  return kExitOk;
}

int cmd_decide(const RunConfig& c, std::ostream& out) {
  const auto problem = load_problem(c);
  const DecisionReport r = decide(problem.input, c.decision, c.equation);
  const fs::path path = fs::path(c.out_dir) / "report.json";
  write_atomic(path, with_run_config(to_json(r), c).dump(2) + "\n");

  out << "equation: " << r.equation << "  (canonical " << r.canonical << " = 0)\n";
  for (const auto& a : r.attempts) {
    out << "  T = " << a.T << ": top " << point_text(a.candidate.top_occupation)
        << " p = " << a.candidate.top_probability << ", class p = "
        << a.candidate.class_probability << (a.identified ? "  -> identified" : "") << '\n';
  }
  out << "verdict: " << to_string(r.verdict);
  if (r.witness) out << ' ' << point_text(*r.witness);
  out << "  [" << to_string(r.config.criterion) << "]\n";
  if (r.oracle && r.candidate && !r.oracle->candidate_is_ground) {
    out << "note: identified class is not the box ground level (oracle min D^2 = "
        << to_string(r.oracle->min_square) << ")\n";
  }
  out << "wrote " << path.string() << '\n';
  return r.verdict == Verdict::Inconclusive ? kExitInconclusive : kExitOk;
}

int cmd_sample(const RunConfig& c, std::ostream& out) {
  const auto problem = load_problem(c);
  const Setup s = build_setup(c, problem.occupation);
  const EvolutionTrace trace = run_evolution(c, s);
  const MeasurementRun run = sample_measurements(trace.final_state, c.sample_shots, c.decision.seed);
  const fs::path path = fs::path(c.out_dir) / "measurements.csv";
  write_atomic(path, csv_of([&](std::ostream& o) { write_csv(run, o); }));

  std::size_t top = 0;
  for (std::size_t i = 1; i < run.counts.size(); ++i) {
    if (run.counts[i] > run.counts[top]) top = i;
  }
  out << run.shots << " shots (seed " << run.seed << "): most frequent "
      << point_text(s.basis.occupations(top)) << " f = " << run.frequencies[top]
      << " (exact " << run.exact[top] << ")\n";
  out << "wrote " << path.string() << '\n';
  return kExitOk;
}

int cmd_sweep(const RunConfig& c, std::ostream& out) {
  const auto problem = load_problem(c);
  std::vector<std::int64_t> cutoffs = c.cutoffs;
  if (cutoffs.empty()) cutoffs = {c.decision.cutoff};
  const SweepResult sweep = truncation_sweep(problem.input, cutoffs, c.decision, c.equation);
  const fs::path path = fs::path(c.out_dir) / "sweep.json";
  write_atomic(path, with_run_config(to_json(sweep), c).dump(2) + "\n");
  for (const auto& r : sweep.reports) {
    out << "cutoff " << r.config.cutoff << ": " << to_string(r.verdict);
    if (r.witness) out << ' ' << point_text(*r.witness);
    out << '\n';
  }
  out << (sweep.stable ? "stable" : "not stable") << " across the last two cutoffs\n";
  out << "wrote " << path.string() << '\n';
  return sweep.reports.back().verdict == Verdict::Inconclusive ? kExitInconclusive : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Adiabatic-evolution simulator for Diophantine decision problems"};
  app.require_subcommand(1);
  Flags f;

  struct Entry {
    CLI::App* sub;
    std::function<int(const RunConfig&, std::ostream&)> run;
  };
  std::vector<Entry> entries;
  auto add = [&](const char* name, const char* help, auto fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub, f);
    entries.push_back({sub, fn});
    return sub;
  };

  add("check", "parse and print the canonical form", cmd_check);
  add("oracle", "brute-force search for a solution in [0,bound]^k", cmd_oracle)
      ->add_option("--bound", f.bound, "search bound");
  auto* spectrum = add("spectrum", "spectral profile of H(s) to spectrum.csv", cmd_spectrum);
  spectrum->add_option("--grid", f.grid, "number of s grid points");
  spectrum->add_option("--levels", f.levels, "number of lowest levels");
  auto* ev = add("evolve", "adiabatic evolution at one T to trace.csv", cmd_evolve);
  ev->add_option("--T", f.T, "run time");
  ev->add_option("--extrapolate-steps", f.extrapolation_steps,
                 "step sizes for zero-step extrapolation, e.g. 0.1,0.05,0.025")
      ->delimiter(',');
  ev->add_flag("--dump-probabilities", f.dump_probabilities, "also write probabilities.json");
  auto* dec = add("decide", "full decision loop to report.json", cmd_decide);
  dec->add_flag("--extrapolate", f.extrapolate, "test the zero-step extrapolated probability");
  dec->add_option("--shots", f.decision_shots, "apply the criterion to simulated measurement frequencies");
  auto* sample = add("sample", "simulated repeated measurement to measurements.csv", cmd_sample);
  sample->add_option("--T", f.T, "run time");
  sample->add_option("--shots", f.shots, "number of measurements");
  add("sweep", "decide at several cutoffs to sweep.json", cmd_sweep)
      ->add_option("--cutoffs", f.cutoffs, "ascending cutoffs, e.g. 3,5,7")
      ->delimiter(',');

  std::vector<const char*> argv;
  argv.push_back("qadsim");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    RunConfig config = resolve(f);
    if (config.reproducible) {
      if (int n = threads_from_env(); n > 0) kernels::set_threads(n);
    }
    for (const auto& e : entries) {
      if (e.sub->parsed()) return e.run(config, out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const WorkCapError& e) {
    err << "work cap: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace qadsim::cli
