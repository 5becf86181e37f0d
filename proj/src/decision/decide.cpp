#include "qadsim/decision/decide.hpp"

#include <chrono>
#include <cmath>
#include <exception>

#include "qadsim/decision/sampling.hpp"
#include "qadsim/error.hpp"
#include "qadsim/hamiltonian/spectrum.hpp"

namespace qadsim {

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::SolutionExists: return "SolutionExists";
    case Verdict::NoSolutionWithinCutoff: return "NoSolutionWithinCutoff";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::vector<double> DecisionConfig::schedule_times() const {
  std::vector<double> times;
  for (int j = 0; j <= j_max; ++j) times.push_back(std::ldexp(T0, j));
  return times;
}

void DecisionConfig::validate() const {
  if (cutoff < 0) throw ConfigError("cutoff must be non-negative");
  if (!(T0 > 0.0) || !std::isfinite(T0)) throw ConfigError("T0 must be positive");
  if (j_max < 0 || j_max > 30) throw ConfigError("jmax must lie in [0, 30]");
  if (!(step > 0.0) || !std::isfinite(step)) throw ConfigError("step must be positive");
  if (!(tie_tol >= 0.0)) throw ConfigError("tie_tol must be non-negative");
}

namespace {

Point to_semantics(const std::vector<std::int64_t>& occupation, Semantics semantics) {
  Point out = occupation;
  if (semantics == Semantics::Positive) {
    for (auto& v : out) ++v;
  }
  return out;
}

}  // namespace

DecisionReport decide(const Polynomial& p, const DecisionConfig& config,
                      const std::string& equation_text) {
  config.validate();
  const auto started = std::chrono::steady_clock::now();

  DecisionReport report;
  report.equation = equation_text.empty() ? p.to_string() : equation_text;
  report.canonical = p.to_string();
  report.variables = p.variables();
  report.config = config;
  if (report.config.alphas.empty()) report.config.alphas = default_alphas(p.num_vars());
  if (report.config.alphas.size() != p.num_vars()) {
    throw ConfigError("need " + std::to_string(p.num_vars()) + " alphas, got " +
                      std::to_string(report.config.alphas.size()));
  }
  const DecisionConfig& cfg = report.config;

  const Polynomial occupation_poly = substitute_shift(p, cfg.semantics);
  report.occupation_form = occupation_poly.to_string();

  const FockBasis basis(p.num_vars(), cfg.cutoff);
  report.dimension = basis.dimension();
  if (basis.dimension() > kMaxDenseDimension) {
    throw ConfigError("dimension " + std::to_string(basis.dimension()) +
                      " exceeds the dense limit " + std::to_string(kMaxDenseDimension));
  }

  InitialHamiltonian hi = build_initial_hamiltonian(basis, cfg.alphas);
  const StateVector init = ground_state(hi.hamiltonian).vector;
  const AdiabaticFamily family(std::move(hi.hamiltonian),
                               problem_levels(occupation_poly, basis), cfg.schedule);

  const auto times = cfg.schedule_times();
  for (std::size_t j = 0; j < times.size(); ++j) {
    Attempt attempt;
    attempt.T = times[j];

    EvolutionParams params;
    params.total_time = attempt.T;
    params.step = std::min(cfg.step, attempt.T);
    params.integrator = cfg.integrator;
    params.record_grid = 2;
    const EvolutionTrace trace = evolve(family, init, params);
    attempt.steps = trace.steps;
    attempt.max_norm_error = trace.max_norm_error;

    std::vector<double> probabilities = trace.final_state.probabilities();
    if (cfg.shots > 0) {
      probabilities =
          sample_measurements(trace.final_state, cfg.shots, split_seed(cfg.seed, j)).frequencies;
    }
    attempt.candidate = top_candidate(probabilities, family, cfg.tie_tol);
    attempt.criterion_probability = attempt.candidate.criterion_probability(cfg.criterion);

    if (cfg.extrapolate) {
      const std::vector<double> steps = {params.step, params.step / 2, params.step / 4};
      const std::vector<std::size_t> observable =
          cfg.criterion == CriterionMode::StrictSingleState
              ? std::vector<std::size_t>{attempt.candidate.top_index}
              : attempt.candidate.class_indices;
      try {
        attempt.extrapolation = extrapolate_to_zero_step(family, init, attempt.T, steps,
                                                         observable, cfg.integrator);
        attempt.criterion_probability = attempt.extrapolation->value;
      } catch (const NotAsymptoticError&) {
        // Keep the raw probability; the attempt records no extrapolant.
      }
    }

    attempt.identified = attempt.criterion_probability > 0.5;
    report.attempts.push_back(attempt);
    if (attempt.identified) break;
  }

  const Attempt& last = report.attempts.back();
  if (last.identified) {
    report.identified_T = last.T;
    report.candidate = last.candidate;
    report.candidate_value = occupation_poly.evaluate(last.candidate.top_occupation);
    if (report.candidate_value == 0) {
      Point witness = to_semantics(last.candidate.top_occupation, cfg.semantics);
      if (p.evaluate(witness) != 0) {
        throw Error("internal error: witness failed certificate re-check");
      }
      report.witness = std::move(witness);
      report.certificate_checked = true;
      report.verdict = Verdict::SolutionExists;
    } else {
      report.verdict = Verdict::NoSolutionWithinCutoff;
    }
  }

  if (cfg.oracle_check) {
    const BoxMinimum box = min_over_box(occupation_poly, cfg.cutoff, cfg.limits);
    OracleCheck oracle;
    oracle.min_square = box.min_square;
    oracle.argmin = to_semantics(box.argmin, cfg.semantics);
    oracle.multiplicity = box.multiplicity;
    if (report.candidate) {
      oracle.candidate_is_ground = report.candidate->class_level == family.ground_level();
      oracle.verdict_agrees =
          (report.verdict == Verdict::SolutionExists) == (box.min_square == 0);
    }
    report.oracle = oracle;
  }

  report.wall_clock_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

SweepResult truncation_sweep(const Polynomial& p, std::span<const std::int64_t> cutoffs,
                             const DecisionConfig& config, const std::string& equation_text) {
  if (cutoffs.empty()) throw ConfigError("truncation sweep needs at least one cutoff");
  for (std::size_t i = 1; i < cutoffs.size(); ++i) {
    if (cutoffs[i] <= cutoffs[i - 1]) throw ConfigError("cutoffs must be strictly ascending");
  }

  SweepResult result;
  result.reports.resize(cutoffs.size());
  std::vector<std::exception_ptr> errors(cutoffs.size());
  const auto n = static_cast<std::int64_t>(cutoffs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      DecisionConfig c = config;
      c.cutoff = cutoffs[k];
      result.reports[k] = decide(p, c, equation_text);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  if (result.reports.size() >= 2) {
    const auto& a = result.reports[result.reports.size() - 2];
    const auto& b = result.reports.back();
    result.stable = a.verdict == b.verdict && a.witness == b.witness;
  }
  return result;
}

}  // namespace qadsim
