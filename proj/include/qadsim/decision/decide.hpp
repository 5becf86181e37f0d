#ifndef QADSIM_DECISION_DECIDE_HPP
#define QADSIM_DECISION_DECIDE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qadsim/decision/identify.hpp"
#include "qadsim/diophantine/search.hpp"
#include "qadsim/evolution/extrapolate.hpp"

namespace qadsim {

struct DecisionConfig {
  std::int64_t cutoff = 8;
  Semantics semantics = Semantics::NonNegative;
  std::vector<cplx> alphas;  // empty: 1/sqrt(2) on every mode
  Schedule schedule = Schedule::Linear;
  Integrator integrator = Integrator::MidpointExponential;
  double step = 0.02;
  double T0 = 10.0;
  int j_max = 6;  // T = T0 * 2^j for j = 0..j_max
  CriterionMode criterion = CriterionMode::ClassAggregate;
  double tie_tol = 1e-9;
  // Richardson-extrapolate the criterion probability over step, step/2,
  // step/4 and test the extrapolant instead of the raw value.
  bool extrapolate = false;
  // Simulated repeated measurement: with shots > 0 the criterion is applied
  // to empirical frequencies, seeded per T from `seed`.
  std::uint64_t shots = 0;
  std::uint64_t seed = 20240601;
  bool oracle_check = true;
  SearchLimits limits;

  std::vector<double> schedule_times() const;
  void validate() const;
};

enum class Verdict { SolutionExists, NoSolutionWithinCutoff, Inconclusive };

std::string to_string(Verdict verdict);

struct Attempt {
  double T = 0.0;
  std::size_t steps = 0;
  double max_norm_error = 0.0;
  Candidate candidate;
  double criterion_probability = 0.0;  // value the >1/2 test was applied to
  std::optional<Extrapolation> extrapolation;
  bool identified = false;
};

struct OracleCheck {
  wide_int min_square = 0;
  Point argmin;  // in the equation's own semantics
  std::uint64_t multiplicity = 0;
  bool candidate_is_ground = false;
  bool verdict_agrees = false;
};

struct DecisionReport {
  std::string equation;
  std::string canonical;          // expanded input polynomial
  std::string occupation_form;    // polynomial in occupation numbers
  std::vector<std::string> variables;
  DecisionConfig config;
  std::size_t dimension = 0;
  std::vector<Attempt> attempts;

  Verdict verdict = Verdict::Inconclusive;
  std::optional<double> identified_T;
  std::optional<Candidate> candidate;
  std::optional<Point> witness;   // in the equation's own semantics
  wide_int candidate_value = 0;   // D at the candidate, in occupation numbers
  bool certificate_checked = false;
  std::optional<OracleCheck> oracle;

  double wall_clock_seconds = 0.0;  // sidecar; excluded from the content hash
};

/// Runs the adiabatic algorithm with escalating T until the >1/2 criterion
/// fires or the schedule is exhausted.
///
/// On identification the candidate occupation tuple n* is checked exactly:
/// D(n*) = 0 gives SolutionExists (the witness is re-evaluated on the input
/// polynomial), otherwise NoSolutionWithinCutoff. NoSolutionWithinCutoff
/// only speaks about the truncated box, never about the integers at large.
DecisionReport decide(const Polynomial& p, const DecisionConfig& config,
                      const std::string& equation_text = "");

struct SweepResult {
  std::vector<DecisionReport> reports;
  bool stable = false;  // last two cutoffs agree on verdict and witness
};

/// decide() at each cutoff (strictly ascending). Independent cutoffs run in
/// parallel.
SweepResult truncation_sweep(const Polynomial& p, std::span<const std::int64_t> cutoffs,
                             const DecisionConfig& config,
                             const std::string& equation_text = "");

}  // namespace qadsim

#endif  // QADSIM_DECISION_DECIDE_HPP
