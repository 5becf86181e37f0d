#ifndef QADSIM_DECISION_IDENTIFY_HPP
#define QADSIM_DECISION_IDENTIFY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qadsim/evolution/evolve.hpp"
#include "qadsim/hamiltonian/family.hpp"

namespace qadsim {

/// ClassAggregate sums the probability over every basis state sharing the
/// top state's H_P value; StrictSingleState tests the top state alone.
enum class CriterionMode { ClassAggregate, StrictSingleState };

std::string to_string(CriterionMode mode);
CriterionMode criterion_from_string(const std::string& text);
/// One-line description of how the >1/2 test was applied, for reports.
std::string interpretation(CriterionMode mode);

struct Candidate {
  std::size_t top_index = 0;
  std::vector<std::int64_t> top_occupation;
  double top_probability = 0.0;
  std::int64_t class_level = 0;  // H_P value D(n)^2 shared by the class
  std::vector<std::size_t> class_indices;
  double class_probability = 0.0;

  double criterion_probability(CriterionMode mode) const {
    return mode == CriterionMode::StrictSingleState ? top_probability : class_probability;
  }
};

/// Most probable basis state and its degeneracy class. States within tie_tol
/// of the maximum are tie-broken by lower H_P value, then graded-lex order.
Candidate top_candidate(std::span<const double> probabilities,
                        const AdiabaticFamily& family, double tie_tol = 1e-9);

/// The candidate when its criterion probability is strictly above 1/2.
std::optional<Candidate> identify_ground_state(std::span<const double> probabilities,
                                               const AdiabaticFamily& family,
                                               CriterionMode mode = CriterionMode::ClassAggregate,
                                               double tie_tol = 1e-9);

std::optional<Candidate> identify_ground_state(const EvolutionTrace& trace,
                                               const AdiabaticFamily& family,
                                               CriterionMode mode = CriterionMode::ClassAggregate,
                                               double tie_tol = 1e-9);

}  // namespace qadsim

#endif  // QADSIM_DECISION_IDENTIFY_HPP
