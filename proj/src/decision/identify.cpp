#include "qadsim/decision/identify.hpp"

#include <algorithm>

#include "qadsim/error.hpp"

namespace qadsim {

std::string to_string(CriterionMode mode) {
  return mode == CriterionMode::StrictSingleState ? "strict-single-state" : "class-aggregate";
}

CriterionMode criterion_from_string(const std::string& text) {
  if (text == "class-aggregate") return CriterionMode::ClassAggregate;
  if (text == "strict-single-state") return CriterionMode::StrictSingleState;
  throw ConfigError("unknown criterion '" + text + "'");
}

std::string interpretation(CriterionMode mode) {
  if (mode == CriterionMode::StrictSingleState) {
    return "literal criterion: the single most probable basis state must have "
           "probability > 1/2";
  }
  return "interpretation: probability summed over the degeneracy class of the most "
         "probable basis state (all states with equal D(n)^2) must be > 1/2; use "
         "strict mode for the single-state criterion";
}

Candidate top_candidate(std::span<const double> probabilities, const AdiabaticFamily& family,
                        double tie_tol) {
  const auto& levels = family.levels();
  const FockBasis& basis = family.basis();
  if (probabilities.size() != levels.size()) {
    throw BasisMismatch("probability vector does not match the family's basis");
  }
  if (probabilities.empty()) throw ConfigError("empty probability vector");

  double p_max = probabilities[0];
  for (double p : probabilities) p_max = std::max(p_max, p);

  GradedLexLess less;
  Candidate c;
  bool have = false;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    if (probabilities[i] < p_max - tie_tol) continue;
    auto occ = basis.occupations(i);
    const bool better = !have || levels[i] < levels[c.top_index] ||
                        (levels[i] == levels[c.top_index] && less(occ, c.top_occupation));
    if (better) {
      c.top_index = i;
      c.top_occupation = std::move(occ);
      have = true;
    }
  }
  c.top_probability = probabilities[c.top_index];
  c.class_level = levels[c.top_index];
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i] == c.class_level) {
      c.class_indices.push_back(i);
      c.class_probability += probabilities[i];
    }
  }
  return c;
}

std::optional<Candidate> identify_ground_state(std::span<const double> probabilities,
                                               const AdiabaticFamily& family,
                                               CriterionMode mode, double tie_tol) {
  Candidate c = top_candidate(probabilities, family, tie_tol);
  if (c.criterion_probability(mode) > 0.5) return c;
  return std::nullopt;
}

std::optional<Candidate> identify_ground_state(const EvolutionTrace& trace,
                                               const AdiabaticFamily& family,
                                               CriterionMode mode, double tie_tol) {
  const auto p = trace.final_state.probabilities();
  return identify_ground_state(p, family, mode, tie_tol);
}

}  // namespace qadsim
