#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abducer/complexity.hpp"
#include "abducer/dynamics.hpp"
#include "abducer/formula.hpp"
#include "abducer/model.hpp"

namespace abducer {

enum class ProblemKind { Novel, Anomalous };

// A surprise phi observed at `point`: phi held there but was not known
// beforehand. `observed_model` is base_model after observing phi.
struct AbductiveProblem {
  PlausibilityModel base_model;
  std::string point;
  Formula surprise;
  PlausibilityModel observed_model;
  ProblemKind kind = ProblemKind::Novel;
};

// nullopt when the agent already knew phi (no problem arises). Anomalous
// when she believed !phi, novel otherwise. Throws PointEliminated when phi
// fails at w — the point must survive the observation.
std::optional<AbductiveProblem> detect(const PlausibilityModel& m, const std::string& w,
                                       const Formula& phi);

// psi solves the problem iff the agent knew psi -> phi in the base model
// (checked there, not after the observation, where it would be trivial for
// propositional phi).
bool is_solution(const AbductiveProblem& problem, const Formula& psi);

struct FilterFlags {
  // psi holds at some epistemically possible world of the observed model.
  bool consistent_analog = false;
  // psi -> phi is not trivially true on its own: for propositional psi and
  // phi, not a tautology; otherwise not valid across the observed model.
  bool explanatory_analog = false;
};

// Epistemic analogs of the classical consistency/explanatoriness filters.
// Meaningful for solutions; computable for any psi.
FilterFlags filter_flags(const AbductiveProblem& problem, const Formula& psi);

constexpr std::size_t kDefaultCandidateCap = 100000;

// All conjunctions of up to max_literals literals over distinct atoms drawn
// from the surprise and the base model, complementary pairs excluded,
// deduplicated up to commutativity. Throws BudgetExceeded past `cap`.
std::vector<Formula> generate_candidates(const AbductiveProblem& problem,
                                         std::size_t max_literals,
                                         std::size_t cap = kDefaultCandidateCap);

struct CandidateSolution {
  Formula hypothesis;
  bool is_solution = false;
  bool consistent_analog = false;
  bool explanatory_analog = false;
  std::optional<double> score;  // bits; present only for ranked solutions
};

struct Rejection {
  Formula hypothesis;
  std::string reason;
};

struct RankResult {
  std::vector<CandidateSolution> ranked;  // ascending score, ties by printed text
  std::vector<Rejection> rejected;
};

// Scores each surviving candidate by the conditional complexity of the
// upgraded plausibility matrix given the observed one. In strict mode a
// candidate must also pass both filter flags to be ranked. Throws
// NoSolutions when every candidate fails the solution condition.
RankResult rank(const AbductiveProblem& problem, const std::vector<Formula>& candidates,
                Backend backend = Backend::Lz76, bool strict = true);

struct IntegrationResult {
  PlausibilityModel model;  // conjecture(observed_model, chosen)
  // Whether the agent in fact believes the hypothesis at the point
  // afterwards; false when the hypothesis was unsatisfiable there.
  bool belief_established = false;
};

IntegrationResult integrate(const AbductiveProblem& problem, const Formula& chosen);

}  // namespace abducer
