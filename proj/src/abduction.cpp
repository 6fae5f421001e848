#include "abducer/abduction.hpp"

#include <algorithm>

#include "abducer/errors.hpp"
#include "abducer/propabduction.hpp"
#include "abducer/semantics.hpp"

namespace abducer {

std::optional<AbductiveProblem> detect(const PlausibilityModel& m, const std::string& w,
                                       const Formula& phi) {
  if (!eval(m, w, phi)) throw PointEliminated(w, print(phi));
  if (knows(m, w, phi)) return std::nullopt;

  AbductiveProblem problem{m, w, phi, observe(m, phi),
                           believes(m, w, f_not(phi)) ? ProblemKind::Anomalous
                                                      : ProblemKind::Novel};
  return problem;
}

bool is_solution(const AbductiveProblem& problem, const Formula& psi) {
  return knows(problem.base_model, problem.point, implies(psi, problem.surprise));
}

namespace {

// Tautology check by truth table; inputs are propositional by construction.
bool prop_tautology(const Formula& f) {
  std::vector<Formula> empty;
  return entails(empty, f);
}

}  // namespace

FilterFlags filter_flags(const AbductiveProblem& problem, const Formula& psi) {
  FilterFlags flags;
  flags.consistent_analog = eval(problem.observed_model, problem.point, dia_ep(psi));

  Formula impl = implies(psi, problem.surprise);
  if (is_propositional(psi) && is_propositional(problem.surprise))
    flags.explanatory_analog = !prop_tautology(impl);
  else
    flags.explanatory_analog = !valid_in_model(problem.observed_model, impl);
  return flags;
}

std::vector<Formula> generate_candidates(const AbductiveProblem& problem,
                                         std::size_t max_literals, std::size_t cap) {
  std::set<std::string> names = atoms(problem.surprise);
  for (const World& w : problem.base_model.worlds) names.insert(w.atoms.begin(), w.atoms.end());
  std::vector<std::string> pool(names.begin(), names.end());

  max_literals = std::min(max_literals, pool.size());

  // Count before building: sum over k of C(n, k) * 2^k.
  std::size_t total = 0;
  {
    std::size_t choose = 1;  // C(n, 0)
    std::size_t pow2 = 1;
    for (std::size_t k = 1; k <= max_literals; ++k) {
      choose = choose * (pool.size() - k + 1) / k;
      pow2 *= 2;
      total += choose * pow2;
      if (total > cap) throw BudgetExceeded(total, cap);
    }
  }

  std::vector<Formula> out;
  out.reserve(total);

  // Atom subsets in sorted order, then every polarity pattern; conjunction
  // built left-associatively, so commutative duplicates never appear.
  std::vector<std::size_t> subset;
  auto emit = [&out, &pool](const std::vector<std::size_t>& idx, std::size_t polarity) {
    std::optional<Formula> conj;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      Formula lit = atom(pool[idx[i]]);
      if ((polarity >> i) & 1) lit = f_not(lit);
      conj = conj ? f_and(std::move(*conj), std::move(lit)) : std::move(lit);
    }
    out.push_back(std::move(*conj));
  };
  auto enumerate = [&](std::size_t start, auto&& self) -> void {
    if (!subset.empty())
      for (std::size_t p = 0; p < (std::size_t{1} << subset.size()); ++p) emit(subset, p);
    if (subset.size() == max_literals) return;
    for (std::size_t i = start; i < pool.size(); ++i) {
      subset.push_back(i);
      self(i + 1, self);
      subset.pop_back();
    }
  };
  enumerate(0, enumerate);
  return out;
}

RankResult rank(const AbductiveProblem& problem, const std::vector<Formula>& candidates,
                Backend backend, bool strict) {
  const std::vector<std::string> order = canonical_order(problem.observed_model);
  const RelationMatrix before = encode_relation(problem.observed_model.leq, order);

  RankResult result;
  bool any_solution = false;
  for (const Formula& psi : candidates) {
    CandidateSolution entry{psi, is_solution(problem, psi), false, false, std::nullopt};
    FilterFlags flags = filter_flags(problem, psi);
    entry.consistent_analog = flags.consistent_analog;
    entry.explanatory_analog = flags.explanatory_analog;

    if (!entry.is_solution) {
      result.rejected.push_back({psi, "not a solution: K(psi -> phi) fails at the point"});
      continue;
    }
    any_solution = true;
    if (strict && !flags.consistent_analog) {
      result.rejected.push_back({psi, "fails consistency analog: psi epistemically impossible"});
      continue;
    }
    if (strict && !flags.explanatory_analog) {
      result.rejected.push_back({psi, "fails explanatory analog: psi -> phi holds trivially"});
      continue;
    }

    const PlausibilityModel upgraded = conjecture(problem.observed_model, psi);
    const RelationMatrix after = encode_relation(upgraded.leq, order);
    entry.score = score_relation_change(before, after, backend).bits;
    result.ranked.push_back(std::move(entry));
  }
  if (!any_solution) throw NoSolutions();

  std::stable_sort(result.ranked.begin(), result.ranked.end(),
                   [](const CandidateSolution& a, const CandidateSolution& b) {
                     if (*a.score != *b.score) return *a.score < *b.score;
                     return print(a.hypothesis) < print(b.hypothesis);
                   });
  return result;
}

IntegrationResult integrate(const AbductiveProblem& problem, const Formula& chosen) {
  IntegrationResult result;
  result.model = conjecture(problem.observed_model, chosen);
  result.belief_established = believes(result.model, problem.point, chosen);
  return result;
}

}  // namespace abducer
