#pragma once

// General coproduct/counit/antipode/braiding templates on the (a,b,c,p)
// algebra, the coefficient equations the braided Hopf axioms impose on them,
// and an elimination solver with branching.

#include "braidkit/catalog.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace braidkit {

struct AnsatzSpec {
  PresentationPtr base;
  /// Unknown names in template order.
  std::vector<std::string> unknowns;
  /// Text templates; braiding rows not listed are completed from the star and
  /// the flip rows of p.
  StructureTable templates;
  StructureMaps maps;
};

AnsatzSpec build_ansatz();

struct Equation {
  Scalar value;
  std::string axiom;
  std::vector<std::string> inputs;
  /// Tensor-basis word, as text, whose coefficient this is.
  std::string basis;
};

struct EquationSystem {
  std::vector<Equation> equations;
  std::vector<Scalar> values() const;
};

/// Braided Hopf axioms plus well-definedness, and the star axioms unless
/// include_star is false.
std::vector<std::string> default_ansatz_axioms(bool include_star = true);

/// Evaluates each axiom with the template maps: arity-k axioms on normal word
/// tuples of total length ≤ k. Every coefficient of every residual becomes an
/// equation; equations are normalized (unit content removed) and deduplicated,
/// keeping the first provenance.
EquationSystem generate_equations(const AnsatzSpec& spec, const std::vector<std::string>& axioms);

struct SolutionBranch {
  /// unknown name -> value; values may still contain free unknowns.
  std::map<std::string, Scalar> assignment;
  /// Expressions asserted nonzero when the branch was split.
  std::vector<Scalar> assumptions;
  /// Equations left unsolved; empty iff the branch is fully solved.
  std::vector<Scalar> residual;
  /// Unknowns neither assigned nor eliminated.
  std::vector<std::string> free_unknowns;
  std::vector<std::string> trace;

  bool solved() const { return residual.empty(); }
  Bindings bindings() const;
  /// Canonical one-line text of the assignment, used for ordering and dedup.
  std::string key() const;
};

struct SolveResult {
  /// Solved branches first, then stuck ones; each group sorted by key().
  std::vector<SolutionBranch> branches;
  std::size_t steps = 0;
  bool budget_exhausted = false;
  /// Branches dropped because they need q to satisfy a polynomial relation,
  /// or contradict one of their own assumptions.
  std::vector<std::string> pruned;
};

inline constexpr std::size_t kDefaultSolveBudget = 100000;

/// Depth-first elimination. At each step: substitute a short linear pivot
/// (coefficient in q alone, exact quotient), else split on the unknown that
/// divides the most monomial equations (x = 0 | x != 0), else any pivot,
/// else any unknown factor, else a quadratic with a unit square discriminant.
/// Branches needing a polynomial relation in q are pruned. `unknowns` fixes
/// tie-breaks. Each step counts against `budget`.
SolveResult solve(const std::vector<Scalar>& equations, const std::vector<std::string>& unknowns,
                  std::size_t budget = kDefaultSolveBudget);

/// Substitutes the assignment into the templates.
StructureMaps instantiate(const AnsatzSpec& spec, const SolutionBranch& branch, std::string name);

/// Full axiom suite (star included when the templates carry one) at word
/// length ≤ max_word_len on the instantiated structure.
std::vector<CheckReport> verify_branch(const SolutionBranch& branch, const AnsatzSpec& spec,
                                       std::size_t max_word_len = 3);

/// Name of the shipped p-basis structure whose tables the branch reproduces
/// exactly, if any.
std::optional<std::string> match_known_solution(const SolutionBranch& branch, const AnsatzSpec& spec);

}  // namespace braidkit
