#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "bddil/cnf.hpp"
#include "bddil/semantics.hpp"
#include "bddil/solver.hpp"
#include "bddil/store.hpp"

namespace bddil {

/// Models harvested from satisfiability calls and threaded through the
/// compiler; every member satisfies the sub-formula it travels with.
struct ModelSet {
  std::vector<LiteralSet> models;
  void insert(const LiteralSet& model);
  bool empty() const { return models.empty(); }
  std::size_t size() const { return models.size(); }
};

/// Identifies a conditioned sub-formula: the set of assigned variables plus
/// one bit per original clause saying whether the cumulative assignment
/// satisfies it. Equal keys mean identical conditioned clause sets.
struct CacheKey {
  std::vector<Variable> assigned_variables;
  std::vector<std::uint64_t> satisfied_clauses;
  friend bool operator==(const CacheKey&, const CacheKey&) = default;
};

struct CacheKeyHash {
  std::size_t operator()(const CacheKey& key) const noexcept;
};

CacheKey cache_key(const CnfFormula& cnf, const LiteralSet& cumulative_assignment);

enum class ImpliedLiteralStrategy : std::uint8_t {
  Models,  // candidate pruning by harvested models only
  Horn,    // additional pruning through Horn lower approximations
};

struct CompileConfig {
  Level level = Level::infinity();
  ImpliedLiteralStrategy strategy = ImpliedLiteralStrategy::Horn;
  bool cnf_cache = true;
  /// Optional cooperative deadline; the compiler throws BudgetExceeded once
  /// it is past.
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Implied literals of the conditioned formula `phi`, which must equal the
/// solver's base formula conditioned on `assumptions` and be satisfiable.
/// Candidates are literals over variables occurring in `phi` that no model
/// of `omega` falsifies; each survivor is settled by one decide call.
/// Every satisfiable call enlarges `omega`. Returns exactly the implied set.
LiteralSet get_imps(DecisionProcedure& solver, const CnfFormula& phi,
                    const LiteralSet& assumptions, ModelSet& omega);

/// Same contract as get_imps, but candidates are additionally pruned through
/// the implied literals of a Horn lower approximation per model, which needs
/// no satisfiability calls. Same result, typically fewer decide calls.
LiteralSet get_imps_cnf(DecisionProcedure& solver, const CnfFormula& phi,
                        const LiteralSet& assumptions, ModelSet& omega);

/// Compiles a CNF into the canonical reduced ordered diagram whose nodes
/// carry the requested number of implied literals. Budget 0 needs no
/// satisfiability calls at all.
NodeRef build(DiagramStore& store, const CnfFormula& cnf, Level level);
NodeRef build(DiagramStore& store, const CnfFormula& cnf, Level level,
              DecisionProcedure& solver);

/// The model-guided compiler for the maximal-literal level. Output is
/// identical (same ref, same store) to build(cnf, infinity).
NodeRef build_inf(DiagramStore& store, const CnfFormula& cnf,
                  const CompileConfig& config = {});
NodeRef build_inf(DiagramStore& store, const CnfFormula& cnf, const CompileConfig& config,
                  DecisionProcedure& solver);

}  // namespace bddil
