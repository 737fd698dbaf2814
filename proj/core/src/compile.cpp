#include "bddil/compile.hpp"

#include <algorithm>
#include <unordered_map>

#include "bddil/transform.hpp"

namespace bddil {

void ModelSet::insert(const LiteralSet& model) {
  if (std::find(models.begin(), models.end(), model) == models.end()) {
    models.push_back(model);
  }
}

std::size_t CacheKeyHash::operator()(const CacheKey& key) const noexcept {
  std::size_t h = key.assigned_variables.size();
  for (Variable v : key.assigned_variables) {
    h ^= v.index() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  for (std::uint64_t word : key.satisfied_clauses) {
    h ^= word + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

CacheKey cache_key(const CnfFormula& cnf, const LiteralSet& cumulative_assignment) {
  CacheKey key;
  key.assigned_variables.reserve(cumulative_assignment.size());
  for (Literal l : cumulative_assignment) key.assigned_variables.push_back(l.variable());
  key.satisfied_clauses.assign((cnf.clause_count() + 63) / 64, 0);
  for (std::size_t i = 0; i < cnf.clause_count(); ++i) {
    if (cnf.clause(i).shares_literal(cumulative_assignment)) {
      key.satisfied_clauses[i / 64] |= (std::uint64_t(1) << (i % 64));
    }
  }
  return key;
}

namespace {

// Candidate literals over variables occurring in phi, ascending variable
// order with the positive polarity first.
std::vector<Literal> occurring_literals(const CnfFormula& phi) {
  std::vector<Literal> candidates;
  for (Variable v : phi.occurring_variables()) {
    candidates.emplace_back(v, true);
    candidates.emplace_back(v, false);
  }
  return candidates;
}

LiteralSet implied_literal_loop(DecisionProcedure& solver, const CnfFormula& phi,
                                const LiteralSet& assumptions, ModelSet& omega,
                                std::vector<Literal> candidates, bool horn_prune) {
  auto prune_by_model = [&](const LiteralSet& model) {
    std::erase_if(candidates, [&](Literal l) { return model.contains(l.negated()); });
  };
  auto prune_by_horn = [&](const LiteralSet& model) {
    const LiteralSet kept = horn_implied_literals(horn_app(phi, model));
    std::erase_if(candidates, [&](Literal l) { return !kept.contains(l); });
  };
  for (const LiteralSet& model : omega.models) {
    if (horn_prune) {
      prune_by_horn(model);
    } else {
      prune_by_model(model);
    }
  }
  std::vector<Literal> implied;
  std::size_t next = 0;
  while (next < candidates.size()) {
    const Literal l = candidates[next];
    const SolveResult result = solver.decide(assumptions.inserted(l.negated()));
    if (result.sat()) {
      omega.insert(*result.model);
      if (horn_prune) {
        prune_by_horn(*result.model);
      } else {
        prune_by_model(*result.model);
      }
      // l itself is always gone: the model satisfies its negation.
    } else {
      implied.push_back(l);
      ++next;
    }
  }
  return LiteralSet::from_sorted_unchecked(std::move(implied));
}

}  // namespace

LiteralSet get_imps(DecisionProcedure& solver, const CnfFormula& phi,
                    const LiteralSet& assumptions, ModelSet& omega) {
  return implied_literal_loop(solver, phi, assumptions, omega, occurring_literals(phi), false);
}

LiteralSet get_imps_cnf(DecisionProcedure& solver, const CnfFormula& phi,
                        const LiteralSet& assumptions, ModelSet& omega) {
  return implied_literal_loop(solver, phi, assumptions, omega, occurring_literals(phi), true);
}

namespace {

// A -> B, checked as unsat(A and not B) on a throwaway solver. The negation
// of the clause set B is encoded with one selector variable per clause.
bool cnf_implies(const CnfFormula& a, const CnfFormula& b) {
  std::uint32_t next_var = std::max(a.num_variables(), b.num_variables());
  CnfFormula query(next_var);
  for (const Clause& c : a.clauses()) {
    if (!c.satisfied()) query.add_clause(c.literals());
  }
  std::vector<Literal> any_selector;
  for (const Clause& c : b.clauses()) {
    if (c.satisfied()) continue;
    const Literal selector(Variable(++next_var), true);
    any_selector.push_back(selector);
    for (Literal l : c.literals()) {
      query.add_clause({selector.negated(), l.negated()});
    }
  }
  query.add_clause(std::move(any_selector));
  Solver solver(query);
  return !solver.decide(LiteralSet()).sat();
}

bool can_be_omitted(const CnfFormula& phi, Variable x) {
  if (!phi.variable_occurs(x)) return true;
  const CnfFormula lo = condition_cnf(phi, LiteralSet::from({Literal(x, false)}));
  const CnfFormula hi = condition_cnf(phi, LiteralSet::from({Literal(x, true)}));
  return cnf_implies(lo, hi) && cnf_implies(hi, lo);
}

struct BuildContext {
  DiagramStore& store;
  DecisionProcedure* solver;  // null for budget 0
  Level level;

  NodeRef recurse(const CnfFormula& phi, const LiteralSet& cumulative) {
    if (level.finite_value() == 0 && !level.is_infinity()) return recurse_plain(phi);
    // Satisfiability first; the witness model prunes implied-literal probes.
    const SolveResult sat = solver->decide(cumulative);
    if (!sat.sat()) return store.false_ref();
    std::vector<LiteralSet> witnesses{*sat.model};

    std::vector<Literal> collected;
    for (Variable v : phi.occurring_variables()) {
      if (!level.is_infinity() && collected.size() >= level.finite_value()) break;
      for (bool positive : {true, false}) {
        const Literal l(v, positive);
        const bool refuted = std::any_of(witnesses.begin(), witnesses.end(),
                                         [&](const LiteralSet& m) { return m.contains(l.negated()); });
        if (refuted) continue;
        const SolveResult probe = solver->decide(cumulative.inserted(l.negated()));
        if (probe.sat()) {
          witnesses.push_back(*probe.model);
        } else {
          collected.push_back(l);
          break;  // the other polarity cannot also be implied
        }
      }
    }
    const LiteralSet implied = LiteralSet::from_sorted_unchecked(std::move(collected));
    LiteralSet assigned = cumulative.unioned(implied);
    CnfFormula remainder = condition_cnf(phi, implied);

    if (!remainder.all_satisfied()) {
      for (Variable v : remainder.occurring_variables()) {
        const bool check_omission = !level.is_infinity();
        if (check_omission && can_be_omitted(remainder, v)) {
          remainder = condition_cnf(remainder, LiteralSet::from({Literal(v, true)}));
          assigned = assigned.inserted(Literal(v, true));
          if (remainder.all_satisfied()) break;
          continue;
        }
        const NodeRef lo = recurse(condition_cnf(remainder, LiteralSet::from({Literal(v, false)})),
                                   assigned.inserted(Literal(v, false)));
        const NodeRef hi = recurse(condition_cnf(remainder, LiteralSet::from({Literal(v, true)})),
                                   assigned.inserted(Literal(v, true)));
        return store.mk_decision(v, lo, hi, store.intern_literal_set(implied));
      }
    }
    return store.mk_true(store.intern_literal_set(implied));
  }

  // Budget 0: no satisfiability calls, plain exhaustive split.
  NodeRef recurse_plain(const CnfFormula& phi) {
    if (phi.has_empty_clause()) return store.false_ref();
    if (phi.all_satisfied()) return store.true_ref();
    const Variable v = phi.occurring_variables().front();
    const NodeRef lo = recurse_plain(condition_cnf(phi, LiteralSet::from({Literal(v, false)})));
    const NodeRef hi = recurse_plain(condition_cnf(phi, LiteralSet::from({Literal(v, true)})));
    if (lo == store.false_ref() && hi == store.false_ref()) return store.false_ref();
    return store.mk_decision(v, lo, hi, store.empty_literal_set());
  }
};

}  // namespace

NodeRef build(DiagramStore& store, const CnfFormula& cnf, Level level,
              DecisionProcedure& solver) {
  BuildContext ctx{store, &solver, level};
  const NodeRef raw = ctx.recurse(cnf, LiteralSet());
  const bool needs_reduce = level.is_infinity() || level.finite_value() == 0;
  return needs_reduce ? reduce(store, raw) : raw;
}

NodeRef build(DiagramStore& store, const CnfFormula& cnf, Level level) {
  if (!level.is_infinity() && level.finite_value() == 0) {
    BuildContext ctx{store, nullptr, level};
    return reduce(store, ctx.recurse_plain(cnf));
  }
  Solver solver(cnf);
  return build(store, cnf, level, solver);
}

namespace {

struct BuildInfContext {
  DiagramStore& store;
  DecisionProcedure& solver;
  const CnfFormula& base;
  const CompileConfig& config;
  std::unordered_map<CacheKey, NodeRef, CacheKeyHash> cache;

  NodeRef recurse(const CnfFormula& phi, ModelSet omega, const LiteralSet& cumulative) {
    if (config.deadline && std::chrono::steady_clock::now() > *config.deadline) {
      throw BudgetExceeded("compile budget exceeded");
    }
    std::optional<CacheKey> key;
    if (config.cnf_cache) {
      key = cache_key(base, cumulative);
      auto it = cache.find(*key);
      if (it != cache.end()) return it->second;
    }
    const LiteralSet implied =
        config.strategy == ImpliedLiteralStrategy::Horn
            ? get_imps_cnf(solver, phi, cumulative, omega)
            : get_imps(solver, phi, cumulative, omega);
    const CnfFormula remainder = condition_cnf(phi, implied);
    NodeRef result;
    if (remainder.all_satisfied()) {
      result = store.mk_true(store.intern_literal_set(implied));
    } else {
      const Variable x = remainder.occurring_variables().front();
      ModelSet lo_models, hi_models;
      for (const LiteralSet& m : omega.models) {
        if (m.contains(Literal(x, false))) {
          lo_models.insert(m.erased(Literal(x, false)).minus(implied));
        } else if (m.contains(Literal(x, true))) {
          hi_models.insert(m.erased(Literal(x, true)).minus(implied));
        }
      }
      const LiteralSet assigned = cumulative.unioned(implied);
      const NodeRef lo = recurse(condition_cnf(remainder, LiteralSet::from({Literal(x, false)})),
                                 std::move(lo_models), assigned.inserted(Literal(x, false)));
      const NodeRef hi = recurse(condition_cnf(remainder, LiteralSet::from({Literal(x, true)})),
                                 std::move(hi_models), assigned.inserted(Literal(x, true)));
      result = store.mk_decision(x, lo, hi, store.intern_literal_set(implied));
    }
    if (key) cache.emplace(std::move(*key), result);
    return result;
  }
};

}  // namespace

NodeRef build_inf(DiagramStore& store, const CnfFormula& cnf, const CompileConfig& config,
                  DecisionProcedure& solver) {
  const SolveResult first = solver.decide(LiteralSet());
  if (!first.sat()) return store.false_ref();
  ModelSet omega;
  omega.insert(*first.model);
  BuildInfContext ctx{store, solver, cnf, config, {}};
  return reduce(store, ctx.recurse(cnf, std::move(omega), LiteralSet()));
}

NodeRef build_inf(DiagramStore& store, const CnfFormula& cnf, const CompileConfig& config) {
  Solver solver(cnf);
  return build_inf(store, cnf, config, solver);
}

}  // namespace bddil
