#include "bddil/solver.hpp"

#include <algorithm>

namespace bddil {

Solver::Solver(const CnfFormula& cnf) : num_vars_(cnf.num_variables()) {
  assigns_.assign(num_vars_, Value::Undef);
  level_.assign(num_vars_, 0);
  reason_.assign(num_vars_, no_clause);
  activity_.assign(num_vars_, 0.0);
  seen_.assign(num_vars_, 0);
  watches_.assign(2 * num_vars_, {});
  for (const Clause& c : cnf.clauses()) {
    if (c.satisfied() || c.tautological()) continue;
    std::vector<Lit> lits;
    lits.reserve(c.size());
    for (Literal l : c.literals()) {
      lits.push_back(((l.variable().index() - 1) << 1) | (l.negative() ? 1u : 0u));
    }
    if (lits.empty()) {
      ok_ = false;
      return;
    }
    if (lits.size() == 1) {
      if (value(lits[0]) == Value::False) {
        ok_ = false;
        return;
      }
      if (value(lits[0]) == Value::Undef) enqueue(lits[0], no_clause);
      continue;
    }
    clauses_.push_back({std::move(lits)});
    attach(static_cast<std::uint32_t>(clauses_.size() - 1));
  }
  if (propagate() != no_clause) ok_ = false;
}

Solver::Value Solver::value(Lit l) const {
  Value v = assigns_[var_of(l)];
  if (v == Value::Undef) return Value::Undef;
  const bool is_true = (v == Value::True) != sign(l);
  return is_true ? Value::True : Value::False;
}

void Solver::enqueue(Lit l, std::uint32_t reason) {
  assigns_[var_of(l)] = sign(l) ? Value::False : Value::True;
  level_[var_of(l)] = decision_level();
  reason_[var_of(l)] = reason;
  trail_.push_back(l);
}

void Solver::attach(std::uint32_t ci) {
  const auto& lits = clauses_[ci].lits;
  watches_[neg(lits[0])].push_back(ci);
  watches_[neg(lits[1])].push_back(ci);
}

std::uint32_t Solver::propagate() {
  while (propagate_head_ < trail_.size()) {
    const Lit p = trail_[propagate_head_++];
    std::vector<std::uint32_t>& watch_list = watches_[p];
    std::size_t keep = 0;
    for (std::size_t i = 0; i < watch_list.size(); ++i) {
      const std::uint32_t ci = watch_list[i];
      std::vector<Lit>& lits = clauses_[ci].lits;
      // Normalize so the falsified literal sits at index 1.
      if (lits[0] == neg(p)) std::swap(lits[0], lits[1]);
      if (value(lits[0]) == Value::True) {
        watch_list[keep++] = ci;
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < lits.size(); ++k) {
        if (value(lits[k]) != Value::False) {
          std::swap(lits[1], lits[k]);
          watches_[neg(lits[1])].push_back(ci);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      // Unit or conflicting.
      watch_list[keep++] = ci;
      if (value(lits[0]) == Value::False) {
        for (std::size_t k = i + 1; k < watch_list.size(); ++k) {
          watch_list[keep++] = watch_list[k];
        }
        watch_list.resize(keep);
        propagate_head_ = static_cast<std::uint32_t>(trail_.size());
        return ci;
      }
      enqueue(lits[0], ci);
    }
    watch_list.resize(keep);
  }
  return no_clause;
}

void Solver::bump(std::uint32_t var) {
  activity_[var] += activity_inc_;
  if (activity_[var] > 1e100) {
    for (double& a : activity_) a *= 1e-100;
    activity_inc_ *= 1e-100;
  }
}

void Solver::analyze(std::uint32_t conflict, std::vector<Lit>& learnt,
                     std::uint32_t& backtrack_level) {
  learnt.clear();
  learnt.push_back(lit_undef);  // slot for the asserting literal
  std::uint32_t counter = 0;
  Lit p = lit_undef;
  std::uint32_t index = static_cast<std::uint32_t>(trail_.size());
  std::uint32_t ci = conflict;
  do {
    const std::vector<Lit>& lits = clauses_[ci].lits;
    for (std::size_t k = (p == lit_undef ? 0 : 1); k < lits.size(); ++k) {
      const Lit q = lits[k];
      if (seen_[var_of(q)] || level_[var_of(q)] == 0) continue;
      seen_[var_of(q)] = 1;
      bump(var_of(q));
      if (level_[var_of(q)] >= decision_level()) {
        ++counter;
      } else {
        learnt.push_back(q);
      }
    }
    // Walk back to the next marked trail literal.
    while (!seen_[var_of(trail_[index - 1])]) --index;
    p = trail_[--index];
    seen_[var_of(p)] = 0;
    ci = reason_[var_of(p)];
    --counter;
  } while (counter > 0);
  learnt[0] = neg(p);

  if (learnt.size() == 1) {
    backtrack_level = 0;
  } else {
    // Second-highest decision level among the learnt literals.
    std::size_t max_i = 1;
    for (std::size_t i = 2; i < learnt.size(); ++i) {
      if (level_[var_of(learnt[i])] > level_[var_of(learnt[max_i])]) max_i = i;
    }
    std::swap(learnt[1], learnt[max_i]);
    backtrack_level = level_[var_of(learnt[1])];
  }
  for (std::size_t i = 1; i < learnt.size(); ++i) seen_[var_of(learnt[i])] = 0;
}

void Solver::cancel_until(std::uint32_t level) {
  if (decision_level() <= level) return;
  for (std::size_t i = trail_.size(); i > trail_lim_[level];) {
    --i;
    assigns_[var_of(trail_[i])] = Value::Undef;
    reason_[var_of(trail_[i])] = no_clause;
  }
  trail_.resize(trail_lim_[level]);
  trail_lim_.resize(level);
  propagate_head_ = static_cast<std::uint32_t>(trail_.size());
}

Solver::Lit Solver::pick_branch() {
  std::uint32_t best = 0;
  double best_activity = -1.0;
  bool found = false;
  for (std::uint32_t v = 0; v < num_vars_; ++v) {
    if (assigns_[v] == Value::Undef && activity_[v] > best_activity) {
      best = v;
      best_activity = activity_[v];
      found = true;
    }
  }
  if (!found) return lit_undef;
  return (best << 1) | 1u;  // default polarity: false
}

SolveResult Solver::decide(const LiteralSet& assumptions) {
  const auto start = std::chrono::steady_clock::now();
  ++decide_calls_;
  auto finish = [&](SolveResult result) {
    cancel_until(0);
    solve_time_ += std::chrono::steady_clock::now() - start;
    return result;
  };
  if (!ok_) return finish(SolveResult{});

  std::vector<Lit> assumed;
  assumed.reserve(assumptions.size());
  for (Literal l : assumptions) {
    if (l.variable().index() > num_vars_) {
      throw Error("assumption variable outside the solver's formula");
    }
    assumed.push_back(((l.variable().index() - 1) << 1) | (l.negative() ? 1u : 0u));
  }

  cancel_until(0);
  for (;;) {
    const std::uint32_t conflict = propagate();
    if (conflict != no_clause) {
      ++conflicts_;
      if (decision_level() == 0) {
        ok_ = false;
        return finish(SolveResult{});
      }
      if (decision_level() <= assumed.size()) {
        // The conflict depends on the assumption prefix only.
        return finish(SolveResult{});
      }
      std::vector<Lit> learnt;
      std::uint32_t backtrack_level = 0;
      analyze(conflict, learnt, backtrack_level);
      cancel_until(backtrack_level);
      if (learnt.size() == 1) {
        enqueue(learnt[0], no_clause);
      } else {
        clauses_.push_back({learnt});
        attach(static_cast<std::uint32_t>(clauses_.size() - 1));
        enqueue(learnt[0], static_cast<std::uint32_t>(clauses_.size() - 1));
      }
      activity_inc_ /= 0.95;
      continue;
    }
    // Assumption prefix, then real decisions.
    if (decision_level() < assumed.size()) {
      const Lit a = assumed[decision_level()];
      if (value(a) == Value::False) return finish(SolveResult{});
      trail_lim_.push_back(static_cast<std::uint32_t>(trail_.size()));
      if (value(a) == Value::Undef) enqueue(a, no_clause);
      continue;
    }
    const Lit next = pick_branch();
    if (next == lit_undef) {
      std::vector<Literal> model;
      model.reserve(num_vars_);
      for (std::uint32_t v = 0; v < num_vars_; ++v) {
        model.emplace_back(Variable(v + 1), assigns_[v] == Value::True);
      }
      return finish(SolveResult{LiteralSet::from_sorted_unchecked(std::move(model))});
    }
    trail_lim_.push_back(static_cast<std::uint32_t>(trail_.size()));
    enqueue(next, no_clause);
  }
}

}  // namespace bddil
