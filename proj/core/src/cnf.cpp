#include "bddil/cnf.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bddil {

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
  std::sort(literals_.begin(), literals_.end());
  literals_.erase(std::unique(literals_.begin(), literals_.end()), literals_.end());
}

bool Clause::contains(Literal l) const {
  return std::binary_search(literals_.begin(), literals_.end(), l);
}

bool Clause::tautological() const {
  for (std::size_t i = 1; i < literals_.size(); ++i) {
    if (literals_[i - 1].variable() == literals_[i].variable()) return true;
  }
  return false;
}

bool Clause::shares_literal(const LiteralSet& set) const {
  for (Literal l : literals_) {
    if (set.contains(l)) return true;
  }
  return false;
}

void CnfFormula::add_clause(std::vector<Literal> literals) {
  Clause clause(std::move(literals));
  if (clause.tautological()) return;
  for (Literal l : clause.literals()) {
    num_variables_ = std::max(num_variables_, l.variable().index());
  }
  clauses_.push_back(std::move(clause));
}

std::size_t CnfFormula::active_clause_count() const {
  std::size_t n = 0;
  for (const Clause& c : clauses_) {
    if (!c.satisfied()) ++n;
  }
  return n;
}

bool CnfFormula::has_empty_clause() const {
  for (const Clause& c : clauses_) {
    if (!c.satisfied() && c.empty()) return true;
  }
  return false;
}

bool CnfFormula::all_satisfied() const { return active_clause_count() == 0; }

bool CnfFormula::is_horn() const {
  for (const Clause& c : clauses_) {
    if (c.satisfied()) continue;
    int positives = 0;
    for (Literal l : c.literals()) {
      if (l.positive() && ++positives > 1) return false;
    }
  }
  return true;
}

std::vector<Variable> CnfFormula::occurring_variables() const {
  std::set<Variable> vars;
  for (const Clause& c : clauses_) {
    if (c.satisfied()) continue;
    for (Literal l : c.literals()) vars.insert(l.variable());
  }
  return std::vector<Variable>(vars.begin(), vars.end());
}

bool CnfFormula::variable_occurs(Variable v) const {
  for (const Clause& c : clauses_) {
    if (c.satisfied()) continue;
    for (Literal l : c.literals()) {
      if (l.variable() == v) return true;
    }
  }
  return false;
}

CnfFormula condition_cnf(const CnfFormula& cnf, const LiteralSet& term) {
  CnfFormula out(cnf.num_variables());
  out.clauses_.reserve(cnf.clause_count());
  for (const Clause& c : cnf.clauses()) {
    Clause next = c;
    if (!next.satisfied()) {
      if (next.shares_literal(term)) {
        next.mark_satisfied();
      } else {
        std::vector<Literal> rest;
        rest.reserve(next.size());
        for (Literal l : next.literals()) {
          if (!term.contains(l.negated())) rest.push_back(l);
        }
        next = Clause(std::move(rest));
      }
    }
    out.clauses_.push_back(std::move(next));
  }
  return out;
}

CnfFormula horn_app(const CnfFormula& cnf, const LiteralSet& model) {
  CnfFormula out(cnf.num_variables());
  std::set<std::vector<Literal>> seen;
  for (const Clause& c : cnf.clauses()) {
    if (c.satisfied()) continue;
    if (!c.shares_literal(model)) {
      throw ModelDoesNotSatisfy("model falsifies a clause of the formula");
    }
    std::vector<Literal> horn;
    Literal chosen_positive;   // smallest model-satisfied positive
    Literal fallback_positive; // smallest positive
    for (Literal l : c.literals()) {
      if (l.negative()) {
        horn.push_back(l);
      } else {
        if (!fallback_positive.valid()) fallback_positive = l;
        if (!chosen_positive.valid() && model.contains(l)) chosen_positive = l;
      }
    }
    if (chosen_positive.valid()) {
      horn.push_back(chosen_positive);
    } else if (fallback_positive.valid()) {
      horn.push_back(fallback_positive);
    }
    std::sort(horn.begin(), horn.end());
    if (seen.insert(horn).second) out.add_clause(std::move(horn));
  }
  return out;
}

namespace {

// Unit propagation; Horn formulas are unsatisfiable exactly when this
// derives an empty clause. `extra` is a single assumed literal.
bool horn_unsat_by_unit_propagation(const CnfFormula& horn, Literal extra) {
  std::map<Variable, bool> assigned;  // variable -> value
  assigned.emplace(extra.variable(), extra.positive());
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Clause& c : horn.clauses()) {
      if (c.satisfied()) continue;
      Literal unassigned;
      bool clause_satisfied = false;
      int free_count = 0;
      for (Literal l : c.literals()) {
        auto it = assigned.find(l.variable());
        if (it == assigned.end()) {
          ++free_count;
          unassigned = l;
        } else if (it->second == l.positive()) {
          clause_satisfied = true;
          break;
        }
      }
      if (clause_satisfied) continue;
      if (free_count == 0) return true;  // falsified clause
      if (free_count == 1) {
        assigned.emplace(unassigned.variable(), unassigned.positive());
        changed = true;
      }
    }
  }
  return false;
}

}  // namespace

LiteralSet horn_implied_literals(const CnfFormula& horn) {
  if (!horn.is_horn()) throw NotHorn("formula has a clause with two positive literals");
  if (horn.has_empty_clause()) throw UnsatInput("Horn formula contains the empty clause");
  std::vector<Literal> implied;
  for (Variable v : horn.occurring_variables()) {
    for (bool positive : {true, false}) {
      Literal l(v, positive);
      if (horn_unsat_by_unit_propagation(horn, l.negated())) implied.push_back(l);
    }
  }
  if (implied.size() >= 2) {
    for (std::size_t i = 1; i < implied.size(); ++i) {
      if (implied[i - 1].variable() == implied[i].variable()) {
        throw UnsatInput("Horn formula implies complementary literals");
      }
    }
  }
  return LiteralSet::from_sorted_unchecked(std::move(implied));
}

}  // namespace bddil
