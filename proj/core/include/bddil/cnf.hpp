#pragma once

#include <cstdint>
#include <vector>

#include "bddil/literal.hpp"

namespace bddil {

/// A disjunction of literals. Conditioning marks a clause satisfied instead
/// of deleting it so that clause indices stay stable.
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<Literal> literals);

  const std::vector<Literal>& literals() const { return literals_; }
  bool empty() const { return literals_.empty(); }
  std::size_t size() const { return literals_.size(); }
  bool satisfied() const { return satisfied_; }
  void mark_satisfied() { satisfied_ = true; }

  bool contains(Literal l) const;
  bool tautological() const;
  /// Shares some literal with the given set.
  bool shares_literal(const LiteralSet& set) const;

  friend bool operator==(const Clause&, const Clause&) = default;

 private:
  std::vector<Literal> literals_;  // sorted, duplicate-free
  bool satisfied_ = false;
};

/// An indexed clause list with the original clause order preserved.
class CnfFormula {
 public:
  CnfFormula() = default;
  explicit CnfFormula(std::uint32_t num_variables) : num_variables_(num_variables) {}

  /// Appends a clause; duplicate literals are dropped, tautological clauses
  /// are discarded entirely. Raises num_variables to cover the literals.
  void add_clause(std::vector<Literal> literals);

  std::uint32_t num_variables() const { return num_variables_; }
  void set_num_variables(std::uint32_t n) { num_variables_ = std::max(num_variables_, n); }

  std::size_t clause_count() const { return clauses_.size(); }
  const Clause& clause(std::size_t i) const { return clauses_[i]; }
  const std::vector<Clause>& clauses() const { return clauses_; }

  std::size_t active_clause_count() const;
  bool has_empty_clause() const;   // an unsatisfied clause with no literals
  bool all_satisfied() const;      // the formula is the constant true
  bool is_horn() const;            // every active clause has <= 1 positive literal

  /// Variables occurring in active clauses, ascending.
  std::vector<Variable> occurring_variables() const;
  bool variable_occurs(Variable v) const;

 private:
  friend CnfFormula condition_cnf(const CnfFormula&, const LiteralSet&);
  std::vector<Clause> clauses_;
  std::uint32_t num_variables_ = 0;
};

/// Conditions the formula on a consistent term: clauses sharing a term
/// literal become satisfied placeholders, complementary literals are deleted
/// from the rest. Clause indices are preserved.
CnfFormula condition_cnf(const CnfFormula& cnf, const LiteralSet& term);

/// Horn lower approximation from a model (which must satisfy the formula):
/// per clause all negative literals are kept plus at most one positive - a
/// model-satisfied positive if one exists, otherwise any positive; smallest
/// variable wins ties. Duplicate result clauses are merged.
CnfFormula horn_app(const CnfFormula& cnf, const LiteralSet& model);

/// All literals implied by a satisfiable Horn formula, found by unit
/// propagation on the formula plus the negated candidate.
/// Throws NotHorn / UnsatInput.
LiteralSet horn_implied_literals(const CnfFormula& horn);

}  // namespace bddil
