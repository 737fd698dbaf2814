#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "bddil/cnf.hpp"

namespace bddil {

/// Outcome of a satisfiability call: a complete model over the solver's
/// variables, or unsatisfiable.
struct SolveResult {
  std::optional<LiteralSet> model;
  bool sat() const { return model.has_value(); }
};

/// The Decide interface the compilers are written against. A conforming
/// implementation must be complete: it either returns a complete model
/// extending the assumptions or reports unsatisfiability.
class DecisionProcedure {
 public:
  virtual ~DecisionProcedure() = default;
  virtual SolveResult decide(const LiteralSet& assumptions) = 0;
};

/// Conflict-driven solver over one fixed base formula: two-literal watches,
/// first-UIP clause learning, activity-based branching. Assumption literals
/// are placed before real decisions, so learnt clauses stay valid and are
/// kept across decide() calls. Unassigned variables default to false, which
/// makes the model of the empty formula all-negative.
class Solver final : public DecisionProcedure {
 public:
  explicit Solver(const CnfFormula& cnf);

  SolveResult decide(const LiteralSet& assumptions) override;

  std::uint64_t decide_calls() const { return decide_calls_; }
  std::uint64_t conflicts() const { return conflicts_; }
  /// Wall-clock time spent inside decide().
  std::chrono::nanoseconds solve_time() const { return solve_time_; }

 private:
  // Internal literal encoding: var*2 for positive, var*2+1 for negative,
  // variables 0-based.
  using Lit = std::uint32_t;
  static constexpr Lit lit_undef = 0xffffffffu;
  enum class Value : std::int8_t { False = 0, True = 1, Undef = 2 };

  static Lit neg(Lit l) { return l ^ 1u; }
  static std::uint32_t var_of(Lit l) { return l >> 1; }
  static bool sign(Lit l) { return (l & 1u) != 0; }  // true = negative

  struct ClauseData {
    std::vector<Lit> lits;
  };

  Value value(Lit l) const;
  void enqueue(Lit l, std::uint32_t reason);
  std::uint32_t propagate();  // returns conflicting clause index or none
  void analyze(std::uint32_t conflict, std::vector<Lit>& learnt, std::uint32_t& backtrack_level);
  void cancel_until(std::uint32_t level);
  void attach(std::uint32_t clause_index);
  Lit pick_branch();
  void bump(std::uint32_t var);
  std::uint32_t decision_level() const { return static_cast<std::uint32_t>(trail_lim_.size()); }

  static constexpr std::uint32_t no_clause = 0xffffffffu;

  std::uint32_t num_vars_ = 0;
  bool ok_ = true;  // false once the base formula is unsatisfiable outright
  std::vector<ClauseData> clauses_;
  std::vector<std::vector<std::uint32_t>> watches_;  // per literal
  std::vector<Value> assigns_;
  std::vector<std::uint32_t> level_;
  std::vector<std::uint32_t> reason_;
  std::vector<Lit> trail_;
  std::vector<std::uint32_t> trail_lim_;
  std::uint32_t propagate_head_ = 0;
  std::vector<double> activity_;
  double activity_inc_ = 1.0;
  std::vector<char> seen_;

  std::uint64_t decide_calls_ = 0;
  std::uint64_t conflicts_ = 0;
  std::chrono::nanoseconds solve_time_{0};
};

}  // namespace bddil
