#pragma once

#include <cstdint>
#include <vector>

#include "bddil/cnf.hpp"
#include "bddil/query.hpp"
#include "bddil/store.hpp"

namespace bddil::oracle {

/// Brute-force ground truth: the full model set of a formula over a small
/// universe, materialized as a bit set indexed by assignment. Assignment `a`
/// sets variable k true when bit k-1 of `a` is set (least variable = least
/// significant bit). Capped at 24 variables.
class TruthTable {
 public:
  static constexpr std::uint32_t max_variables = 24;

  explicit TruthTable(std::uint32_t num_variables);

  std::uint32_t num_variables() const { return num_variables_; }
  std::uint64_t assignment_count() const { return std::uint64_t(1) << num_variables_; }

  bool test(std::uint64_t assignment) const;
  void set(std::uint64_t assignment, bool value);

  std::uint64_t popcount() const;
  bool none() const { return popcount() == 0; }
  bool all() const { return popcount() == assignment_count(); }

  TruthTable operator&(const TruthTable& other) const;
  TruthTable operator|(const TruthTable& other) const;
  TruthTable operator~() const;
  friend bool operator==(const TruthTable&, const TruthTable&) = default;

  /// Table of the literal (a half-space).
  static TruthTable of_literal(std::uint32_t num_variables, Literal l);
  static TruthTable constant(std::uint32_t num_variables, bool value);

  /// Existential quantification of one variable: t[x:=0] | t[x:=1].
  TruthTable exists(Variable v) const;
  /// True when the function actually depends on v.
  bool depends_on(Variable v) const;

 private:
  void check_same_universe(const TruthTable& other) const;
  std::uint32_t num_variables_;
  std::vector<std::uint64_t> words_;
};

/// Exact model set of a CNF over its declared variables.
TruthTable table_of_cnf(const CnfFormula& cnf);
TruthTable table_of_cnf(const CnfFormula& cnf, std::uint32_t num_variables);

/// Exact model set of a diagram, evaluated by the defining recursion
/// directly; independent of the library's query paths.
TruthTable table_of_diagram(const DiagramStore& store, NodeRef root,
                            std::uint32_t num_variables);

/// {l : every model satisfies l}. Throws UnsatInput when the table is empty
/// (every literal would be implied).
LiteralSet implied_literals_bf(const TruthTable& table);

BigCount model_count_bf(const TruthTable& table);

bool equivalent_bf(const TruthTable& a, const TruthTable& b);

/// (x1 <-> y1) & ... & (xn <-> yn) over x1 < ... < xn < y1 < ... < yn,
/// as 2n two-literal clauses.
CnfFormula chain_family(std::uint32_t n);

/// For each k <= n, i+1 copies of xk tied to it by equivalences:
/// and_k and_j (xk <-> x_{k,j}), j = 1..i+1, copies ordered after all xk.
CnfFormula fan_family(std::uint32_t n, std::uint32_t i);

/// (x1 <-> y1) or ... or (xn <-> yn), CNF-encoded by distribution
/// (2^n clauses of 2n literals); auxiliary-variable free so the variable
/// order stays the one the size separation depends on. Throws TooLarge
/// beyond n = 8.
CnfFormula disjunctive_chain_family(std::uint32_t n);

}  // namespace bddil::oracle
