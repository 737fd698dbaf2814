#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "bddil/cnf.hpp"
#include "bddil/semantics.hpp"
#include "bddil/store.hpp"

namespace bddil {

/// Exact model counts; all divisions in the counting recurrence are checked
/// to leave no remainder.
using BigCount = mpz_class;

/// Number of models over a universe of `universe_size` variables containing
/// every diagram variable. Constant work per node: only the cached sizes of
/// the literal sets are read. Throws UniverseTooSmall.
BigCount count(const DiagramStore& store, NodeRef root, std::uint32_t universe_size);

/// Constant-time consistency and validity, relying on the canonical
/// representations of the two constants.
bool is_consistent(const DiagramStore& store, NodeRef root);
bool is_valid(const DiagramStore& store, NodeRef root);

/// Equivalence of two canonical diagrams: ref equality inside one store,
/// structural comparison across stores.
bool equivalent(const DiagramStore& store_a, NodeRef a, const DiagramStore& store_b, NodeRef b);
inline bool equivalent(const DiagramStore& store, NodeRef a, NodeRef b) {
  return equivalent(store, a, store, b);
}

/// Canonical diagram of the input conditioned on a consistent term. The
/// result mentions no variable of the term and carries maximal literal sets.
NodeRef condition(DiagramStore& store, NodeRef root, const LiteralSet& term);

/// phi => C. Tautological clauses are entailed trivially; otherwise the
/// clause holds exactly when conditioning on its negation yields False.
bool clausal_entailment(DiagramStore& store, NodeRef root, const std::vector<Literal>& clause);

/// T => phi: conditioning on the term leaves the constant true.
bool implicant_check(DiagramStore& store, NodeRef root, const LiteralSet& term);

/// Minimum number of false-assigned diagram variables over all models;
/// nullopt for the unsatisfiable diagram. Constant work per node via the
/// cached negative-literal counts.
std::optional<std::uint64_t> minimum_cardinality(const DiagramStore& store, NodeRef root);

/// Streams every model over the universe, duplicate-free, with polynomial
/// delay; total yield equals count() over the same universe.
class ModelStream {
 public:
  ModelStream(const DiagramStore& store, NodeRef root, std::vector<Variable> universe,
              std::optional<std::uint64_t> limit = std::nullopt);

  /// Next model, or nullopt when exhausted (or the limit is reached).
  std::optional<Assignment> next();

 private:
  bool descend(NodeRef node);
  bool advance();
  void setup_leaf();

  struct PathStep {
    NodeRef node;
    int branches_taken;        // 1 = low branch taken, 2 = high branch taken
    std::size_t literal_mark;  // path_literals_ size after this node's set
  };

  const DiagramStore& store_;
  NodeRef root_;
  std::vector<Variable> universe_;
  std::optional<std::uint64_t> remaining_;
  std::vector<PathStep> path_;
  std::vector<Literal> path_literals_;
  std::vector<Variable> free_variables_;
  std::uint64_t combo_ = 0;
  std::uint64_t combo_count_ = 0;  // pending expansions at the current leaf
  bool started_ = false;
  bool exhausted_ = false;
};

}  // namespace bddil
