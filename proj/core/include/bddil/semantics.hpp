#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bddil/store.hpp"

namespace bddil {

/// A literal budget per node: a finite count or "as many as possible".
class Level {
 public:
  static constexpr Level finite(std::uint32_t i) { return Level(i, false); }
  static constexpr Level infinity() { return Level(0, true); }

  constexpr bool is_infinity() const { return infinite_; }
  constexpr std::uint32_t finite_value() const { return value_; }

  /// Accepts a non-negative integer or "inf".
  static std::optional<Level> parse(const std::string& text);
  std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

  friend constexpr bool operator==(Level, Level) = default;

 private:
  constexpr Level(std::uint32_t value, bool infinite) : value_(value), infinite_(infinite) {}
  std::uint32_t value_;
  bool infinite_;
};

/// Reachable nodes in a deterministic order (children before parents).
std::vector<NodeRef> reachable_nodes(const DiagramStore& store, NodeRef root);

struct DiagramStats {
  std::uint64_t nodes = 0;
  std::uint64_t edges = 0;  // 2 * decision_nodes
  std::uint64_t decision_nodes = 0;
  friend bool operator==(const DiagramStats&, const DiagramStats&) = default;
};

DiagramStats stats(const DiagramStore& store, NodeRef root);

/// Truth value of the diagram under a complete assignment: every literal of
/// a node's set must hold, then the branch variable selects the child.
bool evaluate(const DiagramStore& store, NodeRef root, const Assignment& assignment);

/// Maximal implied-literal sets, computed bottom-up in one pass:
///   True node          -> L(v)
///   lo = False         -> L(v) + {var} + linf(hi)
///   hi = False         -> L(v) + {-var} + linf(lo)
///   otherwise          -> L(v) + (linf(lo) & linf(hi))
/// The False node has no entry. For ordered diagrams this is exactly the set
/// of literals implied by each node's formula; for unordered ones it may
/// miss literals.
std::unordered_map<NodeRef, LitSetRef> compute_linf(DiagramStore& store, NodeRef root);

enum class ValidationLevel : std::uint8_t {
  Bddl,       // basic structural rules
  ObddlWeak,  // + variable order strictly increases downward
  Obddl,      // + literal sets are order-minimal prefixes of the maximal set
  Reduced,    // + no duplicate nodes, no node with two identical children
  RobddI,     // + per-node literal budget for a given level
};

struct ValidationReport {
  struct Violation {
    NodeRef node;
    std::string rule;
    std::string detail;
  };
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the structural discipline of the diagram, cumulatively up to the
/// requested level. `level_i` is required for RobddI. Violations are data,
/// not errors.
ValidationReport validate(DiagramStore& store, NodeRef root, ValidationLevel level,
                          std::optional<Level> level_i = std::nullopt);

/// Variables appearing in the diagram (branch variables and literal sets),
/// sorted ascending.
std::vector<Variable> diagram_variables(const DiagramStore& store, NodeRef root);

}  // namespace bddil
