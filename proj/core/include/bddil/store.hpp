#pragma once

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "bddil/literal.hpp"

namespace bddil {

/// Opaque handle to an interned literal set inside one DiagramStore.
class LitSetRef {
 public:
  constexpr LitSetRef() = default;
  constexpr explicit LitSetRef(std::uint32_t id) : id_(id) {}
  constexpr std::uint32_t id() const { return id_; }
  constexpr bool valid() const { return id_ != invalid_id; }
  friend constexpr auto operator<=>(LitSetRef, LitSetRef) = default;

 private:
  static constexpr std::uint32_t invalid_id = 0xffffffffu;
  std::uint32_t id_ = invalid_id;
};

/// Opaque handle to a node inside one DiagramStore. Stable for the store's
/// lifetime; nodes are never mutated after interning.
class NodeRef {
 public:
  constexpr NodeRef() = default;
  constexpr explicit NodeRef(std::uint32_t id) : id_(id) {}
  constexpr std::uint32_t id() const { return id_; }
  constexpr bool valid() const { return id_ != invalid_id; }
  friend constexpr auto operator<=>(NodeRef, NodeRef) = default;

 private:
  static constexpr std::uint32_t invalid_id = 0xffffffffu;
  std::uint32_t id_ = invalid_id;
};

enum class NodeKind : std::uint8_t { False, True, Decision };

/// One diagram node. False carries nothing; True carries a literal set;
/// a decision node carries a branch variable, two children and a literal set.
struct Node {
  NodeKind kind = NodeKind::False;
  Variable var;
  NodeRef lo;
  NodeRef hi;
  LitSetRef lits;

  static Node make_false() { return Node{}; }
  static Node make_true(LitSetRef lits) {
    return Node{NodeKind::True, Variable(), NodeRef(), NodeRef(), lits};
  }
  static Node make_decision(Variable var, NodeRef lo, NodeRef hi, LitSetRef lits) {
    return Node{NodeKind::Decision, var, lo, hi, lits};
  }

  friend bool operator==(const Node&, const Node&) = default;
};

/// Hash-consed arena of diagram nodes plus the intern table for literal
/// sets. Structurally equal nodes always share one ref; refs are append-only
/// indices. Construction is single-writer; a finished store may be read
/// concurrently.
class DiagramStore {
 public:
  DiagramStore();

  // --- literal sets -------------------------------------------------------
  LitSetRef intern_literal_set(const LiteralSet& set);
  LitSetRef intern_literal_set(std::span<const Literal> literals) {
    return intern_literal_set(LiteralSet::from(literals));
  }
  const LiteralSet& literal_set(LitSetRef ref) const;
  LitSetRef empty_literal_set() const { return LitSetRef(0); }
  std::size_t literal_set_count() const { return literal_sets_.size(); }

  // --- nodes --------------------------------------------------------------
  NodeRef false_ref() const { return NodeRef(0); }
  /// The unique representation of the constant true: a True node with an
  /// empty literal set.
  NodeRef true_ref() const { return NodeRef(1); }

  /// Interns a node description: a structurally equal node returns the
  /// previously issued ref. Throws ForeignRef when a child ref does not
  /// belong to this store, InconsistentSet for an invalid literal set ref,
  /// and Error when a decision node is degenerate (both children False or
  /// its variable inside its own literal set).
  NodeRef mk(const Node& node);

  NodeRef mk_true(LitSetRef lits) { return mk(Node::make_true(lits)); }
  NodeRef mk_true(const LiteralSet& lits) { return mk_true(intern_literal_set(lits)); }
  NodeRef mk_decision(Variable var, NodeRef lo, NodeRef hi, LitSetRef lits) {
    return mk(Node::make_decision(var, lo, hi, lits));
  }

  const Node& node(NodeRef ref) const;
  const LiteralSet& node_literals(NodeRef ref) const { return literal_set(node(ref).lits); }
  std::size_t node_count() const { return nodes_.size(); }

  bool is_false(NodeRef ref) const { return ref == false_ref(); }
  bool is_true_node(NodeRef ref) const { return node(ref).kind == NodeKind::True; }
  bool is_decision(NodeRef ref) const { return node(ref).kind == NodeKind::Decision; }

 private:
  void check_ref(NodeRef ref) const;

  struct NodeHash {
    std::size_t operator()(const Node& n) const noexcept;
  };
  struct SetHash {
    std::size_t operator()(const std::vector<Literal>& v) const noexcept;
  };

  std::vector<Node> nodes_;
  std::unordered_map<Node, std::uint32_t, NodeHash> unique_table_;
  std::vector<LiteralSet> literal_sets_;
  std::unordered_map<std::vector<Literal>, std::uint32_t, SetHash> set_table_;
};

}  // namespace bddil

template <>
struct std::hash<bddil::NodeRef> {
  std::size_t operator()(bddil::NodeRef r) const noexcept {
    return std::hash<std::uint32_t>()(r.id());
  }
};

template <>
struct std::hash<bddil::LitSetRef> {
  std::size_t operator()(bddil::LitSetRef r) const noexcept {
    return std::hash<std::uint32_t>()(r.id());
  }
};
