#include "bddil/transform.hpp"

#include <algorithm>
#include <unordered_map>

namespace bddil {

namespace {

// Fresh node identical to `ref` except for its literal set.
NodeRef with_literals(DiagramStore& store, NodeRef ref, const LiteralSet& lits) {
  const Node n = store.node(ref);
  if (n.kind == NodeKind::True) return store.mk_true(store.intern_literal_set(lits));
  return store.mk_decision(n.var, n.lo, n.hi, store.intern_literal_set(lits));
}

}  // namespace

NodeRef reduce(DiagramStore& store, NodeRef root) {
  std::unordered_map<NodeRef, NodeRef> memo;
  auto walk = [&](auto&& self, NodeRef ref) -> NodeRef {
    auto it = memo.find(ref);
    if (it != memo.end()) return it->second;
    const Node n = store.node(ref);
    NodeRef result = ref;
    if (n.kind == NodeKind::Decision) {
      const NodeRef lo = self(self, n.lo);
      const NodeRef hi = self(self, n.hi);
      if (lo == hi) {
        if (lo == store.false_ref()) {
          result = store.false_ref();
        } else {
          LiteralSet merged;
          try {
            merged = store.literal_set(n.lits).unioned(store.node_literals(lo));
          } catch (const InconsistentSet& e) {
            throw InconsistentMerge(e.what());
          }
          result = with_literals(store, lo, merged);
        }
      } else {
        result = store.mk_decision(n.var, lo, hi, n.lits);
      }
    }
    memo.emplace(ref, result);
    return result;
  };
  return walk(walk, root);
}

NodeRef add_to_inf(DiagramStore& store, NodeRef root) {
  if (root == store.false_ref()) return root;
  const auto linf = compute_linf(store, root);
  std::unordered_map<NodeRef, NodeRef> memo;

  auto sub = [&](auto&& self, NodeRef v) -> NodeRef {
    auto it = memo.find(v);
    if (it != memo.end()) return it->second;
    // Copy: interning below may relocate the store's literal-set arena.
    const LiteralSet maximal = store.literal_set(linf.at(v));
    // Skip along the dead-branch chain while the branch variable is already
    // covered by the maximal set.
    NodeRef walker = v;
    while (store.is_decision(walker) && maximal.contains_variable(store.node(walker).var)) {
      const Node& w = store.node(walker);
      walker = (w.lo == store.false_ref()) ? w.hi : w.lo;
    }
    NodeRef result;
    if (store.is_true_node(walker)) {
      result = store.mk_true(store.intern_literal_set(maximal));
    } else {
      const Node& w = store.node(walker);
      const NodeRef lo_full = self(self, w.lo);
      const NodeRef hi_full = self(self, w.hi);
      // The subtraction is per parent and deliberately outside the memo.
      const NodeRef lo = with_literals(store, lo_full, store.node_literals(lo_full).minus(maximal));
      const NodeRef hi = with_literals(store, hi_full, store.node_literals(hi_full).minus(maximal));
      result = store.mk_decision(w.var, lo, hi, store.intern_literal_set(maximal));
    }
    memo.emplace(v, result);
    return result;
  };
  return reduce(store, sub(sub, root));
}

namespace {

void require_maximal_sets(DiagramStore& store, NodeRef root) {
  const auto linf = compute_linf(store, root);
  for (const auto& [ref, maximal] : linf) {
    if (store.node(ref).lits != maximal) {
      throw InputNotInf("node literal set is smaller than its maximal implied set");
    }
  }
}

// Chain of decision nodes asserting `term`, ascending variable order from
// the top, ending in `tail`.
NodeRef literal_chain(DiagramStore& store, const LiteralSet& term, NodeRef tail) {
  NodeRef result = tail;
  const auto& lits = term.literals();
  for (auto it = lits.rbegin(); it != lits.rend(); ++it) {
    result = it->positive()
                 ? store.mk_decision(it->variable(), store.false_ref(), result,
                                     store.empty_literal_set())
                 : store.mk_decision(it->variable(), result, store.false_ref(),
                                     store.empty_literal_set());
  }
  return result;
}

}  // namespace

NodeRef to_free_diagram(DiagramStore& store, NodeRef root) {
  if (root == store.false_ref()) return root;
  require_maximal_sets(store, root);
  std::unordered_map<NodeRef, NodeRef> memo;
  auto walk = [&](auto&& self, NodeRef v) -> NodeRef {
    auto it = memo.find(v);
    if (it != memo.end()) return it->second;
    const Node n = store.node(v);
    NodeRef result;
    if (n.kind == NodeKind::False) {
      result = store.false_ref();
    } else {
      NodeRef u = (n.kind == NodeKind::Decision)
                      ? store.mk_decision(n.var, self(self, n.lo), self(self, n.hi),
                                          store.empty_literal_set())
                      : store.true_ref();
      const LiteralSet lits = store.literal_set(n.lits);
      result = literal_chain(store, lits, u);
    }
    memo.emplace(v, result);
    return result;
  };
  return walk(walk, root);
}

NodeRef to_plain_robdd(DiagramStore& store, NodeRef root) {
  if (root == store.false_ref()) return root;
  require_maximal_sets(store, root);

  struct Key {
    NodeRef node;
    LitSetRef term;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return std::hash<std::uint64_t>()((std::uint64_t(k.node.id()) << 32) | k.term.id());
    }
  };
  std::unordered_map<Key, NodeRef, KeyHash> memo;

  auto sub = [&](auto&& self, NodeRef v, LitSetRef term_ref) -> NodeRef {
    const Key key{v, term_ref};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const Node n = store.node(v);
    const LiteralSet pending = store.literal_set(term_ref).unioned(store.literal_set(n.lits));
    NodeRef result;
    if (n.kind == NodeKind::True) {
      result = literal_chain(store, pending, store.true_ref());
    } else {
      // Literals over variables above the branch go below it; the rest are
      // spliced as a chain on top.
      std::vector<Literal> above, below;
      for (Literal l : pending) {
        (l.variable() < n.var ? above : below).push_back(l);
      }
      const LitSetRef below_ref =
          store.intern_literal_set(LiteralSet::from_sorted_unchecked(std::move(below)));
      const NodeRef branch = store.mk_decision(n.var, self(self, n.lo, below_ref),
                                               self(self, n.hi, below_ref),
                                               store.empty_literal_set());
      result = literal_chain(store, LiteralSet::from_sorted_unchecked(std::move(above)), branch);
    }
    memo.emplace(key, result);
    return result;
  };
  return reduce(store, sub(sub, root, store.empty_literal_set()));
}

}  // namespace bddil
