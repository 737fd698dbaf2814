#pragma once

#include "bddil/semantics.hpp"
#include "bddil/store.hpp"

namespace bddil {

/// Bottom-up memoized rebuild through the unique table. A node whose rebuilt
/// children coincide collapses onto the shared child, keeping the union of
/// the two literal sets. For inputs whose literal budget is 0 or maximal the
/// result is the canonical reduced form. Linear time, one visit per node.
NodeRef reduce(DiagramStore& store, NodeRef root);

/// Rebuilds an ordered diagram so every node carries its maximal implied
/// literal set, then reduces. Chains with a dead branch are absorbed into
/// literal sets; the result is the canonical diagram with maximal sets and
/// has at most 2n+1 nodes, n = input decision nodes with two live children.
NodeRef add_to_inf(DiagramStore& store, NodeRef root);

/// Expands every literal set into a chain of decision nodes with one False
/// branch. The output carries empty literal sets everywhere, repeats no
/// variable on any path, and is equivalent to the input.
/// Throws InputNotInf when some literal set is not maximal.
NodeRef to_free_diagram(DiagramStore& store, NodeRef root);

/// Converts a diagram with maximal literal sets into the canonical plain
/// diagram (every literal set empty), threading pending literals downward
/// and splicing ordered chains above each branch node.
/// Throws InputNotInf when some literal set is not maximal.
NodeRef to_plain_robdd(DiagramStore& store, NodeRef root);

}  // namespace bddil
