#include "bddil/store.hpp"

namespace bddil {

namespace {

inline std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

}  // namespace

std::size_t DiagramStore::NodeHash::operator()(const Node& n) const noexcept {
  std::size_t h = static_cast<std::size_t>(n.kind);
  h = mix(h, n.var.index());
  h = mix(h, n.lo.id());
  h = mix(h, n.hi.id());
  h = mix(h, n.lits.id());
  return h;
}

std::size_t DiagramStore::SetHash::operator()(const std::vector<Literal>& v) const noexcept {
  std::size_t h = v.size();
  for (Literal l : v) h = mix(h, l.code());
  return h;
}

DiagramStore::DiagramStore() {
  literal_sets_.push_back(LiteralSet());
  set_table_.emplace(std::vector<Literal>(), 0u);
  // Node 0 is the unique False, node 1 the unique true <{}>.
  nodes_.push_back(Node::make_false());
  unique_table_.emplace(nodes_[0], 0u);
  nodes_.push_back(Node::make_true(empty_literal_set()));
  unique_table_.emplace(nodes_[1], 1u);
}

LitSetRef DiagramStore::intern_literal_set(const LiteralSet& set) {
  auto it = set_table_.find(set.literals());
  if (it != set_table_.end()) return LitSetRef(it->second);
  const auto id = static_cast<std::uint32_t>(literal_sets_.size());
  literal_sets_.push_back(set);
  set_table_.emplace(set.literals(), id);
  return LitSetRef(id);
}

const LiteralSet& DiagramStore::literal_set(LitSetRef ref) const {
  if (!ref.valid() || ref.id() >= literal_sets_.size()) {
    throw ForeignRef("literal set ref does not belong to this store");
  }
  return literal_sets_[ref.id()];
}

void DiagramStore::check_ref(NodeRef ref) const {
  if (!ref.valid() || ref.id() >= nodes_.size()) {
    throw ForeignRef("node ref does not belong to this store");
  }
}

NodeRef DiagramStore::mk(const Node& node) {
  Node key = node;
  switch (node.kind) {
    case NodeKind::False:
      return false_ref();
    case NodeKind::True:
      literal_set(node.lits);  // validates the ref
      key.var = Variable();
      key.lo = NodeRef();
      key.hi = NodeRef();
      break;
    case NodeKind::Decision: {
      check_ref(node.lo);
      check_ref(node.hi);
      const LiteralSet& lits = literal_set(node.lits);
      if (!node.var.valid()) throw Error("decision node without a variable");
      if (node.lo == false_ref() && node.hi == false_ref()) {
        throw Error("decision node with two False children");
      }
      if (lits.contains_variable(node.var)) {
        throw Error("decision variable occurs in the node's literal set");
      }
      break;
    }
  }
  auto it = unique_table_.find(key);
  if (it != unique_table_.end()) return NodeRef(it->second);
  const auto id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(key);
  unique_table_.emplace(key, id);
  return NodeRef(id);
}

const Node& DiagramStore::node(NodeRef ref) const {
  check_ref(ref);
  return nodes_[ref.id()];
}

}  // namespace bddil
