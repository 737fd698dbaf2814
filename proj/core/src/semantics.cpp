#include "bddil/semantics.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace bddil {

std::optional<Level> Level::parse(const std::string& text) {
  if (text == "inf" || text == "infinity") return Level::infinity();
  std::uint32_t value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return Level::finite(value);
}

std::vector<NodeRef> reachable_nodes(const DiagramStore& store, NodeRef root) {
  std::vector<NodeRef> order;
  std::vector<NodeRef> stack{root};
  std::set<NodeRef> seen;
  while (!stack.empty()) {
    NodeRef ref = stack.back();
    stack.pop_back();
    if (!seen.insert(ref).second) continue;
    order.push_back(ref);
    const Node& n = store.node(ref);
    if (n.kind == NodeKind::Decision) {
      stack.push_back(n.lo);
      stack.push_back(n.hi);
    }
  }
  // Children before parents: arena indices grow upward from children.
  std::sort(order.begin(), order.end());
  return order;
}

DiagramStats stats(const DiagramStore& store, NodeRef root) {
  DiagramStats s;
  for (NodeRef ref : reachable_nodes(store, root)) {
    ++s.nodes;
    if (store.node(ref).kind == NodeKind::Decision) ++s.decision_nodes;
  }
  s.edges = 2 * s.decision_nodes;
  return s;
}

std::vector<Variable> diagram_variables(const DiagramStore& store, NodeRef root) {
  std::set<Variable> vars;
  for (NodeRef ref : reachable_nodes(store, root)) {
    const Node& n = store.node(ref);
    if (n.kind == NodeKind::False) continue;
    if (n.kind == NodeKind::Decision) vars.insert(n.var);
    for (Literal l : store.literal_set(n.lits)) vars.insert(l.variable());
  }
  return std::vector<Variable>(vars.begin(), vars.end());
}

bool evaluate(const DiagramStore& store, NodeRef root, const Assignment& assignment) {
  if (!assignment.complete()) {
    throw IncompleteAssignment("assignment does not cover its universe");
  }
  for (Variable v : diagram_variables(store, root)) {
    if (!assignment.literals.contains_variable(v)) {
      throw IncompleteAssignment("assignment misses diagram variable " +
                                 std::to_string(v.index()));
    }
  }
  std::unordered_map<NodeRef, bool> memo;
  auto eval = [&](auto&& self, NodeRef ref) -> bool {
    auto it = memo.find(ref);
    if (it != memo.end()) return it->second;
    const Node& n = store.node(ref);
    bool value = false;
    switch (n.kind) {
      case NodeKind::False:
        value = false;
        break;
      case NodeKind::True:
      case NodeKind::Decision: {
        value = true;
        for (Literal l : store.literal_set(n.lits)) {
          if (!assignment.literals.contains(l)) {
            value = false;
            break;
          }
        }
        if (value && n.kind == NodeKind::Decision) {
          const bool var_true = *assignment.literals.polarity_of(n.var);
          value = self(self, var_true ? n.hi : n.lo);
        }
        break;
      }
    }
    memo.emplace(ref, value);
    return value;
  };
  return eval(eval, root);
}

std::unordered_map<NodeRef, LitSetRef> compute_linf(DiagramStore& store, NodeRef root) {
  std::unordered_map<NodeRef, LitSetRef> linf;
  if (store.is_false(root)) return linf;
  for (NodeRef ref : reachable_nodes(store, root)) {  // children first
    const Node& n = store.node(ref);
    if (n.kind == NodeKind::False) continue;
    const LiteralSet& own = store.literal_set(n.lits);
    if (n.kind == NodeKind::True) {
      linf.emplace(ref, n.lits);
      continue;
    }
    LiteralSet result;
    if (n.lo == store.false_ref()) {
      result = store.literal_set(linf.at(n.hi)).inserted(Literal(n.var, true)).unioned(own);
    } else if (n.hi == store.false_ref()) {
      result = store.literal_set(linf.at(n.lo)).inserted(Literal(n.var, false)).unioned(own);
    } else {
      result = store.literal_set(linf.at(n.lo))
                   .intersected(store.literal_set(linf.at(n.hi)))
                   .unioned(own);
    }
    linf.emplace(ref, store.intern_literal_set(result));
  }
  return linf;
}

namespace {

struct Validator {
  DiagramStore& store;
  ValidationReport report;

  void add(NodeRef node, std::string rule, std::string detail) {
    report.violations.push_back({node, std::move(rule), std::move(detail)});
  }
};

}  // namespace

ValidationReport validate(DiagramStore& store, NodeRef root, ValidationLevel level,
                          std::optional<Level> level_i) {
  Validator v{store, {}};
  const std::vector<NodeRef> order = reachable_nodes(store, root);

  // Variable closure per node, children first.
  std::unordered_map<NodeRef, std::set<Variable>> vars;
  for (NodeRef ref : order) {
    const Node& n = store.node(ref);
    std::set<Variable> set;
    if (n.kind != NodeKind::False) {
      for (Literal l : store.literal_set(n.lits)) set.insert(l.variable());
      if (n.kind == NodeKind::Decision) {
        set.insert(n.var);
        for (Variable x : vars.at(n.lo)) set.insert(x);
        for (Variable x : vars.at(n.hi)) set.insert(x);
      }
    }
    vars.emplace(ref, std::move(set));
  }

  for (NodeRef ref : order) {
    const Node& n = store.node(ref);
    if (n.kind != NodeKind::Decision) continue;
    const LiteralSet& lits = store.literal_set(n.lits);
    if (lits.contains_variable(n.var)) {
      v.add(ref, "bddl", "branch variable occurs in the node's literal set");
    }
    for (Literal l : lits) {
      if (vars.at(n.lo).count(l.variable()) || vars.at(n.hi).count(l.variable())) {
        v.add(ref, "bddl", "literal-set variable " + std::to_string(l.variable().index()) +
                               " reappears in a descendant");
      }
    }
    if (n.lo == store.false_ref() && n.hi == store.false_ref()) {
      v.add(ref, "bddl", "both children are False");
    }
  }
  if (level == ValidationLevel::Bddl) return v.report;

  for (NodeRef ref : order) {
    const Node& n = store.node(ref);
    if (n.kind != NodeKind::Decision) continue;
    for (NodeRef child : {n.lo, n.hi}) {
      for (Variable x : vars.at(child)) {
        if (!(n.var < x)) {
          v.add(ref, "order", "child variable " + std::to_string(x.index()) +
                                  " is not above branch variable " +
                                  std::to_string(n.var.index()));
        }
      }
    }
  }
  if (level == ValidationLevel::ObddlWeak) return v.report;

  // The remaining levels interpret literal sets against the maximal sets.
  std::unordered_map<NodeRef, LitSetRef> linf;
  const bool ordered_so_far = v.report.violations.empty();
  if (ordered_so_far) {
    linf = compute_linf(store, root);
    for (NodeRef ref : order) {
      const Node& n = store.node(ref);
      if (n.kind == NodeKind::False) continue;
      const LiteralSet& own = store.literal_set(n.lits);
      const LiteralSet rest = store.literal_set(linf.at(ref)).minus(own);
      for (Literal a : own) {
        for (Literal b : rest) {
          if (!(a.variable() < b.variable())) {
            v.add(ref, "obddl", "literal set is not the variable-minimal prefix of the maximal set");
          }
        }
      }
    }
  }
  if (level == ValidationLevel::Obddl) return v.report;

  {
    std::set<std::tuple<NodeKind, Variable, NodeRef, NodeRef, LitSetRef>> shapes;
    for (NodeRef ref : order) {
      const Node& n = store.node(ref);
      if (!shapes.insert({n.kind, n.var, n.lo, n.hi, n.lits}).second) {
        v.add(ref, "reduced", "two distinct nodes are structurally equal");
      }
      if (n.kind == NodeKind::Decision && n.lo == n.hi) {
        v.add(ref, "reduced", "node has two identical children");
      }
    }
  }
  if (level == ValidationLevel::Reduced) return v.report;

  if (!level_i.has_value()) {
    v.add(root, "robdd_i", "no literal budget supplied for the RobddI level");
    return v.report;
  }
  if (!ordered_so_far) return v.report;  // maximal sets unavailable
  for (NodeRef ref : order) {
    const Node& n = store.node(ref);
    if (n.kind == NodeKind::False) continue;
    const LiteralSet& own = store.literal_set(n.lits);
    const bool maximal = linf.at(ref) == n.lits;
    if (level_i->is_infinity()) {
      if (!maximal) v.add(ref, "robdd_i", "literal set is not maximal");
    } else {
      const std::uint32_t budget = level_i->finite_value();
      if (own.size() != budget && !(own.size() < budget && maximal)) {
        v.add(ref, "robdd_i", "literal set has " + std::to_string(own.size()) +
                                  " literals for budget " + std::to_string(budget));
      }
    }
  }
  if (level_i->is_infinity() && root != store.false_ref()) {
    for (NodeRef ref : order) {
      if (ref == store.false_ref()) {
        v.add(ref, "robdd_i", "False node reachable from a satisfiable root");
      }
    }
  }
  return v.report;
}

}  // namespace bddil
