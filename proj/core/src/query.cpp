#include "bddil/query.hpp"

#include <algorithm>
#include <unordered_map>

#include "bddil/transform.hpp"

namespace bddil {

BigCount count(const DiagramStore& store, NodeRef root, std::uint32_t universe_size) {
  const std::size_t distinct = diagram_variables(store, root).size();
  if (universe_size < distinct) {
    throw UniverseTooSmall("universe of " + std::to_string(universe_size) +
                           " variables cannot cover " + std::to_string(distinct) +
                           " diagram variables");
  }
  std::unordered_map<NodeRef, BigCount> memo;
  auto walk = [&](auto&& self, NodeRef ref) -> const BigCount& {
    auto it = memo.find(ref);
    if (it != memo.end()) return it->second;
    const Node& n = store.node(ref);
    BigCount result = 0;
    switch (n.kind) {
      case NodeKind::False:
        break;
      case NodeKind::True:
        result = BigCount(1) << (universe_size - store.literal_set(n.lits).size());
        break;
      case NodeKind::Decision: {
        result = self(self, n.lo) + self(self, n.hi);
        const auto shift =
            static_cast<mp_bitcnt_t>(store.literal_set(n.lits).size() + 1);
        if (mpz_divisible_2exp_p(result.get_mpz_t(), shift) == 0) {
          throw Error("model-count recurrence division left a remainder");
        }
        result >>= shift;
        break;
      }
    }
    return memo.emplace(ref, std::move(result)).first->second;
  };
  return walk(walk, root);
}

bool is_consistent(const DiagramStore& store, NodeRef root) {
  return root != store.false_ref();
}

bool is_valid(const DiagramStore& store, NodeRef root) { return root == store.true_ref(); }

bool equivalent(const DiagramStore& store_a, NodeRef a, const DiagramStore& store_b, NodeRef b) {
  if (&store_a == &store_b) return a == b;
  struct PairHash {
    std::size_t operator()(const std::pair<NodeRef, NodeRef>& p) const noexcept {
      return std::hash<std::uint64_t>()((std::uint64_t(p.first.id()) << 32) | p.second.id());
    }
  };
  std::unordered_map<std::pair<NodeRef, NodeRef>, bool, PairHash> memo;
  auto walk = [&](auto&& self, NodeRef x, NodeRef y) -> bool {
    auto it = memo.find({x, y});
    if (it != memo.end()) return it->second;
    const Node& nx = store_a.node(x);
    const Node& ny = store_b.node(y);
    bool same = nx.kind == ny.kind;
    if (same && nx.kind != NodeKind::False) {
      same = store_a.literal_set(nx.lits) == store_b.literal_set(ny.lits);
    }
    if (same && nx.kind == NodeKind::Decision) {
      same = nx.var == ny.var && self(self, nx.lo, ny.lo) && self(self, nx.hi, ny.hi);
    }
    memo.emplace(std::make_pair(x, y), same);
    return same;
  };
  return walk(walk, a, b);
}

namespace {

NodeRef condition_sub(DiagramStore& store, NodeRef root, const LiteralSet& term) {
  std::unordered_map<NodeRef, NodeRef> memo;
  auto walk = [&](auto&& self, NodeRef ref) -> NodeRef {
    auto it = memo.find(ref);
    if (it != memo.end()) return it->second;
    const Node n = store.node(ref);
    NodeRef result = store.false_ref();
    if (n.kind != NodeKind::False) {
      const LiteralSet lits = store.literal_set(n.lits);
      if (lits.clashes_with(term)) {
        result = store.false_ref();
      } else if (n.kind == NodeKind::True) {
        result = store.mk_true(store.intern_literal_set(lits.minus(term)));
      } else {
        NodeRef lo, hi;
        if (term.contains(Literal(n.var, true))) {
          lo = store.false_ref();
          hi = self(self, n.hi);
        } else if (term.contains(Literal(n.var, false))) {
          lo = self(self, n.lo);
          hi = store.false_ref();
        } else {
          lo = self(self, n.lo);
          hi = self(self, n.hi);
        }
        result = (lo == store.false_ref() && hi == store.false_ref())
                     ? store.false_ref()
                     : store.mk_decision(n.var, lo, hi,
                                         store.intern_literal_set(lits.minus(term)));
      }
    }
    memo.emplace(ref, result);
    return result;
  };
  return walk(walk, root);
}

// Drops every literal over a term variable from all literal sets. After the
// maximal-set rebuild those literals can only sit at the root, but the walk
// is cheap and total.
NodeRef strip_term_variables(DiagramStore& store, NodeRef root, const LiteralSet& term) {
  std::unordered_map<NodeRef, NodeRef> memo;
  auto walk = [&](auto&& self, NodeRef ref) -> NodeRef {
    auto it = memo.find(ref);
    if (it != memo.end()) return it->second;
    const Node n = store.node(ref);
    NodeRef result = ref;
    if (n.kind == NodeKind::True) {
      result = store.mk_true(
          store.intern_literal_set(store.literal_set(n.lits).minus_variables(term)));
    } else if (n.kind == NodeKind::Decision) {
      const NodeRef lo = self(self, n.lo);
      const NodeRef hi = self(self, n.hi);
      const LiteralSet stripped = store.literal_set(n.lits).minus_variables(term);
      result = store.mk_decision(n.var, lo, hi, store.intern_literal_set(stripped));
    }
    memo.emplace(ref, result);
    return result;
  };
  return walk(walk, root);
}

}  // namespace

NodeRef condition(DiagramStore& store, NodeRef root, const LiteralSet& term) {
  if (term.empty() || root == store.false_ref()) return root;
  NodeRef result = condition_sub(store, root, term);
  if (result == store.false_ref()) return result;
  result = add_to_inf(store, result);
  result = strip_term_variables(store, result, term);
  return reduce(store, result);
}

bool clausal_entailment(DiagramStore& store, NodeRef root, const std::vector<Literal>& clause) {
  std::vector<Literal> negated;
  negated.reserve(clause.size());
  for (Literal l : clause) negated.push_back(l.negated());
  LiteralSet term;
  try {
    term = LiteralSet::from(negated);
  } catch (const InconsistentSet&) {
    return true;  // tautological clause
  }
  return condition(store, root, term) == store.false_ref();
}

bool implicant_check(DiagramStore& store, NodeRef root, const LiteralSet& term) {
  return condition(store, root, term) == store.true_ref();
}

std::optional<std::uint64_t> minimum_cardinality(const DiagramStore& store, NodeRef root) {
  std::unordered_map<NodeRef, std::optional<std::uint64_t>> memo;
  auto walk = [&](auto&& self, NodeRef ref) -> std::optional<std::uint64_t> {
    auto it = memo.find(ref);
    if (it != memo.end()) return it->second;
    const Node& n = store.node(ref);
    std::optional<std::uint64_t> result;
    switch (n.kind) {
      case NodeKind::False:
        break;
      case NodeKind::True:
        result = store.literal_set(n.lits).negative_count();
        break;
      case NodeKind::Decision: {
        const auto lo = self(self, n.lo);
        const auto hi = self(self, n.hi);
        std::optional<std::uint64_t> best;
        if (lo.has_value()) best = *lo + 1;
        if (hi.has_value() && (!best.has_value() || *hi < *best)) best = *hi;
        if (best.has_value()) {
          result = *best + store.literal_set(n.lits).negative_count();
        }
        break;
      }
    }
    memo.emplace(ref, result);
    return result;
  };
  return walk(walk, root);
}

ModelStream::ModelStream(const DiagramStore& store, NodeRef root, std::vector<Variable> universe,
                         std::optional<std::uint64_t> limit)
    : store_(store), root_(root), universe_(std::move(universe)), remaining_(limit) {
  std::sort(universe_.begin(), universe_.end());
  universe_.erase(std::unique(universe_.begin(), universe_.end()), universe_.end());
  for (Variable v : diagram_variables(store_, root_)) {
    if (!std::binary_search(universe_.begin(), universe_.end(), v)) {
      throw UniverseTooSmall("universe misses diagram variable " + std::to_string(v.index()));
    }
  }
}

void ModelStream::setup_leaf() {
  free_variables_.clear();
  std::vector<Variable> assigned;
  assigned.reserve(path_literals_.size());
  for (Literal l : path_literals_) assigned.push_back(l.variable());
  std::sort(assigned.begin(), assigned.end());
  for (Variable v : universe_) {
    if (!std::binary_search(assigned.begin(), assigned.end(), v)) free_variables_.push_back(v);
  }
  if (free_variables_.size() > 62) {
    throw TooLarge("more than 62 unconstrained variables in one enumeration leaf");
  }
  combo_ = 0;
  combo_count_ = std::uint64_t(1) << free_variables_.size();
}

bool ModelStream::descend(NodeRef ref) {
  for (;;) {
    const Node& n = store_.node(ref);
    if (n.kind == NodeKind::False) return false;
    for (Literal l : store_.literal_set(n.lits)) path_literals_.push_back(l);
    if (n.kind == NodeKind::True) {
      setup_leaf();
      return true;
    }
    PathStep step{ref, 0, path_literals_.size()};
    if (n.lo != store_.false_ref()) {
      step.branches_taken = 1;
      path_.push_back(step);
      path_literals_.push_back(Literal(n.var, false));
      ref = n.lo;
    } else {
      step.branches_taken = 2;
      path_.push_back(step);
      path_literals_.push_back(Literal(n.var, true));
      ref = n.hi;
    }
  }
}

bool ModelStream::advance() {
  while (!path_.empty()) {
    PathStep& step = path_.back();
    const Node& n = store_.node(step.node);
    if (step.branches_taken == 1 && n.hi != store_.false_ref()) {
      path_literals_.resize(step.literal_mark);
      path_literals_.push_back(Literal(n.var, true));
      step.branches_taken = 2;
      if (descend(n.hi)) return true;
      continue;
    }
    path_literals_.resize(step.literal_mark - store_.literal_set(n.lits).size());
    path_.pop_back();
  }
  return false;
}

std::optional<Assignment> ModelStream::next() {
  if (exhausted_) return std::nullopt;
  if (remaining_.has_value() && *remaining_ == 0) {
    exhausted_ = true;
    return std::nullopt;
  }
  if (combo_count_ == 0) {
    bool found = false;
    if (!started_) {
      started_ = true;
      found = root_ != store_.false_ref() && descend(root_);
    } else {
      found = advance();
    }
    if (!found) {
      exhausted_ = true;
      return std::nullopt;
    }
  }
  std::vector<Literal> literals = path_literals_;
  for (std::size_t j = 0; j < free_variables_.size(); ++j) {
    literals.emplace_back(free_variables_[j], ((combo_ >> j) & 1) != 0);
  }
  ++combo_;
  --combo_count_;
  if (remaining_.has_value()) --(*remaining_);
  return Assignment::over(LiteralSet::from(literals), universe_);
}

}  // namespace bddil
