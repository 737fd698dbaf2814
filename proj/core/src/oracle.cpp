#include "bddil/oracle.hpp"

#include <bit>
#include <unordered_map>

namespace bddil::oracle {

namespace {

std::size_t word_count(std::uint32_t num_variables) {
  const std::uint64_t bits = std::uint64_t(1) << num_variables;
  return static_cast<std::size_t>((bits + 63) / 64);
}

// Mask of the trailing bits that belong to the table when it is smaller
// than one word.
std::uint64_t tail_mask(std::uint32_t num_variables) {
  if (num_variables >= 6) return ~std::uint64_t(0);
  return (std::uint64_t(1) << (std::uint64_t(1) << num_variables)) - 1;
}

}  // namespace

TruthTable::TruthTable(std::uint32_t num_variables) : num_variables_(num_variables) {
  if (num_variables > max_variables) {
    throw TooManyVariables("truth tables are capped at " + std::to_string(max_variables) +
                           " variables");
  }
  words_.assign(word_count(num_variables), 0);
}

void TruthTable::check_same_universe(const TruthTable& other) const {
  if (num_variables_ != other.num_variables_) {
    throw UniverseMismatch("truth tables over different universes");
  }
}

bool TruthTable::test(std::uint64_t assignment) const {
  return (words_[assignment / 64] >> (assignment % 64)) & 1;
}

void TruthTable::set(std::uint64_t assignment, bool value) {
  const std::uint64_t bit = std::uint64_t(1) << (assignment % 64);
  if (value) {
    words_[assignment / 64] |= bit;
  } else {
    words_[assignment / 64] &= ~bit;
  }
}

std::uint64_t TruthTable::popcount() const {
  std::uint64_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

TruthTable TruthTable::operator&(const TruthTable& other) const {
  check_same_universe(other);
  TruthTable out(num_variables_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & other.words_[i];
  return out;
}

TruthTable TruthTable::operator|(const TruthTable& other) const {
  check_same_universe(other);
  TruthTable out(num_variables_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] | other.words_[i];
  return out;
}

TruthTable TruthTable::operator~() const {
  TruthTable out(num_variables_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
  out.words_.back() &= tail_mask(num_variables_);
  if (num_variables_ >= 6) return out;
  out.words_[0] &= tail_mask(num_variables_);
  return out;
}

TruthTable TruthTable::constant(std::uint32_t num_variables, bool value) {
  TruthTable out(num_variables);
  if (value) {
    for (auto& w : out.words_) w = ~std::uint64_t(0);
    out.words_.back() &= tail_mask(num_variables);
  }
  return out;
}

TruthTable TruthTable::of_literal(std::uint32_t num_variables, Literal l) {
  TruthTable out(num_variables);
  const std::uint32_t bit = l.variable().index() - 1;
  if (bit >= num_variables) {
    throw UniverseMismatch("literal variable outside the table universe");
  }
  if (bit < 6) {
    // Periodic pattern within one word.
    std::uint64_t pattern = 0;
    for (std::uint32_t a = 0; a < 64; ++a) {
      if ((a >> bit) & 1) pattern |= std::uint64_t(1) << a;
    }
    if (!l.positive()) pattern = ~pattern;
    for (auto& w : out.words_) w = pattern;
    out.words_.back() &= tail_mask(num_variables);
    if (num_variables < 6) out.words_[0] &= tail_mask(num_variables);
  } else {
    const std::uint32_t period = bit - 6;  // in words
    for (std::size_t i = 0; i < out.words_.size(); ++i) {
      const bool high = (i >> period) & 1;
      out.words_[i] = (high == l.positive()) ? ~std::uint64_t(0) : 0;
    }
  }
  return out;
}

TruthTable TruthTable::exists(Variable v) const {
  TruthTable mask = of_literal(num_variables_, Literal(v, true));
  TruthTable lo(num_variables_), hi(num_variables_);
  const std::uint32_t bit = v.index() - 1;
  // Align the two cofactors onto the bit-clear positions, then spread.
  if (bit < 6) {
    const std::uint32_t shift = std::uint32_t(1) << bit;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      lo.words_[i] = words_[i] & ~mask.words_[i];
      hi.words_[i] = (words_[i] & mask.words_[i]) >> shift;
    }
  } else {
    const std::uint32_t word_shift = std::uint32_t(1) << (bit - 6);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      lo.words_[i] = words_[i] & ~mask.words_[i];
      hi.words_[i] =
          (i + word_shift < words_.size()) ? (words_[i + word_shift] & mask.words_[i + word_shift])
                                           : 0;
    }
  }
  TruthTable joined(num_variables_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    joined.words_[i] = lo.words_[i] | hi.words_[i];
  }
  // joined holds the union at bit-clear positions; mirror it to the rest.
  TruthTable out(num_variables_);
  if (bit < 6) {
    const std::uint32_t shift = std::uint32_t(1) << bit;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      const std::uint64_t cleared = joined.words_[i] & ~mask.words_[i];
      out.words_[i] = cleared | (cleared << shift);
    }
  } else {
    const std::uint32_t word_shift = std::uint32_t(1) << (bit - 6);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      const std::uint64_t cleared = joined.words_[i] & ~mask.words_[i];
      out.words_[i] |= cleared;
      if (i + word_shift < words_.size()) out.words_[i + word_shift] |= cleared;
    }
  }
  return out;
}

bool TruthTable::depends_on(Variable v) const { return exists(v) != *this; }

TruthTable table_of_cnf(const CnfFormula& cnf) {
  return table_of_cnf(cnf, cnf.num_variables());
}

TruthTable table_of_cnf(const CnfFormula& cnf, std::uint32_t num_variables) {
  TruthTable result = TruthTable::constant(num_variables, true);
  for (const Clause& c : cnf.clauses()) {
    if (c.satisfied()) continue;
    TruthTable clause_table = TruthTable::constant(num_variables, false);
    for (Literal l : c.literals()) {
      clause_table = clause_table | TruthTable::of_literal(num_variables, l);
    }
    result = result & clause_table;
  }
  return result;
}

TruthTable table_of_diagram(const DiagramStore& store, NodeRef root,
                            std::uint32_t num_variables) {
  std::unordered_map<NodeRef, TruthTable> memo;
  auto walk = [&](auto&& self, NodeRef ref) -> const TruthTable& {
    auto it = memo.find(ref);
    if (it != memo.end()) return it->second;
    const Node& n = store.node(ref);
    TruthTable result = TruthTable::constant(num_variables, n.kind != NodeKind::False);
    if (n.kind != NodeKind::False) {
      for (Literal l : store.literal_set(n.lits)) {
        result = result & TruthTable::of_literal(num_variables, l);
      }
      if (n.kind == NodeKind::Decision) {
        const TruthTable var = TruthTable::of_literal(num_variables, Literal(n.var, true));
        const TruthTable lo = self(self, n.lo);
        const TruthTable hi = self(self, n.hi);
        result = result & ((~var & lo) | (var & hi));
      }
    }
    return memo.emplace(ref, std::move(result)).first->second;
  };
  return walk(walk, root);
}

LiteralSet implied_literals_bf(const TruthTable& table) {
  if (table.none()) {
    throw UnsatInput("an empty model set implies every literal");
  }
  std::vector<Literal> implied;
  for (std::uint32_t v = 1; v <= table.num_variables(); ++v) {
    for (bool positive : {true, false}) {
      const Literal l(Variable(v), positive);
      const TruthTable lit = TruthTable::of_literal(table.num_variables(), l);
      if ((table & ~lit).none()) implied.push_back(l);
    }
  }
  return LiteralSet::from_sorted_unchecked(std::move(implied));
}

BigCount model_count_bf(const TruthTable& table) { return BigCount(table.popcount()); }

bool equivalent_bf(const TruthTable& a, const TruthTable& b) {
  if (a.num_variables() != b.num_variables()) {
    throw UniverseMismatch("truth tables over different universes");
  }
  return a == b;
}

CnfFormula chain_family(std::uint32_t n) {
  CnfFormula cnf(2 * n);
  for (std::uint32_t k = 1; k <= n; ++k) {
    const Literal x(Variable(k), true);
    const Literal y(Variable(n + k), true);
    cnf.add_clause({x.negated(), y});
    cnf.add_clause({x, y.negated()});
  }
  return cnf;
}

CnfFormula fan_family(std::uint32_t n, std::uint32_t i) {
  const std::uint32_t copies = i + 1;
  CnfFormula cnf(n + n * copies);
  for (std::uint32_t k = 1; k <= n; ++k) {
    for (std::uint32_t j = 1; j <= copies; ++j) {
      const Literal x(Variable(k), true);
      const Literal copy(Variable(n + (k - 1) * copies + j), true);
      cnf.add_clause({x.negated(), copy});
      cnf.add_clause({x, copy.negated()});
    }
  }
  return cnf;
}

CnfFormula disjunctive_chain_family(std::uint32_t n) {
  if (n > 8) {
    throw TooLarge("the distributed CNF encoding is capped at n = 8");
  }
  CnfFormula cnf(2 * n);
  // One clause per choice of (x_k <-> y_k)'s two clauses, distributed.
  for (std::uint32_t selection = 0; selection < (1u << n); ++selection) {
    std::vector<Literal> clause;
    clause.reserve(2 * n);
    for (std::uint32_t k = 1; k <= n; ++k) {
      const Literal x(Variable(k), true);
      const Literal y(Variable(n + k), true);
      if ((selection >> (k - 1)) & 1) {
        clause.push_back(x);
        clause.push_back(y.negated());
      } else {
        clause.push_back(x.negated());
        clause.push_back(y);
      }
    }
    cnf.add_clause(std::move(clause));
  }
  return cnf;
}

}  // namespace bddil::oracle
