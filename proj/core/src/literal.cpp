#include "bddil/literal.hpp"

#include <algorithm>

namespace bddil {

LiteralSet LiteralSet::from(std::span<const Literal> literals) {
  std::vector<Literal> sorted(literals.begin(), literals.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i - 1].variable() == sorted[i].variable()) {
      throw InconsistentSet("literal set contains a complementary pair for variable " +
                            std::to_string(sorted[i].variable().index()));
    }
  }
  return from_sorted_unchecked(std::move(sorted));
}

LiteralSet LiteralSet::from_sorted_unchecked(std::vector<Literal> literals) {
  LiteralSet set;
  set.literals_ = std::move(literals);
  for (Literal l : set.literals_) {
    if (l.negative()) ++set.negative_count_;
  }
  return set;
}

bool LiteralSet::contains(Literal l) const {
  return std::binary_search(literals_.begin(), literals_.end(), l);
}

std::optional<bool> LiteralSet::polarity_of(Variable v) const {
  auto it = std::lower_bound(literals_.begin(), literals_.end(), Literal(v, true));
  if (it != literals_.end() && it->variable() == v) return it->positive();
  return std::nullopt;
}

LiteralSet LiteralSet::unioned(const LiteralSet& other) const {
  std::vector<Literal> merged;
  merged.reserve(size() + other.size());
  std::merge(begin(), end(), other.begin(), other.end(), std::back_inserter(merged));
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  for (std::size_t i = 1; i < merged.size(); ++i) {
    if (merged[i - 1].variable() == merged[i].variable()) {
      throw InconsistentSet("union of literal sets is inconsistent on variable " +
                            std::to_string(merged[i].variable().index()));
    }
  }
  return from_sorted_unchecked(std::move(merged));
}

LiteralSet LiteralSet::minus(const LiteralSet& other) const {
  std::vector<Literal> rest;
  std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(rest));
  return from_sorted_unchecked(std::move(rest));
}

LiteralSet LiteralSet::minus_variables(const LiteralSet& vars) const {
  std::vector<Literal> rest;
  for (Literal l : literals_) {
    if (!vars.contains_variable(l.variable())) rest.push_back(l);
  }
  return from_sorted_unchecked(std::move(rest));
}

LiteralSet LiteralSet::intersected(const LiteralSet& other) const {
  std::vector<Literal> common;
  std::set_intersection(begin(), end(), other.begin(), other.end(), std::back_inserter(common));
  return from_sorted_unchecked(std::move(common));
}

LiteralSet LiteralSet::inserted(Literal l) const {
  if (contains(l)) return *this;
  if (contains(l.negated())) {
    throw InconsistentSet("inserting literal clashes on variable " +
                          std::to_string(l.variable().index()));
  }
  std::vector<Literal> out = literals_;
  out.insert(std::upper_bound(out.begin(), out.end(), l), l);
  return from_sorted_unchecked(std::move(out));
}

LiteralSet LiteralSet::erased(Literal l) const {
  std::vector<Literal> out;
  out.reserve(literals_.size());
  for (Literal x : literals_) {
    if (x != l) out.push_back(x);
  }
  return from_sorted_unchecked(std::move(out));
}

LiteralSet LiteralSet::negated() const {
  std::vector<Literal> out;
  out.reserve(literals_.size());
  for (Literal l : literals_) out.push_back(l.negated());
  return from_sorted_unchecked(std::move(out));
}

bool LiteralSet::variable_disjoint(const LiteralSet& other) const {
  for (Literal l : literals_) {
    if (other.contains_variable(l.variable())) return false;
  }
  return true;
}

bool LiteralSet::clashes_with(const LiteralSet& other) const {
  for (Literal l : literals_) {
    if (other.contains(l.negated())) return true;
  }
  return false;
}

Assignment Assignment::over(LiteralSet literals, std::vector<Variable> universe) {
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  for (Literal l : literals) {
    if (!std::binary_search(universe.begin(), universe.end(), l.variable())) {
      throw UniverseMismatch("assignment literal over variable " +
                             std::to_string(l.variable().index()) + " outside the universe");
    }
  }
  return Assignment{std::move(literals), std::move(universe)};
}

}  // namespace bddil
