#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "bddil/errors.hpp"

namespace bddil {

/// A propositional variable, identified by a positive index. The variable
/// order used everywhere is the numeric index order.
class Variable {
 public:
  constexpr Variable() = default;
  constexpr explicit Variable(std::uint32_t index) : index_(index) {}

  constexpr std::uint32_t index() const { return index_; }
  constexpr bool valid() const { return index_ != 0; }

  friend constexpr auto operator<=>(Variable, Variable) = default;

 private:
  std::uint32_t index_ = 0;
};

/// A variable or its negation. Ordering is by variable first, positive
/// polarity before negative, which makes sorted literal runs scan in
/// ascending variable order.
class Literal {
 public:
  constexpr Literal() = default;
  constexpr Literal(Variable var, bool positive)
      : code_((var.index() << 1) | (positive ? 0u : 1u)) {}

  static constexpr Literal from_dimacs(int value) {
    return Literal(Variable(static_cast<std::uint32_t>(value < 0 ? -value : value)), value > 0);
  }

  constexpr Variable variable() const { return Variable(code_ >> 1); }
  constexpr bool positive() const { return (code_ & 1u) == 0; }
  constexpr bool negative() const { return (code_ & 1u) != 0; }
  constexpr Literal negated() const { return Literal(code_ ^ 1u); }
  constexpr bool valid() const { return (code_ >> 1) != 0; }

  constexpr int to_dimacs() const {
    const int v = static_cast<int>(code_ >> 1);
    return negative() ? -v : v;
  }

  constexpr std::uint32_t code() const { return code_; }

  friend constexpr auto operator<=>(Literal, Literal) = default;

 private:
  constexpr explicit Literal(std::uint32_t code) : code_(code) {}
  std::uint32_t code_ = 0;
};

/// A consistent set of literals: sorted ascending by variable, at most one
/// polarity per variable. Value type; the store interns these for sharing.
class LiteralSet {
 public:
  LiteralSet() = default;

  /// Builds from an arbitrary sequence: sorts, drops exact duplicates and
  /// throws InconsistentSet on a complementary pair.
  static LiteralSet from(std::span<const Literal> literals);
  static LiteralSet from(std::initializer_list<Literal> literals) {
    return from(std::span<const Literal>(literals.begin(), literals.size()));
  }
  /// Adopts an already sorted, duplicate-free, consistent vector.
  static LiteralSet from_sorted_unchecked(std::vector<Literal> literals);

  std::size_t size() const { return literals_.size(); }
  bool empty() const { return literals_.empty(); }
  std::uint32_t negative_count() const { return negative_count_; }

  bool contains(Literal l) const;
  bool contains_variable(Variable v) const { return polarity_of(v).has_value(); }
  /// Polarity this set assigns to v, if any (true = positive).
  std::optional<bool> polarity_of(Variable v) const;

  auto begin() const { return literals_.begin(); }
  auto end() const { return literals_.end(); }
  const std::vector<Literal>& literals() const { return literals_; }

  /// Set union; throws InconsistentSet when the operands clash.
  LiteralSet unioned(const LiteralSet& other) const;
  /// This set minus the literals of `other` (exact literal matches).
  LiteralSet minus(const LiteralSet& other) const;
  /// This set minus every literal over a variable of `vars`.
  LiteralSet minus_variables(const LiteralSet& vars) const;
  LiteralSet intersected(const LiteralSet& other) const;
  LiteralSet inserted(Literal l) const;
  LiteralSet erased(Literal l) const;
  /// Negation of every member (always consistent again).
  LiteralSet negated() const;
  /// True when this set and `other` share no variable.
  bool variable_disjoint(const LiteralSet& other) const;
  /// True when some literal here appears negated in `other`.
  bool clashes_with(const LiteralSet& other) const;

  friend bool operator==(const LiteralSet&, const LiteralSet&) = default;

 private:
  std::vector<Literal> literals_;
  std::uint32_t negative_count_ = 0;
};

/// An assignment: a consistent literal set over a declared universe.
/// Complete when every universe variable is assigned.
struct Assignment {
  LiteralSet literals;
  std::vector<Variable> universe;  // sorted ascending

  static Assignment over(LiteralSet literals, std::vector<Variable> universe);
  bool complete() const { return literals.size() == universe.size(); }
};

}  // namespace bddil

template <>
struct std::hash<bddil::Variable> {
  std::size_t operator()(bddil::Variable v) const noexcept {
    return std::hash<std::uint32_t>()(v.index());
  }
};

template <>
struct std::hash<bddil::Literal> {
  std::size_t operator()(bddil::Literal l) const noexcept {
    return std::hash<std::uint32_t>()(l.code());
  }
};
