#include <doctest.h>

#include "bddil/store.hpp"

using namespace bddil;

namespace {

Literal pos(std::uint32_t v) { return Literal(Variable(v), true); }
Literal neg(std::uint32_t v) { return Literal(Variable(v), false); }

}  // namespace

TEST_CASE("literal basics") {
  CHECK(pos(3).to_dimacs() == 3);
  CHECK(neg(3).to_dimacs() == -3);
  CHECK(Literal::from_dimacs(-7) == neg(7));
  CHECK(pos(3).negated() == neg(3));
  CHECK(pos(3).negated().negated() == pos(3));
  CHECK(pos(2) < neg(2));
  CHECK(neg(2) < pos(3));
}

TEST_CASE("literal set interning") {
  DiagramStore store;
  const LitSetRef empty = store.intern_literal_set(LiteralSet());
  CHECK(empty == store.empty_literal_set());
  CHECK(store.literal_set(empty).size() == 0);
  CHECK(store.literal_set(empty).negative_count() == 0);

  const LitSetRef a = store.intern_literal_set(LiteralSet::from({neg(5), neg(6)}));
  const LitSetRef b = store.intern_literal_set(LiteralSet::from({neg(6), neg(5)}));
  CHECK(a == b);
  CHECK(store.literal_set(a).size() == 2);
  CHECK(store.literal_set(a).negative_count() == 2);

  CHECK_THROWS_AS(store.intern_literal_set(LiteralSet::from({pos(3), neg(3)})),
                  InconsistentSet);
}

TEST_CASE("literal set algebra") {
  const LiteralSet s = LiteralSet::from({pos(1), neg(2), pos(4)});
  CHECK(s.contains(neg(2)));
  CHECK_FALSE(s.contains(pos(2)));
  CHECK(s.polarity_of(Variable(4)) == true);
  CHECK(s.minus(LiteralSet::from({neg(2)})).size() == 2);
  CHECK(s.minus_variables(LiteralSet::from({pos(2)})).size() == 2);
  CHECK(s.unioned(LiteralSet::from({pos(5)})).size() == 4);
  CHECK_THROWS_AS(s.unioned(LiteralSet::from({pos(2)})), InconsistentSet);
  CHECK(s.intersected(LiteralSet::from({pos(1), pos(2)})) == LiteralSet::from({pos(1)}));
  CHECK(s.negated().negative_count() == 2);
  CHECK(s.clashes_with(LiteralSet::from({pos(2)})));
  CHECK_FALSE(s.clashes_with(LiteralSet::from({neg(2), pos(7)})));
}

TEST_CASE("mk idempotence and hash consing") {
  DiagramStore store;
  CHECK(store.mk(Node::make_false()) == store.false_ref());
  CHECK(store.mk(Node::make_false()) == store.false_ref());
  CHECK(store.mk_true(store.empty_literal_set()) == store.true_ref());
  CHECK(store.mk_true(store.empty_literal_set()) == store.true_ref());

  const NodeRef a = store.mk_true(LiteralSet::from({pos(2)}));
  const NodeRef b = store.mk_true(LiteralSet::from({pos(2)}));
  CHECK(a == b);
  CHECK(a != store.true_ref());

  const NodeRef d1 = store.mk_decision(Variable(1), store.false_ref(), a,
                                       store.empty_literal_set());
  const NodeRef d2 = store.mk_decision(Variable(1), store.false_ref(), a,
                                       store.empty_literal_set());
  CHECK(d1 == d2);
}

TEST_CASE("mk rejects foreign refs and degenerate nodes") {
  DiagramStore big;
  NodeRef deep;
  for (std::uint32_t v = 1; v <= 6; ++v) {
    deep = big.mk_decision(Variable(7 - v), big.false_ref(),
                           v == 1 ? big.true_ref() : deep, big.empty_literal_set());
  }
  DiagramStore fresh;
  CHECK_THROWS_AS(fresh.mk_decision(Variable(1), deep, fresh.true_ref(),
                                    fresh.empty_literal_set()),
                  ForeignRef);
  CHECK_THROWS_AS(fresh.mk_decision(Variable(1), fresh.false_ref(), fresh.false_ref(),
                                    fresh.empty_literal_set()),
                  Error);
  const LitSetRef with_var = fresh.intern_literal_set(LiteralSet::from({pos(1)}));
  CHECK_THROWS_AS(fresh.mk_decision(Variable(1), fresh.false_ref(), fresh.true_ref(), with_var),
                  Error);
}
