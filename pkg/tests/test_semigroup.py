import random

import pytest

from rolebox import (ActorSet, BooleanRelation, Word, build_generators,
                     compose, element_equations, florentine,
                     generate_semigroup, includes)

import oracles
from tables import (ATTR_REDUCED, CLIQUE_REDUCED, HELPER_REDUCED,
                    MICRO_FULL_ORDER, MICRO_REDUCED_ORDER, MONOID_ORDER,
                    SEMIGROUP_ORDER, ATTR, CLIQUE, HELPER)

A2 = ActorSet(("p", "q"))
A3 = ActorSet(("a", "b", "c"))


def reduced_generators():
    return [BooleanRelation.from_rows(A2, CLIQUE_REDUCED, "C"),
            BooleanRelation.from_rows(A2, HELPER_REDUCED, "F"),
            BooleanRelation.from_rows(A2, ATTR_REDUCED, "A")]


@pytest.fixture(scope="module")
def social():
    return build_generators(florentine(), ["business", "marriage"])


def test_florentine_order_pins_the_plain_closure(social):
    plain = generate_semigroup(social)
    assert plain.complete
    assert plain.order == SEMIGROUP_ORDER
    monoid = generate_semigroup(social, adjoin_identity=True)
    assert monoid.order == MONOID_ORDER


def test_identity_generator_closes_to_itself():
    ident = BooleanRelation.identity(A3)
    s = generate_semigroup([ident])
    assert s.order == 1
    # adjoining an identity that already arises adds nothing
    assert generate_semigroup([ident], adjoin_identity=True).order == 1


def test_micro_example_orders_match_pairwise_oracle():
    reduced = reduced_generators()
    s = generate_semigroup(reduced)
    assert s.order == MICRO_REDUCED_ORDER
    assert {e.rows for e in s.elements} == {
        BooleanRelation.from_rows(A2, [list(r) for r in m]).rows
        for m in oracles.pairwise_closure([g.to_lists() for g in reduced])}
    full = [BooleanRelation.from_rows(A3, m, l)
            for m, l in ((CLIQUE, "C"), (HELPER, "F"), (ATTR, "A"))]
    assert generate_semigroup(full).order == MICRO_FULL_ORDER


def test_cayley_entries_recompute(social):
    s = generate_semigroup(social)
    for e, row in enumerate(s.cayley):
        assert row is not None
        for gi, target in enumerate(row):
            assert compose(s.elements[e], s.generators[gi]) == s.elements[target]


def test_closure_complete_under_random_products(social):
    s = generate_semigroup(social)
    members = {e.rows for e in s.elements}
    rng = random.Random(123)
    for _ in range(200):
        length = rng.randint(2, 6)
        acc = s.elements[rng.randrange(s.order)]
        for _ in range(length - 1):
            acc = compose(acc, s.elements[rng.randrange(s.order)])
        assert acc.rows in members


def test_order_invariant_under_reordering_and_duplicates(social):
    base = generate_semigroup(social).order
    assert generate_semigroup(list(reversed(social))).order == base
    assert generate_semigroup(social + [social[0].with_label("again")]).order == base


def test_inclusion_restricted_to_generators_agrees(social):
    s = generate_semigroup(social)
    for gi, g in enumerate(s.generators):
        for gj, h in enumerate(s.generators):
            ei = s.generator_elements[gi]
            ej = s.generator_elements[gj]
            assert bool((s.inclusion[ei] >> ej) & 1) == includes(g, h)


def test_inclusion_is_a_partial_order():
    s = generate_semigroup(reduced_generators())
    for e in range(s.order):
        assert (s.inclusion[e] >> e) & 1
        for f in range(s.order):
            if (s.inclusion[e] >> f) & 1:
                if e != f:  # antisymmetry on distinct elements
                    assert not (s.inclusion[f] >> e) & 1
                # transitivity: whatever contains f also contains e
                assert s.inclusion[f] & ~s.inclusion[e] == 0


def test_word_evaluation_and_equations():
    s = generate_semigroup(reduced_generators())
    # compound C*F equals the attribute diagonal, F*A equals F, A*A equals A
    assert s.element_of_word(Word((0, 1))) == s.element_of_word(Word((2,)))
    assert s.element_of_word(Word((1, 2))) == s.element_of_word(Word((1,)))
    assert s.element_of_word(Word((2, 2))) == s.element_of_word(Word((2,)))
    equations = element_equations(s)
    attr = s.element_of_word(Word((2,)))
    labels = {s.word_label(w) for w in equations[attr]}
    assert {"A", "CF", "AA"} <= labels


def test_equations_identity_and_annihilator():
    ident = BooleanRelation.identity(A3, "I")
    s = generate_semigroup([ident])
    words = element_equations(s, max_length=2)
    assert [s.word_label(w) for w in words[0]] == ["I", "II"]

    null = BooleanRelation.null(A3, "N")
    clique = BooleanRelation.from_rows(A3, CLIQUE, "C")
    s2 = generate_semigroup([clique, null])
    zero = s2.element_of(null)
    for w in element_equations(s2, max_length=3)[zero]:
        assert 1 in w.letters  # every word for the null element mentions it


def test_cap_flags_incomplete(social):
    s = generate_semigroup(social, max_elements=5)
    assert not s.complete
    assert s.order >= 5
    assert any(row is None for row in s.cayley)
    with pytest.raises(ValueError):
        element_equations(s)


def test_rejects_bad_input(social):
    with pytest.raises(ValueError):
        generate_semigroup([])
    with pytest.raises(ValueError):
        generate_semigroup(social, max_elements=0)
