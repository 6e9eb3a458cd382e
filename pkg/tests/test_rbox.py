import random
from itertools import product

import pytest

from rolebox import (ActorSet, BooleanRelation, attribute_to_diagonal,
                     binarize, build_generators, build_relation_box, compose,
                     florentine, relation_plane, role_relation, role_set,
                     CutoffSpec)

import oracles
from tables import STRING_COUNTS


@pytest.fixture(scope="module")
def ds():
    return florentine()


@pytest.fixture(scope="module")
def social(ds):
    return build_generators(ds, ["business", "marriage"])


def test_rejects_bad_arguments(social):
    with pytest.raises(ValueError):
        build_relation_box(social, 0)
    with pytest.raises(ValueError):
        build_relation_box([], 2)


def test_identity_generator_collapses_to_one_string():
    actors = ActorSet(("a", "b", "c"))
    box = build_relation_box([BooleanRelation.identity(actors)], 4)
    assert box.w == 1
    assert box.strings[0].relation == BooleanRelation.identity(actors)


def test_florentine_string_counts(social):
    for k, w in STRING_COUNTS.items():
        assert build_relation_box(social, k).w == w


def test_w_non_decreasing_in_k(social):
    ws = [build_relation_box(social, k).w for k in range(1, 6)]
    assert ws == sorted(ws)


def test_strings_pairwise_distinct(social):
    box = build_relation_box(social, 4)
    seen = {s.relation.rows for s in box.strings}
    assert len(seen) == box.w


def test_representative_words_reproduce_relations(social):
    box = build_relation_box(social, 4)
    for s in box.strings:
        acc = box.generators[s.word.letters[0]]
        for g in s.word.letters[1:]:
            acc = compose(acc, box.generators[g])
        assert acc == s.relation
        for word in s.all_words:
            assert len(word) >= len(s.word)


def test_discovery_order_breadth_first(social):
    short = [g.with_label(lbl) for g, lbl in zip(social, "BM")]
    box = build_relation_box(short, 2)
    assert [box.word_label(s.word) for s in box.strings] == \
        ["B", "M", "BB", "BM", "MB", "MM"]


def test_dedup_sound_and_complete_exhaustive_k3(ds, social):
    gens = social + [attribute_to_diagonal(binarize(ds, CutoffSpec("wealth", 40)))]
    for alphabet in (social, gens):
        mats = [g.to_lists() for g in alphabet]
        for k in (1, 2, 3):
            box = build_relation_box(alphabet, k)
            expected = oracles.all_words_upto(mats, k)
            got = {oracles.freeze(s.relation.to_lists()) for s in box.strings}
            assert got == expected
            assert len(got) == box.w
            # every word of length <= k maps to some entry
            for length in range(1, k + 1):
                for word in product(range(len(alphabet)), repeat=length):
                    folded = oracles.fold_word([mats[g] for g in word])
                    assert oracles.freeze(folded) in got


def test_duplicate_generators_collapse(social):
    box = build_relation_box([social[0], social[0].with_label("B2")], 2)
    base = build_relation_box([social[0]], 2)
    assert box.w == base.w
    # both single-letter words land on the first entry
    first = box.strings[0]
    assert {w.letters for w in first.all_words} >= {(0,), (1,)}


def test_transpose_option_extends_alphabet():
    actors = ActorSet(("a", "b", "c"))
    directed = BooleanRelation.from_rows(
        actors, [[0, 1, 0], [0, 0, 1], [0, 0, 0]], "D")
    box = build_relation_box([directed], 2, include_transposes=True)
    assert box.labels == ("D", "D'")
    assert box.generators[1].to_lists() == [[0, 0, 0], [1, 0, 0], [0, 1, 0]]
    # a symmetric generator adds nothing
    sym = BooleanRelation.from_rows(actors, [[0, 1, 0], [1, 0, 0], [0, 0, 0]], "S")
    assert build_relation_box([sym], 2, include_transposes=True).labels == ("S",)


def test_weightless_letters_do_not_consume_length(ds, social):
    wealth = attribute_to_diagonal(binarize(ds, CutoffSpec("wealth", 40)))
    box = build_relation_box([social[0], wealth], 1, weightless=(1,))
    words = {box.word_label(s.word) for s in box.strings}
    assert {"business", "wealth", "business*wealth", "wealth*business"} <= words
    counted = build_relation_box([social[0], wealth], 1)
    assert {counted.word_label(s.word) for s in counted.strings} == \
        {"business", "wealth"}


def test_plane_of_isolate_is_blank(ds, social):
    box = build_relation_box(social, 3)
    plane = relation_plane(box, ds.actors.index("Pucci"))
    assert all(r == 0 for r in plane.rows)
    assert set(plane.columns()) == {0}


def test_plane_of_pendant_actor_k1(ds, social):
    box = build_relation_box(social, 1)
    assert [box.word_label(s.word) for s in box.strings] == ["business", "marriage"]
    plane = relation_plane(box, ds.actors.index("Acciaiuoli"))
    med = ds.actors.index("Medici")
    for j in range(len(ds.actors)):
        # the only tie is the marriage with the Medici, string index 1
        assert plane.column(j) == (0b10 if j == med else 0)


def test_identity_plane_is_indicator_row():
    actors = ActorSet(("a", "b", "c"))
    box = build_relation_box([BooleanRelation.identity(actors)], 3)
    for l in range(3):
        plane = relation_plane(box, l)
        assert plane.rows == (1 << l,)


def test_plane_rows_stitch_back_to_strings(ds, social):
    box = build_relation_box(social, 3)
    planes = [relation_plane(box, l) for l in range(len(ds.actors))]
    for x, s in enumerate(box.strings):
        assert tuple(p.rows[x] for p in planes) == s.relation.rows


def test_plane_index_out_of_range(social):
    box = build_relation_box(social, 1)
    with pytest.raises(ValueError):
        relation_plane(box, 16)
    with pytest.raises(ValueError):
        relation_plane(box, -1)


def test_role_sets(ds, social):
    box = build_relation_box(social, 1)
    isolate = role_set(box, ds.actors.index("Pucci"))
    assert len(isolate) == 1 and isolate[0].is_empty()
    pendant = role_set(box, ds.actors.index("Acciaiuoli"))
    assert len(pendant) == 2
    assert {r.bits for r in pendant} == \
        {0, relation_plane(box, ds.actors.index("Acciaiuoli")).column(
            ds.actors.index("Medici"))}
    for l in range(len(ds.actors)):
        assert len(role_set(box, l)) <= len(ds.actors)


def test_role_relation_accessor(ds, social):
    box = build_relation_box(social, 2)
    rng = random.Random(3)
    for _ in range(50):
        l = rng.randrange(16)
        j = rng.randrange(16)
        rr = role_relation(box, l, j)
        assert rr.vector == tuple(
            s.relation.cell(l, j) for s in box.strings)
