import random

import pytest

from rolebox import (ActorSet, BooleanRelation, build_generators,
                     build_relation_box, cumulated_hierarchy, export_hasse,
                     florentine, hasse_json, matrix_csv, parse_matrix_csv,
                     quotient)

import oracles


@pytest.fixture(scope="module")
def ds():
    return florentine()


def test_matrix_csv_round_trip(ds):
    rng = random.Random(2)
    cases = [ds.tie("business"), ds.tie("marriage")]
    for _ in range(25):
        n = rng.randint(1, 9)
        actors = ActorSet(tuple(f"x{i}" for i in range(n)))
        cases.append(BooleanRelation.from_rows(
            actors, oracles.random_matrix(rng, n)))
    for rel in cases:
        again = parse_matrix_csv(matrix_csv(rel))
        assert again == rel
        assert again.actors.labels == rel.actors.labels


def test_parse_matrix_rejects_garbage():
    with pytest.raises(ValueError):
        parse_matrix_csv("")
    with pytest.raises(ValueError):
        parse_matrix_csv("x,a\na,0\n")
    with pytest.raises(ValueError):
        parse_matrix_csv(",a,b\nb,0,0\na,0,0\n")


def chain_order(length):
    actors = ActorSet(tuple(f"c{i}" for i in range(length)))
    cells = [[1 if i <= j else 0 for j in range(length)] for i in range(length)]
    return BooleanRelation.from_rows(actors, cells)


def test_hasse_of_chain_has_covering_edges_only():
    text = export_hasse(chain_order(3))
    assert text.count("->") == 2
    assert "c0 -> c1;" not in text  # classes are ordered top-down
    assert "digraph hasse" in text and "rankdir=BT" in text


def test_hasse_of_antichain_has_no_edges():
    actors = ActorSet(("a", "b", "c"))
    anti = BooleanRelation.identity(actors)
    assert "->" not in export_hasse(anti)


def test_hasse_of_reference_hierarchy(ds):
    h = cumulated_hierarchy(
        build_relation_box(build_generators(ds, ["business", "marriage"]), 5))
    doc = hasse_json(h)
    members = {tuple(sorted(node["members"])): node["id"]
               for node in doc["nodes"]}
    top = members[tuple(sorted(
        ["Barbadori", "Bischeri", "Castellani", "Guadagni", "Lamberteschi",
         "Medici", "Pazzi", "Peruzzi", "Salviati", "Tornabuoni"]))]
    mutual = members[tuple(sorted(["Acciaiuoli", "Albizzi", "Ridolfi",
                                   "Strozzi"]))]
    ginori = members[("Ginori",)]
    pucci = members[("Pucci",)]
    assert sorted(doc["edges"]) == sorted([[mutual, top], [ginori, top]])
    assert all(pucci not in edge for edge in doc["edges"])


def test_hasse_covers_match_brute_force(ds):
    rng = random.Random(8)
    for _ in range(40):
        n = rng.randint(2, 8)
        rows = [[1 if i == j or rng.random() < 0.35 else 0 for j in range(n)]
                for i in range(n)]
        changed = True
        while changed:
            changed = False
            for i in range(n):
                for m in range(n):
                    if rows[i][m]:
                        for j in range(n):
                            if rows[m][j] and not rows[i][j]:
                                rows[i][j] = 1
                                changed = True
        actors = ActorSet(tuple(f"x{i}" for i in range(n)))
        q = quotient(BooleanRelation.from_rows(actors, rows))
        strict = [[1 if (q.leq[a] >> b) & 1 and a != b else 0
                   for b in range(q.n_classes)] for a in range(q.n_classes)]
        doc = hasse_json(q)
        assert {tuple(e) for e in doc["edges"]} == oracles.covering_pairs(strict)


def test_hasse_rejects_non_orders():
    actors = ActorSet(("a", "b", "c"))
    broken = BooleanRelation.from_rows(actors, [[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    with pytest.raises(ValueError):
        export_hasse(broken)


def test_hasse_is_deterministic_and_writable(ds, tmp_path):
    h = cumulated_hierarchy(
        build_relation_box(build_generators(ds, ["business", "marriage"]), 5))
    text1 = export_hasse(h)
    out = tmp_path / "diagram.gv"
    text2 = export_hasse(h, out)
    assert text1 == text2 == out.read_text(encoding="utf-8")
