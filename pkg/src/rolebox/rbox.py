"""Relation box: the distinct string relations of a multiplex network.

Generator ties (and attribute diagonals) form an alphabet. A word over the
alphabet denotes the composition of its letters read left to right, and
every word up to a length bound k yields a string relation. The box keeps
one entry per distinct matrix, tagged with the first word that produced
it, and exposes the per-actor slices used by the hierarchy computations:

* relation plane: the w x n slice of one actor's outgoing string ties,
* role relation: one column of a plane, an actor's profile across strings,
* role set: the distinct role relations within one plane.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .relations import ActorSet, BooleanRelation, compose, transpose

__all__ = [
    "Word",
    "StringRelation",
    "RelationBox",
    "RolePlane",
    "RoleRelation",
    "build_relation_box",
    "relation_plane",
    "role_relation",
    "role_set",
]


@dataclass(frozen=True)
class Word:
    """Sequence of alphabet indices; empty only for an adjoined identity."""

    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def extend(self, letter: int) -> "Word":
        return Word(self.letters + (letter,))

    def render(self, labels: Sequence[str]) -> str:
        if not self.letters:
            return "1"
        parts = [labels[i] for i in self.letters]
        if all(len(p) == 1 for p in parts):
            return "".join(parts)
        return "*".join(parts)


@dataclass(frozen=True)
class StringRelation:
    """A distinct relation together with the words known to produce it."""

    word: Word
    relation: BooleanRelation
    all_words: tuple[Word, ...]


@dataclass(frozen=True, eq=False)
class RelationBox:
    """Stack of the w distinct string relations up to word length k."""

    actors: ActorSet
    generators: tuple[BooleanRelation, ...]
    labels: tuple[str, ...]
    k: int
    strings: tuple[StringRelation, ...]
    weightless: tuple[int, ...] = ()
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "_index",
            {s.relation.rows: x for x, s in enumerate(self.strings)})

    @property
    def w(self) -> int:
        return len(self.strings)

    def find(self, relation: BooleanRelation) -> int | None:
        """Index of the string relation with the same cells, if present."""
        return self._index.get(relation.rows)

    def word_label(self, word: Word) -> str:
        return word.render(self.labels)


@dataclass(frozen=True)
class RolePlane:
    """Horizontal slice of the box: actor l's row in every string relation.

    ``rows[x]`` holds the n-bit outgoing profile of the plane's actor in
    string x; ``column(j)`` packs string membership of target j into a
    w-bit mask, which is exactly the role relation of j seen from l.
    """

    actors: ActorSet
    actor: int
    rows: tuple[int, ...]

    @property
    def w(self) -> int:
        return len(self.rows)

    def column(self, j: int) -> int:
        if not 0 <= j < len(self.actors):
            raise ValueError(f"actor index {j} out of range")
        return sum(((r >> j) & 1) << x for x, r in enumerate(self.rows))

    def columns(self) -> tuple[int, ...]:
        cols = [0] * len(self.actors)
        for x, r in enumerate(self.rows):
            rest = r
            while rest:
                low = rest & -rest
                cols[low.bit_length() - 1] |= 1 << x
                rest ^= low
        return tuple(cols)

    def to_lists(self) -> list[list[int]]:
        n = len(self.actors)
        return [[(r >> j) & 1 for j in range(n)] for r in self.rows]


@dataclass(frozen=True)
class RoleRelation:
    """One target's profile across all string relations, seen from one actor."""

    actor: int
    target: int
    bits: int
    width: int

    @property
    def vector(self) -> tuple[int, ...]:
        return tuple((self.bits >> x) & 1 for x in range(self.width))

    def is_empty(self) -> bool:
        return self.bits == 0


def _check_generators(generators: Sequence[BooleanRelation]) -> ActorSet:
    if not generators:
        raise ValueError("at least one generator relation is required")
    actors = generators[0].actors
    for g in generators[1:]:
        if g.actors.labels != actors.labels:
            raise ValueError("generators are defined over different actor sets")
    return actors


def build_relation_box(generators: Sequence[BooleanRelation], k: int,
                       include_transposes: bool = False,
                       weightless: Iterable[int] = ()) -> RelationBox:
    """Enumerate all distinct string relations for words up to length k.

    Discovery is breadth-first by word length, generators in the given
    order, each new length extending the known distinct relations on the
    right. The first word reaching a matrix becomes its representative;
    later words with the same cells are recorded on the entry.

    Parameters
    ----------
    generators : ordered generator relations; duplicates are kept in the
        alphabet for labelling but collapse to a single string relation.
    k : maximum word length, at least 1.
    include_transposes : add the transpose of every non-symmetric
        generator to the alphabet before generation.
    weightless : indices (into `generators`) of letters that do not
        consume word length, so compounds mixing them with ordinary
        letters still count only the ordinary ones toward k. Meant for
        attribute diagonals; by default every letter counts.
    """
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"word length bound k must be an integer >= 1, got {k!r}")
    actors = _check_generators(generators)

    alphabet = list(generators)
    labels = [g.label if g.label else f"g{i}" for i, g in enumerate(generators)]
    free = set()
    for i in weightless:
        if not 0 <= i < len(generators):
            raise ValueError(f"weightless index {i} out of range")
        free.add(i)
    if include_transposes:
        for i, g in enumerate(list(alphabet)):
            if not g.is_symmetric():
                alphabet.append(transpose(g, labels[i] + "'"))
                labels.append(labels[i] + "'")
                if i in free:
                    free.add(len(alphabet) - 1)

    entries: list[tuple[Word, BooleanRelation, list[Word]]] = []
    seen: dict[tuple[int, ...], int] = {}

    def record(word: Word, rel: BooleanRelation) -> int | None:
        """Return the new entry index, or None when the matrix is known."""
        idx = seen.get(rel.rows)
        if idx is None:
            seen[rel.rows] = len(entries)
            entries.append((word, rel.with_label(word.render(labels)), [word]))
            return len(entries) - 1
        entries[idx][2].append(word)
        return None

    def saturate(level: list[int]) -> list[int]:
        queue = list(level)
        qi = 0
        while qi < len(queue):
            word, rel, _ = entries[queue[qi]]
            qi += 1
            for gi in sorted(free):
                idx = record(word.extend(gi), compose(rel, alphabet[gi]))
                if idx is not None:
                    queue.append(idx)
        return queue

    costed = [gi for gi in range(len(alphabet)) if gi not in free]
    # weightless letters and their products live at level 0, so compounds on
    # either side of a costed letter count only the costed ones toward k
    level = saturate([i for i in (record(Word((gi,)), alphabet[gi])
                                  for gi in sorted(free)) if i is not None])
    for step in range(1, k + 1):
        nxt = []
        if step == 1:
            nxt += [i for i in (record(Word((gi,)), alphabet[gi]) for gi in costed)
                    if i is not None]
        for ei in level:
            word, rel, _ = entries[ei]
            for gi in costed:
                idx = record(word.extend(gi), compose(rel, alphabet[gi]))
                if idx is not None:
                    nxt.append(idx)
        level = saturate(nxt)

    strings = tuple(StringRelation(word, rel, tuple(words))
                    for word, rel, words in entries)
    return RelationBox(actors, tuple(alphabet), tuple(labels), k, strings,
                       tuple(sorted(free)))


def relation_plane(box: RelationBox, l: int) -> RolePlane:
    """The w x n slice of the box for actor l's outgoing string ties."""
    if not 0 <= l < len(box.actors):
        raise ValueError(f"actor index {l} out of range")
    return RolePlane(box.actors, l, tuple(s.relation.rows[l] for s in box.strings))


def role_relation(box: RelationBox, l: int, j: int) -> RoleRelation:
    """Actor j's profile across all strings, from the standpoint of actor l."""
    plane = relation_plane(box, l)
    return RoleRelation(l, j, plane.column(j), plane.w)


def role_set(box: RelationBox, l: int) -> tuple[RoleRelation, ...]:
    """Distinct role relations in actor l's plane, first occurrence first."""
    plane = relation_plane(box, l)
    out: list[RoleRelation] = []
    seen: set[int] = set()
    for j, bits in enumerate(plane.columns()):
        if bits not in seen:
            seen.add(bits)
            out.append(RoleRelation(l, j, bits, plane.w))
    return tuple(out)
