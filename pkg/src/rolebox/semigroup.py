"""Closure of generator relations under composition.

The elements of the semigroup are the distinct matrices reachable as
products of the generators, discovered breadth-first so that every element
carries a deterministic representative word. The Cayley table records
right multiplication by each generator, and the inclusion order is the
cellwise containment among elements, which is a genuine partial order
because elements are pairwise distinct.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .rbox import Word
from .relations import BooleanRelation, compose, includes

__all__ = ["RelationSemigroup", "generate_semigroup", "element_equations"]


@dataclass(frozen=True, eq=False)
class RelationSemigroup:
    """Generated semigroup with Cayley table, word table and inclusion order.

    ``cayley[e][g]`` is the index of elements[e] composed with generator g;
    rows are None past the point where a size cap stopped the expansion,
    in which case ``complete`` is False. ``inclusion[e]`` packs the
    elements containing e as a bitmask.
    """

    generators: tuple[BooleanRelation, ...]
    labels: tuple[str, ...]
    elements: tuple[BooleanRelation, ...]
    words: tuple[Word, ...]
    generator_elements: tuple[int, ...]
    cayley: tuple[tuple[int, ...] | None, ...]
    inclusion: tuple[int, ...]
    complete: bool
    identity_adjoined: bool

    @property
    def order(self) -> int:
        return len(self.elements)

    def word_label(self, word: Word) -> str:
        return word.render(self.labels)

    def element_of(self, relation: BooleanRelation) -> int:
        for e, el in enumerate(self.elements):
            if el.rows == relation.rows:
                return e
        raise ValueError("relation is not an element of the semigroup")

    def element_of_word(self, word: Word) -> int:
        """Evaluate a word through the Cayley table."""
        if not word.letters:
            if not self.identity_adjoined:
                raise ValueError("the empty word needs an adjoined identity")
            return 0
        e = self.generator_elements[word.letters[0]]
        for g in word.letters[1:]:
            row = self.cayley[e]
            if row is None:
                raise ValueError("semigroup is incomplete; cannot evaluate the word")
            e = row[g]
        return e

    def included_in(self, e: int) -> tuple[int, ...]:
        return tuple(f for f in range(self.order) if (self.inclusion[e] >> f) & 1)


def generate_semigroup(generators: Sequence[BooleanRelation],
                       max_elements: int = 10000,
                       adjoin_identity: bool = False) -> RelationSemigroup:
    """Close the generators under composition, breadth-first.

    No identity is adjoined unless requested; one still appears as an
    element whenever some product equals it. When the closure would exceed
    `max_elements` the expansion stops and the partial result is flagged
    incomplete instead of raising.
    """
    if not generators:
        raise ValueError("at least one generator relation is required")
    actors = generators[0].actors
    for g in generators[1:]:
        if g.actors.labels != actors.labels:
            raise ValueError("generators are defined over different actor sets")
    if not isinstance(max_elements, int) or max_elements < 1:
        raise ValueError("max_elements must be a positive integer")

    labels = tuple(g.label if g.label else f"g{i}" for i, g in enumerate(generators))
    elements: list[BooleanRelation] = []
    words: list[Word] = []
    seen: dict[tuple[int, ...], int] = {}

    def add(rel: BooleanRelation, word: Word) -> int:
        idx = seen.get(rel.rows)
        if idx is None:
            idx = len(elements)
            seen[rel.rows] = idx
            elements.append(rel.with_label(word.render(labels)))
            words.append(word)
        return idx

    if adjoin_identity:
        add(BooleanRelation.identity(actors), Word(()))
    generator_elements = tuple(add(g, Word((gi,))) for gi, g in enumerate(generators))

    cayley: list[tuple[int, ...] | None] = []
    complete = True
    qi = 0
    while qi < len(elements):
        if len(elements) > max_elements:
            complete = False
            break
        e = elements[qi]
        row = []
        for gi, g in enumerate(generators):
            product = compose(e, g)
            row.append(add(product, words[qi].extend(gi)))
        cayley.append(tuple(row))
        qi += 1
    cayley.extend([None] * (len(elements) - len(cayley)))

    inclusion = tuple(
        sum(1 << f for f, other in enumerate(elements) if includes(el, other))
        for el in elements)
    return RelationSemigroup(tuple(generators), labels, tuple(elements),
                             tuple(words), generator_elements, tuple(cayley),
                             inclusion, complete, adjoin_identity)


def element_equations(s: RelationSemigroup, max_length: int | None = None) -> tuple[tuple[Word, ...], ...]:
    """Words up to a length cap grouped by the element they evaluate to.

    The default cap is one step past the longest representative word, so
    every element shows at least its representative plus the immediate
    identities among strings (e.g. a compound equalling a generator).
    """
    if not s.complete:
        raise ValueError("element equations need a complete semigroup")
    if max_length is None:
        max_length = max((len(w) for w in s.words), default=1) + 1
    if max_length < 1:
        raise ValueError("max_length must be at least 1")

    found: list[list[Word]] = [[] for _ in s.elements]
    if s.identity_adjoined:
        found[0].append(Word(()))
    frontier = []
    for gi in range(len(s.generators)):
        word = Word((gi,))
        e = s.generator_elements[gi]
        found[e].append(word)
        frontier.append((e, word))
    for _ in range(max_length - 1):
        nxt = []
        for e, word in frontier:
            for gi in range(len(s.generators)):
                e2 = s.cayley[e][gi]
                word2 = word.extend(gi)
                found[e2].append(word2)
                nxt.append((e2, word2))
        frontier = nxt
    return tuple(tuple(ws) for ws in found)
