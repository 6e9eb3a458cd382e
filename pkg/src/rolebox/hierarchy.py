"""Person hierarchies and their cumulation into a containment preorder.

From the standpoint of an actor l, target i is contained in target j when
every string relation that reaches i from l also reaches j, i.e. when i's
role relation is componentwise below j's. Cell (i, j) of the person
hierarchy of l records that containment; actors whose role relation in the
plane is empty get an all-zero row, the diagonal included.

The cumulated hierarchy is the cellwise union of all person hierarchies,
closed reflexively and then transitively. A union of transitive relations
need not be transitive, so the closure step is applied explicitly and the
result records whether it had to add any cell.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .rbox import RelationBox, relation_plane
from .relations import ActorSet, BooleanRelation

__all__ = [
    "PersonHierarchy",
    "CumulatedHierarchy",
    "QuotientOrder",
    "HierarchyLevels",
    "person_hierarchy",
    "mutual_containment",
    "cumulated_hierarchy",
    "quotient",
    "hierarchy_levels",
]


@dataclass(frozen=True)
class PersonHierarchy:
    """Containments among all actors as perceived by a single actor."""

    actors: ActorSet
    actor: int
    rows: tuple[int, ...]

    def cell(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def to_relation(self) -> BooleanRelation:
        return BooleanRelation(self.actors, self.rows,
                               f"H[{self.actors.labels[self.actor]}]")

    def support(self) -> tuple[int, ...]:
        """Actors involved in at least one containment, as row indices."""
        return tuple(i for i, r in enumerate(self.rows) if r)


@dataclass(frozen=True)
class CumulatedHierarchy:
    """Union of all person hierarchies, reflexively and transitively closed.

    ``union_rows`` keeps the raw union before either closure; ``repaired``
    is True when the transitive closure added at least one cell beyond the
    reflexively closed union, which is worth reporting as a data-quality
    note since the containment structure is only a preorder by virtue of
    the repair.
    """

    actors: ActorSet
    rows: tuple[int, ...]
    k: int
    generator_labels: tuple[str, ...]
    union_rows: tuple[int, ...]
    repaired: bool

    def cell(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def to_relation(self) -> BooleanRelation:
        return BooleanRelation(self.actors, self.rows, "cumulated-hierarchy")

    @property
    def repaired_cells(self) -> tuple[tuple[int, int], ...]:
        n = len(self.actors)
        reflexive = tuple(r | (1 << i) for i, r in enumerate(self.union_rows))
        return tuple((i, j) for i in range(n) for j in range(n)
                     if (self.rows[i] >> j) & 1 and not (reflexive[i] >> j) & 1)


def person_hierarchy(box: RelationBox, l: int) -> PersonHierarchy:
    """Perceived containments in actor l's relation plane.

    Cell (i, j) is 1 iff the role relation of i is componentwise below the
    role relation of j and i's role relation is not empty; rows of actors
    with empty role relations stay zero, so an isolate's hierarchy is the
    null matrix.
    """
    plane = relation_plane(box, l)
    cols = plane.columns()
    n = len(box.actors)
    rows = []
    for i in range(n):
        ci = cols[i]
        if ci == 0:
            rows.append(0)
            continue
        rows.append(sum(1 << j for j in range(n) if ci & cols[j] == ci))
    return PersonHierarchy(box.actors, l, tuple(rows))


def mutual_containment(box: RelationBox, l: int, i: int, j: int) -> bool:
    """True iff actors i and j contain each other in l's person hierarchy.

    This holds exactly when their role relations in the plane are equal and
    not empty, so it doubles as an equality check on role relations.
    """
    plane = relation_plane(box, l)
    ci, cj = plane.column(i), plane.column(j)
    return ci != 0 and ci == cj


def _transitive_closure(rows: Sequence[int]) -> tuple[tuple[int, ...], bool]:
    out = list(rows)
    n = len(out)
    changed = False
    again = True
    while again:
        again = False
        for m in range(n):
            rm = out[m]
            for i in range(n):
                if (out[i] >> m) & 1 and out[i] | rm != out[i]:
                    out[i] |= rm
                    again = True
                    changed = True
    return tuple(out), changed


def cumulated_hierarchy(box: RelationBox) -> CumulatedHierarchy:
    """Union of every actor's person hierarchy, closed into a preorder."""
    n = len(box.actors)
    union_rows = [0] * n
    for l in range(n):
        h = person_hierarchy(box, l)
        for i in range(n):
            union_rows[i] |= h.rows[i]
    reflexive = tuple(r | (1 << i) for i, r in enumerate(union_rows))
    closed, repaired = _transitive_closure(reflexive)
    return CumulatedHierarchy(box.actors, closed, box.k, box.labels,
                              tuple(union_rows), repaired)


# ----------------------------------------------------------------------
# quotient structure and levels


@dataclass(frozen=True)
class QuotientOrder:
    """Partial order on the mutual-containment classes of a preorder."""

    actors: ActorSet
    classes: tuple[tuple[int, ...], ...]
    leq: tuple[int, ...]

    @property
    def n_classes(self) -> int:
        return len(self.classes)

    def strict(self) -> tuple[int, ...]:
        return tuple(r & ~(1 << c) for c, r in enumerate(self.leq))

    def isolate_classes(self) -> tuple[int, ...]:
        """Classes of lone actors that neither contain nor are contained."""
        cols = [0] * self.n_classes
        for c, r in enumerate(self.leq):
            rest = r
            while rest:
                low = rest & -rest
                cols[low.bit_length() - 1] |= 1 << c
                rest ^= low
        return tuple(c for c in range(self.n_classes)
                     if len(self.classes[c]) == 1
                     and self.leq[c] == 1 << c and cols[c] == 1 << c)

    def ranks(self) -> tuple[int, ...]:
        """Length of the longest descending chain below each class."""
        strict = self.strict()
        below = [[d for d in range(self.n_classes) if (strict[d] >> c) & 1]
                 for c in range(self.n_classes)]

        @lru_cache(maxsize=None)
        def rank(c: int) -> int:
            return 1 + max((rank(d) for d in below[c]), default=-1)

        return tuple(rank(c) for c in range(self.n_classes))

    def covers(self) -> tuple[tuple[int, int], ...]:
        """Covering pairs (lower, upper): the transitive reduction."""
        strict = self.strict()
        out = []
        for c, r in enumerate(strict):
            through = 0
            rest = r
            while rest:
                low = rest & -rest
                through |= strict[low.bit_length() - 1]
                rest ^= low
            rest = r & ~through
            while rest:
                low = rest & -rest
                out.append((c, low.bit_length() - 1))
                rest ^= low
        return tuple(sorted(out))


@dataclass(frozen=True)
class HierarchyLevels:
    """Mutual-containment classes grouped by depth, containers first.

    ``levels[0]`` holds the classes that contain the deepest chains below
    them; each following entry is one step further down. Lone actors with
    no containments at all are reported apart in ``isolates``.
    """

    actors: ActorSet
    levels: tuple[tuple[tuple[int, ...], ...], ...]
    isolates: tuple[int, ...]

    @property
    def depth(self) -> int:
        return len(self.levels)

    def level_members(self, i: int) -> tuple[int, ...]:
        return tuple(sorted(a for cls in self.levels[i] for a in cls))

    def named(self) -> list[list[list[str]]]:
        lab = self.actors.labels
        return [[[lab[a] for a in cls] for cls in level] for level in self.levels]


def _validate_preorder(rows: Sequence[int], n: int) -> None:
    for i in range(n):
        if not (rows[i] >> i) & 1:
            raise ValueError("containment matrix is not reflexive")
    closed, changed = _transitive_closure(rows)
    if changed:
        raise ValueError(
            "containment matrix is not transitive; pass the output of cumulated_hierarchy")


def quotient(h: CumulatedHierarchy | BooleanRelation) -> QuotientOrder:
    """Collapse mutual containments into classes and order the classes."""
    actors = h.actors
    rows = h.rows
    n = len(actors)
    _validate_preorder(rows, n)

    class_of: dict[int, int] = {}
    classes: list[list[int]] = []
    for i in range(n):
        for c, members in enumerate(classes):
            r = members[0]
            if (rows[i] >> r) & 1 and (rows[r] >> i) & 1:
                members.append(i)
                class_of[i] = c
                break
        else:
            class_of[i] = len(classes)
            classes.append([i])

    leq = [0] * len(classes)
    for c, members in enumerate(classes):
        rep = members[0]
        for d, others in enumerate(classes):
            if (rows[rep] >> others[0]) & 1:
                leq[c] |= 1 << d

    # deterministic ordering: deepest containers first, then smallest member
    order = QuotientOrder(actors, tuple(tuple(m) for m in classes), tuple(leq))
    ranks = order.ranks()
    perm = sorted(range(len(classes)), key=lambda c: (-ranks[c], classes[c][0]))
    inv = {old: new for new, old in enumerate(perm)}
    new_classes = tuple(tuple(classes[old]) for old in perm)
    new_leq = []
    for old in perm:
        bits = 0
        rest = leq[old]
        while rest:
            low = rest & -rest
            bits |= 1 << inv[low.bit_length() - 1]
            rest ^= low
        new_leq.append(bits)
    return QuotientOrder(actors, new_classes, tuple(new_leq))


def hierarchy_levels(h: CumulatedHierarchy | BooleanRelation) -> HierarchyLevels:
    """Group the quotient classes of a containment preorder by depth.

    Classes are ranked by the longest descending chain below them and equal
    ranks share a level; the result lists levels from the top (largest
    rank) downwards. Isolates, actors whose row and column are reflexive
    only, are excluded from the levels and reported separately.
    """
    q = quotient(h)
    iso = set(q.isolate_classes())
    ranks = q.ranks()
    by_rank: dict[int, list[int]] = {}
    for c in range(q.n_classes):
        if c not in iso:
            by_rank.setdefault(ranks[c], []).append(c)
    levels = tuple(
        tuple(q.classes[c] for c in sorted(by_rank[r], key=lambda c: q.classes[c][0]))
        for r in sorted(by_rank, reverse=True))
    isolates = tuple(sorted(q.classes[c][0] for c in iso))
    return HierarchyLevels(h.actors, levels, isolates)
