"""Actor partitions and blockmodel reduction to a positional system.

Partitions come from structural equivalence, from the containment classes
of a cumulated hierarchy (mutual classes or whole levels), or from a
manual assignment. The blockmodel reduces each generator with the
existential rule: a tie between two classes exists iff any member-to-member
tie does, so within-class ties become reflexive class ties.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .hierarchy import CumulatedHierarchy, hierarchy_levels, quotient
from .relations import ActorSet, AttributeVector, BooleanRelation

__all__ = [
    "Partition",
    "PositionalSystem",
    "structural_equivalence_partition",
    "containment_class_partition",
    "blockmodel",
    "attribute_split",
]


@dataclass(frozen=True, eq=False)
class Partition:
    """Assignment of every actor to exactly one class, ids contiguous from 0."""

    actors: ActorSet
    class_of: tuple[int, ...]
    labels: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "class_of", tuple(self.class_of))
        object.__setattr__(self, "labels", tuple(self.labels))
        n = len(self.actors)
        if len(self.class_of) != n:
            raise ValueError("partition does not cover the actor set")
        m = len(self.labels)
        used = set(self.class_of)
        if used != set(range(m)):
            raise ValueError("class ids must be contiguous from 0 and all non-empty")
        if len(set(self.labels)) != m:
            raise ValueError("class labels must be distinct")

    @classmethod
    def from_classes(cls, actors: ActorSet, groups: Sequence[Iterable],
                     labels: Sequence[str] | None = None) -> "Partition":
        """Build from explicit member groups; leftover actors become singletons."""
        class_of = [-1] * len(actors)
        for c, group in enumerate(groups):
            for a in group:
                i = a if isinstance(a, int) else actors.index(a)
                if class_of[i] != -1:
                    raise ValueError(f"actor {actors.labels[i]!r} assigned twice")
                class_of[i] = c
        out_labels = list(labels) if labels is not None else [
            f"P{c + 1}" for c in range(len(groups))]
        if len(out_labels) != len(groups):
            raise ValueError("one label per class is required")
        for i, c in enumerate(class_of):
            if c == -1:
                class_of[i] = len(out_labels)
                out_labels.append(actors.labels[i])
        return cls(actors, tuple(class_of), tuple(out_labels))

    @classmethod
    def singletons(cls, actors: ActorSet) -> "Partition":
        return cls(actors, tuple(range(len(actors))), tuple(actors.labels))

    @property
    def n_classes(self) -> int:
        return len(self.labels)

    def members(self, c: int) -> tuple[int, ...]:
        return tuple(i for i, ci in enumerate(self.class_of) if ci == c)

    def classes(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.members(c) for c in range(self.n_classes))

    def named_classes(self) -> list[list[str]]:
        return [[self.actors.labels[i] for i in cls] for cls in self.classes()]

    def class_actors(self, keep: Sequence[int] | None = None) -> ActorSet:
        ids = range(self.n_classes) if keep is None else keep
        return ActorSet(tuple(self.labels[c] for c in ids))


def _swap_bits(row: int, i: int, j: int) -> int:
    bi, bj = (row >> i) & 1, (row >> j) & 1
    if bi == bj:
        return row
    return row ^ ((1 << i) | (1 << j))


def _swap_equivalent(g: BooleanRelation, i: int, j: int) -> bool:
    # identical profiles up to exchanging the roles of i and j, i.e. the
    # transposition (i j) leaves the relation unchanged
    rows = list(g.rows)
    rows[i], rows[j] = rows[j], rows[i]
    return tuple(_swap_bits(r, i, j) for r in rows) == g.rows


def structural_equivalence_partition(generators: Sequence[BooleanRelation]) -> Partition:
    """Group actors whose tie profiles agree on every generator.

    Two actors are equivalent when swapping them is an automorphism of each
    generator, so members of a clique reduce onto a class with a reflexive
    tie even though the actor-level diagonal is empty.
    """
    if not generators:
        raise ValueError("at least one generator relation is required")
    actors = generators[0].actors
    for g in generators[1:]:
        if g.actors.labels != actors.labels:
            raise ValueError("generators are defined over different actor sets")
    n = len(actors)
    class_of = [-1] * n
    reps: list[int] = []
    for i in range(n):
        for c, r in enumerate(reps):
            if all(_swap_equivalent(g, i, r) for g in generators):
                class_of[i] = c
                break
        else:
            class_of[i] = len(reps)
            reps.append(i)
    labels = tuple(f"C{c + 1}" for c in range(len(reps)))
    return Partition(actors, tuple(class_of), labels)


def containment_class_partition(h: CumulatedHierarchy | BooleanRelation,
                                mode: str = "mutual") -> Partition:
    """Partition actors by their placement in the cumulated hierarchy.

    mode="mutual" keeps each maximal set of mutually containing actors as
    its own class; mode="level" merges the classes of every hierarchy level
    into one class per level, top level first. Isolates always form their
    own trailing classes, labelled by actor name.
    """
    if mode not in ("mutual", "level"):
        raise ValueError(f"unknown partition mode {mode!r}")
    actors = h.actors
    n = len(actors)
    class_of = [-1] * n
    labels: list[str] = []
    if mode == "mutual":
        q = quotient(h)
        iso = set(q.isolate_classes())
        nxt = 0
        for c, members in enumerate(q.classes):
            if c in iso:
                continue
            for i in members:
                class_of[i] = nxt
            labels.append(f"C{nxt + 1}")
            nxt += 1
        iso_members = sorted(q.classes[c][0] for c in iso)
    else:
        lv = hierarchy_levels(h)
        for level_idx in range(lv.depth):
            for i in lv.level_members(level_idx):
                class_of[i] = level_idx
            labels.append(f"L{level_idx + 1}")
        iso_members = list(lv.isolates)
    for i in iso_members:
        class_of[i] = len(labels)
        labels.append(actors.labels[i])
    return Partition(actors, tuple(class_of), tuple(labels))


@dataclass(frozen=True)
class PositionalSystem:
    """Partition plus the blockmodel-reduced relation per generator."""

    partition: Partition
    kept: tuple[int, ...]
    relations: tuple[BooleanRelation, ...]

    @property
    def class_labels(self) -> tuple[str, ...]:
        return tuple(self.partition.labels[c] for c in self.kept)

    def relation(self, label: str) -> BooleanRelation:
        for rel in self.relations:
            if rel.label == label:
                return rel
        raise ValueError(f"no reduced relation labelled {label!r}")


def blockmodel(generators: Sequence[BooleanRelation], partition: Partition,
               drop: Iterable[int] = ()) -> PositionalSystem:
    """Reduce each generator onto the partition's classes.

    A block is 1 iff it contains at least one tie; the same rule applies on
    the diagonal. Classes listed in `drop` are left out of the reduced
    matrices (used to disregard isolates in reports).
    """
    if not generators:
        raise ValueError("at least one generator relation is required")
    for g in generators:
        if g.actors.labels != partition.actors.labels:
            raise ValueError("generators and partition are over different actor sets")
    dropped = set(drop)
    for c in dropped:
        if not 0 <= c < partition.n_classes:
            raise ValueError(f"unknown class id {c}")
    kept = tuple(c for c in range(partition.n_classes) if c not in dropped)
    if not kept:
        raise ValueError("cannot drop every class")
    class_actors = partition.class_actors(kept)
    member_bits = []
    for c in kept:
        bits = 0
        for i in partition.members(c):
            bits |= 1 << i
        member_bits.append(bits)
    reduced = []
    for g in generators:
        rows = []
        for p, pbits in enumerate(member_bits):
            row = 0
            for q, qbits in enumerate(member_bits):
                rest = pbits
                hit = False
                while rest and not hit:
                    low = rest & -rest
                    hit = bool(g.rows[low.bit_length() - 1] & qbits)
                    rest ^= low
                if hit:
                    row |= 1 << q
            rows.append(row)
        reduced.append(BooleanRelation(class_actors, tuple(rows), g.label))
    return PositionalSystem(partition, kept, tuple(reduced))


def attribute_split(partition: Partition, v: AttributeVector, class_id: int) -> Partition:
    """Split one class by an attribute into its holders and non-holders.

    Holders keep the original class id, non-holders are inserted as a new
    class right after it; when the attribute is constant on the class the
    partition is returned unchanged.
    """
    if v.actors.labels != partition.actors.labels:
        raise ValueError("attribute and partition are over different actor sets")
    if not 0 <= class_id < partition.n_classes:
        raise ValueError(f"unknown class id {class_id}")
    members = partition.members(class_id)
    ones = [i for i in members if v.holds(i)]
    zeros = [i for i in members if not v.holds(i)]
    if not ones or not zeros:
        return partition
    name = v.label or "attr"
    base = partition.labels[class_id]
    class_of = list(partition.class_of)
    labels = list(partition.labels)
    labels[class_id] = f"{base}+{name}"
    labels.insert(class_id + 1, f"{base}-{name}")
    for i, c in enumerate(class_of):
        if c > class_id:
            class_of[i] = c + 1
    for i in zeros:
        class_of[i] = class_id + 1
    return Partition(partition.actors, tuple(class_of), tuple(labels))
