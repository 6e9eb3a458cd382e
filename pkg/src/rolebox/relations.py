"""Boolean relation algebra over a fixed actor set.

A relation is stored as one integer bitmask per row, so composition, the
lattice operations and containment tests reduce to word-wide AND/OR
arithmetic. All values are immutable after construction and every
operation is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

__all__ = [
    "ActorSet",
    "BooleanRelation",
    "AttributeVector",
    "compose",
    "union",
    "intersect",
    "transpose",
    "includes",
    "attribute_to_diagonal",
    "classify_diagonal",
]


@dataclass(frozen=True)
class ActorSet:
    """Ordered collection of distinct actor names with stable indices."""

    labels: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if not self.labels:
            raise ValueError("actor set must contain at least one actor")
        if len(set(self.labels)) != len(self.labels):
            dupes = sorted({a for a in self.labels if self.labels.count(a) > 1})
            raise ValueError("duplicate actor labels: " + ", ".join(dupes))

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"unknown actor {label!r}") from None


def _as_bit(cell) -> int:
    if cell is True or cell is False:
        return int(cell)
    try:
        value = int(cell)
    except (TypeError, ValueError):
        raise ValueError(f"matrix cells must be 0 or 1, got {cell!r}") from None
    if value not in (0, 1) or value != cell:
        raise ValueError(f"matrix cells must be 0 or 1, got {cell!r}")
    return value


@dataclass(frozen=True, eq=False)
class BooleanRelation:
    """Square 0/1 relation over an actor set.

    Bit j of ``rows[i]`` holds cell (i, j). The label is carried for
    reporting only and never takes part in equality, which is cellwise.
    """

    actors: ActorSet
    rows: tuple[int, ...]
    label: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        n = len(self.actors)
        if len(self.rows) != n:
            raise ValueError(f"expected {n} rows, got {len(self.rows)}")
        mask = (1 << n) - 1
        for i, row in enumerate(self.rows):
            if not isinstance(row, int) or row < 0 or row > mask:
                raise ValueError(f"row {i} has bits outside the actor set")

    # ------------------------------------------------------------------
    # construction

    @classmethod
    def from_rows(cls, actors: ActorSet, rows: Iterable[Iterable], label: str | None = None) -> "BooleanRelation":
        """Build from a nested iterable of 0/1 cells (lists, arrays, ...)."""
        packed = []
        for r in rows:
            cells = list(r)
            if len(cells) != len(actors):
                raise ValueError("matrix is not square over the actor set")
            packed.append(sum(1 << j for j, c in enumerate(cells) if _as_bit(c)))
        return cls(actors, tuple(packed), label)

    @classmethod
    def from_pairs(cls, actors: ActorSet, pairs: Iterable[tuple], symmetric: bool = False,
                   label: str | None = None) -> "BooleanRelation":
        """Build from (source, target) pairs given as labels or indices."""
        rows = [0] * len(actors)
        for u, v in pairs:
            i = u if isinstance(u, int) else actors.index(u)
            j = v if isinstance(v, int) else actors.index(v)
            rows[i] |= 1 << j
            if symmetric:
                rows[j] |= 1 << i
        return cls(actors, tuple(rows), label)

    @classmethod
    def identity(cls, actors: ActorSet, label: str | None = "I") -> "BooleanRelation":
        return cls(actors, tuple(1 << i for i in range(len(actors))), label)

    @classmethod
    def null(cls, actors: ActorSet, label: str | None = None) -> "BooleanRelation":
        return cls(actors, (0,) * len(actors), label)

    @classmethod
    def diagonal(cls, actors: ActorSet, flags: Iterable, label: str | None = None) -> "BooleanRelation":
        cells = [bool(f) for f in flags]
        if len(cells) != len(actors):
            raise ValueError("diagonal flags do not match the actor set size")
        return cls(actors, tuple((1 << i) if f else 0 for i, f in enumerate(cells)), label)

    # ------------------------------------------------------------------
    # access

    @property
    def n(self) -> int:
        return len(self.actors)

    def cell(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def row(self, i: int) -> int:
        return self.rows[i]

    def to_lists(self) -> list[list[int]]:
        n = self.n
        return [[(r >> j) & 1 for j in range(n)] for r in self.rows]

    def to_array(self) -> np.ndarray:
        return np.array(self.to_lists(), dtype=np.int8)

    def grid(self) -> str:
        n = self.n
        return "\n".join("".join(str((r >> j) & 1) for j in range(n)) for r in self.rows)

    def is_symmetric(self) -> bool:
        return all(self.cell(i, j) == self.cell(j, i) for i in range(self.n) for j in range(i))

    def with_label(self, label: str | None) -> "BooleanRelation":
        return BooleanRelation(self.actors, self.rows, label)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BooleanRelation):
            return NotImplemented
        return self.actors.labels == other.actors.labels and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.actors.labels, self.rows))

    def __repr__(self) -> str:
        name = f" {self.label!r}" if self.label else ""
        return f"<BooleanRelation{name} {self.n}x{self.n}>"


@dataclass(frozen=True, eq=False)
class AttributeVector:
    """Length-n boolean vector marking which actors hold an attribute."""

    actors: ActorSet
    bits: int
    label: str = ""

    def __post_init__(self):
        mask = (1 << len(self.actors)) - 1
        if not isinstance(self.bits, int) or self.bits < 0 or self.bits > mask:
            raise ValueError("attribute bits outside the actor set")

    @classmethod
    def from_values(cls, actors: ActorSet, values: Iterable, label: str = "") -> "AttributeVector":
        cells = [bool(v) for v in values]
        if len(cells) != len(actors):
            raise ValueError(
                f"attribute {label!r}: expected {len(actors)} values, got {len(cells)}")
        return cls(actors, sum(1 << i for i, f in enumerate(cells) if f), label)

    @property
    def values(self) -> tuple[int, ...]:
        return tuple((self.bits >> i) & 1 for i in range(len(self.actors)))

    def holds(self, i: int) -> bool:
        return bool((self.bits >> i) & 1)

    def count(self) -> int:
        return bin(self.bits).count("1")

    def __len__(self) -> int:
        return len(self.actors)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AttributeVector):
            return NotImplemented
        return self.actors.labels == other.actors.labels and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((self.actors.labels, self.bits))


# ----------------------------------------------------------------------
# operations

def _same_actors(a: BooleanRelation, b: BooleanRelation, op: str) -> None:
    if a.actors.labels != b.actors.labels:
        raise ValueError(f"{op}: relations are defined over different actor sets")


def compose(a: BooleanRelation, b: BooleanRelation, label: str | None = None) -> BooleanRelation:
    """Boolean matrix product: cell (i, j) is 1 iff a(i, m) and b(m, j) for some m."""
    _same_actors(a, b, "compose")
    rows = []
    for ra in a.rows:
        acc = 0
        rest = ra
        while rest:
            low = rest & -rest
            acc |= b.rows[low.bit_length() - 1]
            rest ^= low
        rows.append(acc)
    return BooleanRelation(a.actors, tuple(rows), label)


def union(a: BooleanRelation, b: BooleanRelation, label: str | None = None) -> BooleanRelation:
    """Cellwise OR."""
    _same_actors(a, b, "union")
    return BooleanRelation(a.actors, tuple(x | y for x, y in zip(a.rows, b.rows)), label)


def intersect(a: BooleanRelation, b: BooleanRelation, label: str | None = None) -> BooleanRelation:
    """Cellwise AND."""
    _same_actors(a, b, "intersect")
    return BooleanRelation(a.actors, tuple(x & y for x, y in zip(a.rows, b.rows)), label)


def transpose(a: BooleanRelation, label: str | None = None) -> BooleanRelation:
    """Swap cells (i, j) and (j, i)."""
    n = a.n
    rows = [0] * n
    for i, r in enumerate(a.rows):
        rest = r
        while rest:
            low = rest & -rest
            rows[low.bit_length() - 1] |= 1 << i
            rest ^= low
    return BooleanRelation(a.actors, tuple(rows), label)


def includes(a: BooleanRelation, b: BooleanRelation) -> bool:
    """True iff a(i, j) <= b(i, j) for every cell, i.e. a is contained in b."""
    _same_actors(a, b, "includes")
    return all((x | y) == y for x, y in zip(a.rows, b.rows))


def attribute_to_diagonal(v: AttributeVector) -> BooleanRelation:
    """Encode an attribute as self-ties: cell (i, i) is 1 iff actor i holds it."""
    rows = tuple((1 << i) if (v.bits >> i) & 1 else 0 for i in range(len(v.actors)))
    return BooleanRelation(v.actors, rows, v.label or None)


def classify_diagonal(a: BooleanRelation) -> str:
    """Classify a generator as identity, null, mixed diagonal or non-diagonal.

    Identity and null diagonals are structurally inert (neutral respectively
    absorbing under composition); only a mixed diagonal can reshape the
    relational structure it joins.
    """
    n = a.n
    diag = 0
    for i, r in enumerate(a.rows):
        if r & ~(1 << i):
            return "non-diagonal"
        diag |= r
    if diag == (1 << n) - 1:
        return "identity"
    if diag == 0:
        return "null"
    return "mixed"
