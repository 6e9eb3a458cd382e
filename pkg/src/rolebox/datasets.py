"""Dataset ingestion and attribute binarization.

Datasets are plain text with three kinds of sections::

    [actors]            one actor name per line
    [ties NAME]         edge list "U V", or an explicit matrix; an optional
                        "directed: true|false" line (default false) comes
                        first, and "matrix:" switches to matrix rows
    [attributes]        "name: v1 v2 ... vn" aligned with the actor order,
                        NA for missing values

Undirected tie sections store both directions of every edge; an explicit
matrix declared undirected must already be symmetric. The bundled
Florentine families network ships in this format.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .relations import ActorSet, AttributeVector, BooleanRelation

__all__ = [
    "Dataset",
    "CutoffSpec",
    "load_dataset",
    "loads_dataset",
    "florentine",
    "binarize",
    "parse_cutoff",
    "build_generators",
]


@dataclass
class Dataset:
    """Actor set with named tie relations and named attribute vectors."""

    actors: ActorSet
    ties: dict[str, BooleanRelation]
    attributes: dict[str, tuple[float | None, ...]]

    def tie(self, name: str) -> BooleanRelation:
        if name not in self.ties:
            raise ValueError(
                f"unknown tie type {name!r}; available: {', '.join(self.ties)}")
        return self.ties[name]

    def attribute(self, name: str) -> tuple[float | None, ...]:
        if name not in self.attributes:
            raise ValueError(
                f"unknown attribute {name!r}; available: {', '.join(self.attributes)}")
        return self.attributes[name]


def _fail(lineno: int, message: str) -> ValueError:
    return ValueError(f"dataset line {lineno}: {message}")


def loads_dataset(text: str) -> Dataset:
    """Parse a dataset document from a string."""
    actor_names: list[str] = []
    tie_sections: list[dict] = []
    attributes: dict[str, list[float | None]] = {}

    section = None      # "actors" | "ties" | "attributes"
    current: dict | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise _fail(lineno, f"malformed section header {line!r}")
            head = line[1:-1].split()
            if head == ["actors"]:
                section, current = "actors", None
            elif head == ["attributes"]:
                section, current = "attributes", None
            elif len(head) == 2 and head[0] == "ties":
                current = {"name": head[1], "directed": False, "edges": [],
                           "matrix": None, "line": lineno}
                tie_sections.append(current)
                section = "ties"
            else:
                raise _fail(lineno, f"unknown section {line!r}")
            continue
        if section is None:
            raise _fail(lineno, "content before any section header")
        if section == "actors":
            if len(line.split()) != 1:
                raise _fail(lineno, "actor names must not contain whitespace")
            actor_names.append(line)
        elif section == "ties":
            assert current is not None
            if line.lower().startswith("directed:"):
                value = line.split(":", 1)[1].strip().lower()
                if value not in ("true", "false"):
                    raise _fail(lineno, "directed must be true or false")
                current["directed"] = value == "true"
            elif line.lower() == "matrix:":
                current["matrix"] = []
            elif current["matrix"] is not None:
                current["matrix"].append((lineno, line.split()))
            else:
                parts = line.split()
                if len(parts) != 2:
                    raise _fail(lineno, f"expected an edge 'U V', got {line!r}")
                current["edges"].append((lineno, parts[0], parts[1]))
        else:  # attributes
            if ":" not in line:
                raise _fail(lineno, "expected 'name: v1 v2 ...'")
            name, _, rest = line.partition(":")
            name = name.strip()
            if not name:
                raise _fail(lineno, "attribute name is empty")
            if name in attributes:
                raise _fail(lineno, f"duplicate attribute {name!r}")
            values: list[float | None] = []
            for token in rest.split():
                if token.upper() == "NA":
                    values.append(None)
                else:
                    try:
                        values.append(float(token))
                    except ValueError:
                        raise _fail(lineno, f"bad attribute value {token!r}") from None
            attributes[name] = values

    if not actor_names:
        raise ValueError("dataset defines no actors")
    actors = ActorSet(tuple(actor_names))
    n = len(actors)

    ties: dict[str, BooleanRelation] = {}
    for sec in tie_sections:
        name = sec["name"]
        if name in ties:
            raise _fail(sec["line"], f"duplicate tie type {name!r}")
        if sec["matrix"] is not None:
            if len(sec["matrix"]) != n:
                raise _fail(sec["line"], f"tie {name!r}: expected {n} matrix rows")
            rows = []
            for lineno, cells in sec["matrix"]:
                if len(cells) != n:
                    raise _fail(lineno, f"tie {name!r}: expected {n} cells per row")
                try:
                    rows.append([int(c) for c in cells])
                except ValueError:
                    raise _fail(lineno, f"tie {name!r}: matrix cells must be 0 or 1") from None
            rel = BooleanRelation.from_rows(actors, rows, name)
            if not sec["directed"] and not rel.is_symmetric():
                raise _fail(sec["line"],
                            f"tie {name!r} is declared undirected but the matrix is asymmetric")
        else:
            pairs = []
            for lineno, u, v in sec["edges"]:
                for end in (u, v):
                    if end not in actors.labels:
                        raise _fail(lineno, f"tie {name!r}: unknown actor {end!r}")
                pairs.append((u, v))
            rel = BooleanRelation.from_pairs(actors, pairs,
                                             symmetric=not sec["directed"], label=name)
        ties[name] = rel
    if not ties:
        raise ValueError("dataset defines no tie types")

    attrs: dict[str, tuple[float | None, ...]] = {}
    for name, values in attributes.items():
        if len(values) != n:
            raise ValueError(
                f"attribute {name!r} has {len(values)} values for {n} actors")
        attrs[name] = tuple(values)
    return Dataset(actors, ties, attrs)


def load_dataset(path: str | Path) -> Dataset:
    """Parse a dataset file; raises ValueError with the offending line."""
    return loads_dataset(Path(path).read_text(encoding="utf-8"))


def florentine() -> Dataset:
    """The bundled Florentine families network: business and marriage ties
    among 16 banking families plus their wealth and priorate counts."""
    text = resources.files("rolebox").joinpath("data/florentine.txt").read_text("utf-8")
    return loads_dataset(text)


@dataclass(frozen=True)
class CutoffSpec:
    """How to turn a numeric attribute into a 0/1 vector."""

    attribute: str
    threshold: float
    comparison: str = "strictly_greater"   # or "at_least"
    missing: str = "as_zero"               # or "error"

    def __post_init__(self):
        if not math.isfinite(self.threshold):
            raise ValueError("cutoff threshold must be finite")
        if self.comparison not in ("strictly_greater", "at_least"):
            raise ValueError(f"unknown comparison {self.comparison!r}")
        if self.missing not in ("as_zero", "error"):
            raise ValueError(f"unknown missing-value policy {self.missing!r}")


def parse_cutoff(text: str) -> CutoffSpec:
    """Parse "name:THRESHOLD[:POLICY]"; ">=" before the threshold means
    at-least, the default comparison is strictly-greater."""
    parts = text.split(":")
    if len(parts) not in (2, 3):
        raise ValueError(f"cutoff must look like name:threshold[:policy], got {text!r}")
    name = parts[0].strip()
    raw = parts[1].strip()
    comparison = "strictly_greater"
    if raw.startswith(">="):
        comparison = "at_least"
        raw = raw[2:]
    elif raw.startswith(">"):
        raw = raw[1:]
    try:
        threshold = float(raw)
    except ValueError:
        raise ValueError(f"bad cutoff threshold in {text!r}") from None
    missing = parts[2].strip() if len(parts) == 3 else "as_zero"
    return CutoffSpec(name, threshold, comparison, missing)


def binarize(dataset: Dataset, spec: CutoffSpec) -> AttributeVector:
    """Apply a cutoff to a dataset attribute."""
    values = dataset.attribute(spec.attribute)
    bits = 0
    for i, value in enumerate(values):
        if value is None:
            if spec.missing == "error":
                raise ValueError(
                    f"attribute {spec.attribute!r} is missing for actor "
                    f"{dataset.actors.labels[i]!r}")
            continue
        if value > spec.threshold or (spec.comparison == "at_least" and value == spec.threshold):
            bits |= 1 << i
    return AttributeVector(dataset.actors, bits, spec.attribute)


def build_generators(dataset: Dataset, ties: list[str] | None = None,
                     cutoffs: list[CutoffSpec] = ()) -> list[BooleanRelation]:
    """Selected tie relations followed by binarized attribute diagonals."""
    from .relations import attribute_to_diagonal

    names = list(ties) if ties is not None else list(dataset.ties)
    gens = [dataset.tie(name) for name in names]
    for spec in cutoffs:
        gens.append(attribute_to_diagonal(binarize(dataset, spec)))
    return gens
