"""Serialization of matrices, hierarchies and orders.

CSV matrices carry row and column labels and round-trip through
``parse_matrix_csv`` cell for cell. The Hasse export emits a graphviz
document with one rank group per hierarchy level and only the covering
edges of the order (its transitive reduction); all outputs are
deterministic for identical inputs.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

from .hierarchy import CumulatedHierarchy, QuotientOrder, quotient
from .relations import ActorSet, BooleanRelation

__all__ = [
    "matrix_csv",
    "parse_matrix_csv",
    "matrix_json",
    "export_hasse",
    "hasse_json",
]


def _grid_csv(row_labels: Sequence[str], col_labels: Sequence[str],
              cells: Sequence[Sequence[int]]) -> str:
    lines = ["," + ",".join(col_labels)]
    for label, row in zip(row_labels, cells):
        lines.append(label + "," + ",".join(str(c) for c in row))
    return "\n".join(lines) + "\n"


def matrix_csv(rel: BooleanRelation) -> str:
    """Labelled CSV rendering of a relation."""
    labels = rel.actors.labels
    return _grid_csv(labels, labels, rel.to_lists())


def parse_matrix_csv(text: str) -> BooleanRelation:
    """Inverse of matrix_csv; comment lines starting with '#' are skipped."""
    rows = [line for line in text.splitlines()
            if line.strip() and not line.lstrip().startswith("#")]
    if not rows:
        raise ValueError("empty matrix document")
    header = rows[0].split(",")
    if header[0].strip():
        raise ValueError("matrix header must start with an empty cell")
    labels = tuple(h.strip() for h in header[1:])
    actors = ActorSet(labels)
    cells = []
    row_labels = []
    for line in rows[1:]:
        parts = [p.strip() for p in line.split(",")]
        row_labels.append(parts[0])
        cells.append([int(p) for p in parts[1:]])
    if tuple(row_labels) != labels:
        raise ValueError("matrix row labels do not match the header")
    return BooleanRelation.from_rows(actors, cells)


def matrix_json(rel: BooleanRelation) -> dict:
    return {"actors": list(rel.actors.labels),
            "label": rel.label,
            "matrix": rel.to_lists()}


def _as_quotient(source: CumulatedHierarchy | QuotientOrder) -> QuotientOrder:
    if isinstance(source, QuotientOrder):
        return source
    return quotient(source)


def export_hasse(source: CumulatedHierarchy | QuotientOrder,
                 path: str | Path | None = None) -> str:
    """Graphviz document for the containment order's Hasse diagram.

    Classes of mutually containing actors become nodes, grouped rank=same
    by hierarchy level with containers on top; edges run from the contained
    class up to the covering class. Non-order input is rejected.
    """
    q = _as_quotient(source)
    labels = q.actors.labels
    ranks = q.ranks()
    by_rank: dict[int, list[int]] = {}
    for c in range(q.n_classes):
        by_rank.setdefault(ranks[c], []).append(c)

    lines = ["digraph hasse {", "  rankdir=BT;", "  node [shape=box];"]
    for r in sorted(by_rank, reverse=True):
        members = sorted(by_rank[r], key=lambda c: q.classes[c][0])
        lines.append("  { rank=same; " + " ".join(f"c{c};" for c in members) + " }")
    for c in range(q.n_classes):
        name = ", ".join(labels[i] for i in q.classes[c])
        lines.append(f'  c{c} [label="{name}"];')
    for lower, upper in q.covers():
        lines.append(f"  c{lower} -> c{upper};")
    lines.append("}")
    text = "\n".join(lines) + "\n"
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def hasse_json(source: CumulatedHierarchy | QuotientOrder) -> dict:
    """Node/edge description of the Hasse diagram."""
    q = _as_quotient(source)
    labels = q.actors.labels
    ranks = q.ranks()
    nodes = [{"id": c,
              "members": [labels[i] for i in q.classes[c]],
              "level": ranks[c]}
             for c in range(q.n_classes)]
    edges = [[lower, upper] for lower, upper in q.covers()]
    return {"nodes": nodes, "edges": edges}
