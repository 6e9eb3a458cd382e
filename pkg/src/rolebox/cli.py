"""Command line interface for the analysis pipeline.

Every subcommand reads a dataset document (the bundled Florentine network
when no path is given), selects tie types and binarized attributes as
generators, and writes CSV, JSON or graphviz output deterministically:
identical inputs and flags yield byte-identical documents.
"""

from __future__ import annotations

import json
from pathlib import Path

import click

from . import export
from .datasets import (Dataset, build_generators, florentine, load_dataset,
                       parse_cutoff)
from .hierarchy import cumulated_hierarchy, hierarchy_levels, person_hierarchy
from .position import Partition, blockmodel, containment_class_partition, \
    structural_equivalence_partition
from .rbox import build_relation_box
from .semigroup import generate_semigroup


def _load(dataset_path: str | None) -> Dataset:
    if dataset_path is None:
        return florentine()
    return load_dataset(dataset_path)


def _split_names(option: str | None) -> list[str] | None:
    if option is None:
        return None
    names = [part.strip() for part in option.split(",") if part.strip()]
    if not names:
        raise click.ClickException("empty name list")
    return names


def _short_labels(names: list[str]) -> list[str]:
    initials = [name[:1].upper() for name in names]
    if len(set(initials)) == len(names):
        return initials
    return names


def _prepare(dataset_path, ties, attributes, cutoffs, free_attributes):
    """Dataset, generator relations and the weightless indices for the box."""
    ds = _load(dataset_path)
    tie_names = _split_names(ties) or list(ds.ties)
    attr_names = _split_names(attributes) or []
    specs = {}
    for text in cutoffs:
        spec = parse_cutoff(text)
        ds.attribute(spec.attribute)
        specs[spec.attribute] = spec
    cutoff_list = []
    for name in attr_names:
        values = ds.attribute(name)
        if name in specs:
            cutoff_list.append(specs[name])
        elif all(v in (None, 0.0, 1.0) for v in values):
            cutoff_list.append(parse_cutoff(f"{name}:0"))
        else:
            raise click.ClickException(
                f"attribute {name!r} is numeric; provide --cutoff {name}:THRESHOLD")
    gens = build_generators(ds, tie_names, cutoff_list)
    labels = _short_labels(tie_names + [spec.attribute for spec in cutoff_list])
    gens = [g.with_label(lbl) for g, lbl in zip(gens, labels)]
    weightless = tuple(range(len(tie_names), len(gens))) if free_attributes else ()
    return ds, gens, weightless


def _common_options(fn):
    fn = click.option("--out", type=click.Path(dir_okay=False, writable=True),
                      default=None, help="Write the output to a file.")(fn)
    fn = click.option("--format", "fmt", type=click.Choice(["csv", "json", "dot"]),
                      default=None, help="Output format.")(fn)
    fn = click.option("--free-attributes", is_flag=True,
                      help="Attribute letters do not consume word length.")(fn)
    fn = click.option("--transposes", is_flag=True,
                      help="Add transposes of directed ties as generators.")(fn)
    fn = click.option("--cutoff", "cutoffs", multiple=True, metavar="NAME:THRESHOLD[:POLICY]",
                      help="Binarization rule; prefix the threshold with >= for "
                           "at-least, policy is as_zero or error.")(fn)
    fn = click.option("--attributes", default=None,
                      help="Comma-separated attributes used as diagonal generators.")(fn)
    fn = click.option("--ties", default=None,
                      help="Comma-separated tie types (default: all).")(fn)
    fn = click.argument("dataset", required=False,
                        type=click.Path(exists=True, dir_okay=False))(fn)
    return fn


def _emit(text: str, out: str | None) -> None:
    if out is None:
        click.echo(text, nl=False)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _pick_format(fmt: str | None, allowed: tuple[str, ...], default: str) -> str:
    fmt = fmt or default
    if fmt not in allowed:
        raise click.ClickException(
            f"format {fmt!r} is not supported here; use one of {', '.join(allowed)}")
    return fmt


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _parse_k_range(ctx, param, value) -> list[int]:
    text = str(value)
    lo, sep, hi = text.partition(":")
    try:
        if sep:
            lo_i, hi_i = int(lo), int(hi)
        else:
            lo_i = hi_i = int(text)
    except ValueError:
        raise click.BadParameter(f"expected an integer or A:B range, got {text!r}")
    if lo_i < 1 or hi_i < lo_i:
        raise click.BadParameter("k must satisfy 1 <= A <= B")
    return list(range(lo_i, hi_i + 1))


def _manual_partition(ds: Dataset, classes: str | None) -> Partition:
    if not classes:
        raise click.ClickException("--mode manual requires --classes 'A,B;C,D'")
    groups = [[name.strip() for name in group.split(",") if name.strip()]
              for group in classes.split(";") if group.strip()]
    return Partition.from_classes(ds.actors, groups)


def _partition_for(mode: str, ds, gens, k, transposes, weightless, classes):
    """Partition plus the class ids of isolates (for optional dropping)."""
    if mode == "structural":
        return structural_equivalence_partition(gens), []
    if mode == "manual":
        return _manual_partition(ds, classes), []
    box = build_relation_box(gens, k, include_transposes=transposes,
                             weightless=weightless)
    h = cumulated_hierarchy(box)
    part = containment_class_partition(h, mode)
    iso = hierarchy_levels(h).isolates
    drop = sorted({part.class_of[i] for i in iso})
    return part, drop


@click.group()
def main():
    """Compositional equivalence analysis of multiplex networks.

    Builds compound ties, person hierarchies and the cumulated containment
    order, partitions the actors, reduces the network to a positional
    system and generates its role-structure semigroup.
    """


@main.command("rbox")
@_common_options
@click.option("--k", type=click.IntRange(min=1), default=1, show_default=True,
              help="Maximum word length.")
def rbox_cmd(dataset, ties, attributes, cutoffs, transposes, free_attributes,
             fmt, out, k):
    """Distinct string relations up to length k."""
    fmt = _pick_format(fmt, ("csv", "json"), "csv")
    try:
        ds, gens, weightless = _prepare(dataset, ties, attributes, cutoffs,
                                        free_attributes)
        box = build_relation_box(gens, k, include_transposes=transposes,
                                 weightless=weightless)
    except ValueError as exc:
        raise click.ClickException(str(exc)) from exc
    if fmt == "json":
        payload = {"k": k, "w": box.w, "alphabet": list(box.labels),
                   "strings": [{"word": box.word_label(s.word),
                                "all_words": [box.word_label(w) for w in s.all_words],
                                "matrix": s.relation.to_lists()}
                               for s in box.strings]}
        _emit(_json_text(payload), out)
        return
    blocks = [f"# k={k} w={box.w}\n"]
    for s in box.strings:
        blocks.append(f"# word: {box.word_label(s.word)}\n"
                      + export.matrix_csv(s.relation))
    _emit("".join(blocks), out)


@main.command("hierarchy")
@_common_options
@click.option("--k", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--actor", default=None, help="Single actor to report (default: all).")
def hierarchy_cmd(dataset, ties, attributes, cutoffs, transposes,
                  free_attributes, fmt, out, k, actor):
    """Person hierarchies: containments perceived by each actor."""
    fmt = _pick_format(fmt, ("csv", "json"), "csv")
    try:
        ds, gens, weightless = _prepare(dataset, ties, attributes, cutoffs,
                                        free_attributes)
        box = build_relation_box(gens, k, include_transposes=transposes,
                                 weightless=weightless)
        indices = ([ds.actors.index(actor)] if actor is not None
                   else list(range(len(ds.actors))))
        hierarchies = [person_hierarchy(box, l) for l in indices]
    except ValueError as exc:
        raise click.ClickException(str(exc)) from exc
    if fmt == "json":
        payload = {"k": k,
                   "hierarchies": [{"actor": ds.actors.labels[h.actor],
                                    "matrix": h.to_relation().to_lists()}
                                   for h in hierarchies]}
        _emit(_json_text(payload), out)
        return
    blocks = [f"# actor: {ds.actors.labels[h.actor]}\n"
              + export.matrix_csv(h.to_relation()) for h in hierarchies]
    _emit("".join(blocks), out)


@main.command("cph")
@_common_options
@click.option("--k", default="1", show_default=True, callback=_parse_k_range,
              help="Word length bound; an integer or an A:B range.")
def cph_cmd(dataset, ties, attributes, cutoffs, transposes, free_attributes,
            fmt, out, k):
    """Cumulated person hierarchy: the containment order over all actors."""
    fmt = _pick_format(fmt, ("csv", "json"), "csv")
    try:
        ds, gens, weightless = _prepare(dataset, ties, attributes, cutoffs,
                                        free_attributes)
        results = []
        for kk in k:
            box = build_relation_box(gens, kk, include_transposes=transposes,
                                     weightless=weightless)
            results.append(cumulated_hierarchy(box))
    except ValueError as exc:
        raise click.ClickException(str(exc)) from exc
    if fmt == "json":
        payloads = [{"k": h.k, "generators": list(h.generator_labels),
                     "transitivity_repaired": h.repaired,
                     "actors": list(ds.actors.labels),
                     "matrix": h.to_relation().to_lists()} for h in results]
        _emit(_json_text(payloads[0] if len(payloads) == 1 else {"results": payloads}),
              out)
        return
    blocks = []
    for h in results:
        blocks.append(f"# k={h.k}\n# generators: {','.join(h.generator_labels)}\n"
                      f"# transitivity_repaired: {str(h.repaired).lower()}\n"
                      + export.matrix_csv(h.to_relation()))
    _emit("".join(blocks), out)


@main.command("levels")
@_common_options
@click.option("--k", type=click.IntRange(min=1), default=1, show_default=True)
def levels_cmd(dataset, ties, attributes, cutoffs, transposes, free_attributes,
               fmt, out, k):
    """Hierarchy levels of the containment order, containers first."""
    fmt = _pick_format(fmt, ("csv", "json"), "csv")
    try:
        ds, gens, weightless = _prepare(dataset, ties, attributes, cutoffs,
                                        free_attributes)
        box = build_relation_box(gens, k, include_transposes=transposes,
                                 weightless=weightless)
        lv = hierarchy_levels(cumulated_hierarchy(box))
    except ValueError as exc:
        raise click.ClickException(str(exc)) from exc
    names = ds.actors.labels
    if fmt == "json":
        payload = {"k": k, "levels": lv.named(),
                   "isolates": [names[i] for i in lv.isolates]}
        _emit(_json_text(payload), out)
        return
    lines = [f"# k={k}", "level,class,actor"]
    for level_idx, level in enumerate(lv.levels, start=1):
        for class_idx, cls in enumerate(level, start=1):
            for i in cls:
                lines.append(f"{level_idx},{class_idx},{names[i]}")
    for i in lv.isolates:
        lines.append(f"isolate,,{names[i]}")
    _emit("\n".join(lines) + "\n", out)


_MODE = click.Choice(["level", "mutual", "structural", "manual"])


@main.command("partition")
@_common_options
@click.option("--k", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--mode", type=_MODE, default="level", show_default=True)
@click.option("--classes", default=None,
              help="Manual classes as 'A,B;C'; leftover actors form singletons.")
def partition_cmd(dataset, ties, attributes, cutoffs, transposes,
                  free_attributes, fmt, out, k, mode, classes):
    """Actor partition from containment classes, structural equivalence or by hand."""
    fmt = _pick_format(fmt, ("csv", "json"), "csv")
    try:
        ds, gens, weightless = _prepare(dataset, ties, attributes, cutoffs,
                                        free_attributes)
        part, _ = _partition_for(mode, ds, gens, k, transposes, weightless, classes)
    except ValueError as exc:
        raise click.ClickException(str(exc)) from exc
    if fmt == "json":
        payload = {"mode": mode,
                   "classes": [{"id": c, "label": part.labels[c],
                                "members": [ds.actors.labels[i]
                                            for i in part.members(c)]}
                               for c in range(part.n_classes)]}
        _emit(_json_text(payload), out)
        return
    lines = ["actor,class,label"]
    for i, name in enumerate(ds.actors.labels):
        c = part.class_of[i]
        lines.append(f"{name},{c},{part.labels[c]}")
    _emit("\n".join(lines) + "\n", out)


@main.command("blockmodel")
@_common_options
@click.option("--k", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--mode", type=_MODE, default="level", show_default=True)
@click.option("--classes", default=None,
              help="Manual classes as 'A,B;C'; leftover actors form singletons.")
@click.option("--keep-isolates", is_flag=True,
              help="Keep isolate classes in the reduced matrices.")
def blockmodel_cmd(dataset, ties, attributes, cutoffs, transposes,
                   free_attributes, fmt, out, k, mode, classes, keep_isolates):
    """Reduce the network onto a positional system (one matrix per generator)."""
    fmt = _pick_format(fmt, ("csv", "json"), "csv")
    try:
        ds, gens, weightless = _prepare(dataset, ties, attributes, cutoffs,
                                        free_attributes)
        part, iso_classes = _partition_for(mode, ds, gens, k, transposes,
                                           weightless, classes)
        drop = () if keep_isolates else tuple(iso_classes)
        system = blockmodel(gens, part, drop=drop)
    except ValueError as exc:
        raise click.ClickException(str(exc)) from exc
    if fmt == "json":
        payload = {"mode": mode,
                   "classes": [{"label": part.labels[c],
                                "members": [ds.actors.labels[i]
                                            for i in part.members(c)]}
                               for c in system.kept],
                   "relations": [{"name": rel.label, "matrix": rel.to_lists()}
                                 for rel in system.relations]}
        _emit(_json_text(payload), out)
        return
    blocks = []
    for c in system.kept:
        members = ",".join(ds.actors.labels[i] for i in part.members(c))
        blocks.append(f"# class {part.labels[c]}: {members}\n")
    for rel in system.relations:
        blocks.append(f"# relation: {rel.label}\n" + export.matrix_csv(rel))
    _emit("".join(blocks), out)


@main.command("semigroup")
@_common_options
@click.option("--k", type=click.IntRange(min=1), default=1, show_default=True,
              help="Word length bound for the reducing hierarchy (reduced modes).")
@click.option("--mode", type=click.Choice(["full", "level", "mutual", "structural",
                                           "manual"]),
              default="full", show_default=True,
              help="Close the raw generators, or reduce them first.")
@click.option("--classes", default=None,
              help="Manual classes as 'A,B;C'; leftover actors form singletons.")
@click.option("--keep-isolates", is_flag=True,
              help="Keep isolate classes when reducing.")
@click.option("--monoid", is_flag=True, help="Adjoin an identity element.")
@click.option("--max-elements", type=click.IntRange(min=1), default=10000,
              show_default=True, help="Safety cap on the closure size.")
def semigroup_cmd(dataset, ties, attributes, cutoffs, transposes,
                  free_attributes, fmt, out, k, mode, classes, keep_isolates,
                  monoid, max_elements):
    """Relation semigroup: closure, Cayley table, words and inclusion order."""
    fmt = _pick_format(fmt, ("csv", "json"), "csv")
    try:
        ds, gens, weightless = _prepare(dataset, ties, attributes, cutoffs,
                                        free_attributes)
        if mode != "full":
            part, iso_classes = _partition_for(mode, ds, gens, k, transposes,
                                               weightless, classes)
            drop = () if keep_isolates else tuple(iso_classes)
            gens = list(blockmodel(gens, part, drop=drop).relations)
        s = generate_semigroup(gens, max_elements=max_elements,
                               adjoin_identity=monoid)
    except ValueError as exc:
        raise click.ClickException(str(exc)) from exc
    word_of = [s.word_label(w) for w in s.words]
    if fmt == "json":
        payload = {"order": s.order, "complete": s.complete,
                   "identity_adjoined": s.identity_adjoined,
                   "generators": list(s.labels),
                   "elements": [{"id": e, "word": word_of[e]}
                                for e in range(s.order)],
                   "cayley": [list(row) if row is not None else None
                              for row in s.cayley],
                   "inclusion": [[(s.inclusion[e] >> f) & 1 for f in range(s.order)]
                                 for e in range(s.order)]}
        _emit(_json_text(payload), out)
        return
    lines = [f"# order: {s.order}", f"# complete: {str(s.complete).lower()}",
             f"# identity_adjoined: {str(s.identity_adjoined).lower()}",
             "element,word," + ",".join(s.labels)]
    for e in range(s.order):
        row = s.cayley[e]
        cells = ",".join(str(c) for c in row) if row is not None else ""
        lines.append(f"{e},{word_of[e]},{cells}")
    lines.append("# inclusion")
    lines.append("," + ",".join(str(e) for e in range(s.order)))
    for e in range(s.order):
        bits = ",".join(str((s.inclusion[e] >> f) & 1) for f in range(s.order))
        lines.append(f"{e},{bits}")
    _emit("\n".join(lines) + "\n", out)


@main.command("hasse")
@_common_options
@click.option("--k", type=click.IntRange(min=1), default=1, show_default=True)
def hasse_cmd(dataset, ties, attributes, cutoffs, transposes, free_attributes,
              fmt, out, k):
    """Hasse diagram of the containment order as a graphviz document."""
    fmt = _pick_format(fmt, ("dot", "json"), "dot")
    try:
        ds, gens, weightless = _prepare(dataset, ties, attributes, cutoffs,
                                        free_attributes)
        box = build_relation_box(gens, k, include_transposes=transposes,
                                 weightless=weightless)
        h = cumulated_hierarchy(box)
        text = (export.export_hasse(h) if fmt == "dot"
                else _json_text(export.hasse_json(h)))
    except ValueError as exc:
        raise click.ClickException(str(exc)) from exc
    _emit(text, out)


if __name__ == "__main__":
    main()
