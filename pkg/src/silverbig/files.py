"""Text formats for designs, graphs, colorings, and alpha-sets.

Design (.blk): header ``v=<int> k=<int> lambda=<int>``, one block per
line as ascending 0-based point indices, ``#`` comments, and optional
``%class <name>`` lines grouping the following blocks into parallel
classes. Graph: ``p <n> <m>`` then ``e <u> <v>`` with u < v. Coloring:
``c <num_colors>`` then ``<vertex> <color>`` per vertex. Alpha-set: one
line of vertex ids. Writers emit canonical order and write atomically;
readers accept any order and canonicalize.
"""

from __future__ import annotations

import os
import tempfile
from pathlib import Path

from .big import Graph
from .designs import Design
from .independence import IndependentSet
from .silver import Coloring


def _atomic_write(path, text: str):
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or Path("."), prefix=path.name)
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _content_lines(path):
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


class FormatError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Designs


def design_to_text(design: Design) -> str:
    lines = [f"v={design.v} k={design.k} lambda={design.lam}"]
    if design.resolution is None:
        lines += [" ".join(map(str, blk)) for blk in design.blocks]
    else:
        for c, cls in enumerate(design.resolution.classes):
            lines.append(f"%class {c}")
            lines += [" ".join(map(str, design.blocks[i])) for i in cls]
    return "\n".join(lines) + "\n"


def write_design(design: Design, path):
    _atomic_write(path, design_to_text(design))


def read_design(path) -> Design:
    header = None
    blocks: list[tuple[int, ...]] = []
    classes: list[list[tuple[int, ...]]] = []
    in_class = False
    for lineno, line in _content_lines(path):
        if header is None:
            fields = dict(part.split("=", 1) for part in line.split() if "=" in part)
            try:
                header = (int(fields["v"]), int(fields["k"]), int(fields["lambda"]))
            except (KeyError, ValueError):
                raise FormatError(f"{path}:{lineno}: bad header {line!r}")
            continue
        if line.startswith("%class"):
            classes.append([])
            in_class = True
            continue
        try:
            blk = tuple(sorted(int(x) for x in line.split()))
        except ValueError:
            raise FormatError(f"{path}:{lineno}: bad block line {line!r}")
        blocks.append(blk)
        if in_class:
            classes[-1].append(blk)
    if header is None:
        raise FormatError(f"{path}: missing header line")
    if in_class and sum(len(c) for c in classes) != len(blocks):
        raise FormatError(f"{path}: blocks outside %class sections")
    v, k, lam = header
    try:
        return Design.from_block_sets(v, k, lam, blocks, classes if in_class else None)
    except ValueError as exc:
        raise FormatError(f"{path}: {exc}") from exc


# ---------------------------------------------------------------------------
# Graphs


def graph_to_text(g: Graph) -> str:
    edges = list(g.edges())
    lines = [f"p {g.n} {len(edges)}"]
    lines += [f"e {u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def write_graph(g: Graph, path):
    _atomic_write(path, graph_to_text(g))


def read_graph(path) -> Graph:
    g = None
    m = 0
    for lineno, line in _content_lines(path):
        parts = line.split()
        if parts[0] == "p" and g is None:
            if len(parts) != 3:
                raise FormatError(f"{path}:{lineno}: bad p line")
            g = Graph(int(parts[1]))
            m = int(parts[2])
        elif parts[0] == "e" and g is not None:
            if len(parts) != 3:
                raise FormatError(f"{path}:{lineno}: bad e line")
            try:
                g.add_edge(int(parts[1]), int(parts[2]))
            except ValueError as exc:
                raise FormatError(f"{path}:{lineno}: {exc}") from exc
        else:
            raise FormatError(f"{path}:{lineno}: unexpected line {line!r}")
    if g is None:
        raise FormatError(f"{path}: missing p line")
    if g.edge_count() != m:
        raise FormatError(f"{path}: p line declares {m} edges, found {g.edge_count()}")
    return g


# ---------------------------------------------------------------------------
# Colorings and alpha-sets


def coloring_to_text(coloring: Coloring) -> str:
    lines = [f"c {coloring.num_colors}"]
    lines += [f"{v} {c}" for v, c in enumerate(coloring.colors)]
    return "\n".join(lines) + "\n"


def write_coloring(coloring: Coloring, path):
    _atomic_write(path, coloring_to_text(coloring))


def read_coloring(path) -> Coloring:
    num = None
    assignments = {}
    for lineno, line in _content_lines(path):
        parts = line.split()
        if parts[0] == "c" and num is None:
            num = int(parts[1])
        elif len(parts) == 2 and num is not None:
            v, c = int(parts[0]), int(parts[1])
            if v in assignments:
                raise FormatError(f"{path}:{lineno}: vertex {v} colored twice")
            assignments[v] = c
        else:
            raise FormatError(f"{path}:{lineno}: unexpected line {line!r}")
    if num is None:
        raise FormatError(f"{path}: missing c header")
    if sorted(assignments) != list(range(len(assignments))):
        raise FormatError(f"{path}: coloring is not total on 0..n-1")
    try:
        return Coloring(tuple(assignments[v] for v in range(len(assignments))), num)
    except ValueError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def alpha_set_to_text(ind: IndependentSet) -> str:
    return " ".join(map(str, ind.vertices)) + "\n"


def write_alpha_set(ind: IndependentSet, path):
    _atomic_write(path, alpha_set_to_text(ind))


def read_alpha_set(path) -> IndependentSet:
    ids = []
    for lineno, line in _content_lines(path):
        try:
            ids.extend(int(x) for x in line.split())
        except ValueError:
            raise FormatError(f"{path}:{lineno}: bad vertex id in {line!r}")
    try:
        return IndependentSet(tuple(sorted(ids)))
    except ValueError as exc:
        raise FormatError(f"{path}: {exc}") from exc
