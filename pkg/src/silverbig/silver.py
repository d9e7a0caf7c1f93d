"""Colorings, rainbow/silver predicates, canonical silver colorings, and
the non-silverness screens for block intersection graphs.

A proper (r+1)-coloring of an r-regular graph makes a vertex rainbow
when its closed neighborhood carries all r+1 colors; a coloring is
silver with respect to an independent set I when every member of I is
rainbow, and the graph is silver when that holds for some maximum I.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .big import Graph
from .independence import IndependentSet, is_independent, max_independent_set

# screen reasons: each names the structural fact that rules silverness out
PC_DIVISIBILITY = "pc-divisibility"  # parallel class exists but k^2 does not divide v
INDEPENDENCE_BOUND = "independence-bound"  # alpha exceeds the pigeonhole bound
NEAR_PC = "near-parallel-class"  # a near parallel class exists
PENCIL_THRESHOLD = "pencil-threshold"  # v above k^3-2k^2+2k, all alpha-sets pencils
EXHAUSTIVE = "exhaustive-search"  # every alpha-set refuted by complete search
TRIPLE_CERT = "triple-certificate"  # counting contradiction on three set members

SILVER = "silver"
NOT_SILVER = "not-silver"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class Coloring:
    """Total map vertex -> color id in 0..num_colors-1."""

    colors: tuple[int, ...]
    num_colors: int

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        if any(c < 0 or c >= self.num_colors for c in self.colors):
            raise ValueError("color id out of range")


@dataclass(frozen=True)
class Verdict:
    """Silverness outcome. Silver carries its witness coloring and
    alpha-set; not-silver carries the reason and a re-verifiable
    certificate; unknown carries the exhausted budget."""

    outcome: str
    reason: str | None = None
    coloring: Coloring | None = None
    alpha_set: IndependentSet | None = None
    certificate: Any = None
    budget: int | None = None

    def __post_init__(self):
        if self.outcome not in (SILVER, NOT_SILVER, UNKNOWN):
            raise ValueError(f"unknown outcome {self.outcome!r}")


def _check_total(g: Graph, coloring: Coloring):
    if len(coloring.colors) != g.n:
        raise ValueError(
            f"coloring covers {len(coloring.colors)} vertices, graph has {g.n}"
        )


def is_proper(g: Graph, coloring: Coloring) -> bool:
    """True iff no edge is monochromatic."""
    _check_total(g, coloring)
    return all(coloring.colors[u] != coloring.colors[v] for u, v in g.edges())


def rainbow_vertices(g: Graph, coloring: Coloring) -> set[int]:
    """Vertices whose closed neighborhood carries every color exactly once.

    Requires a regular graph with num_colors = degree + 1, the only case
    where the closed neighborhood can be a bijection onto the colors.
    """
    _check_total(g, coloring)
    r = g.regular_degree()
    if r is None:
        raise ValueError("rainbow vertices are defined for regular graphs only")
    if coloring.num_colors != r + 1:
        raise ValueError(
            f"need degree+1 = {r + 1} colors, coloring has {coloring.num_colors}"
        )
    out = set()
    for x in range(g.n):
        seen = 1 << coloring.colors[x]
        for u in g.neighbors(x):
            seen |= 1 << coloring.colors[u]
        if seen.bit_count() == r + 1:
            out.add(x)
    return out


def is_silver(
    g: Graph,
    coloring: Coloring,
    ind: IndependentSet,
    assert_maximum: bool = False,
) -> bool:
    """Proper coloring with every member of ind rainbow.

    With assert_maximum the set is additionally required to be a maximum
    independent set (an alpha-set), which costs an exact search.
    """
    if not is_independent(g, ind.vertices):
        raise ValueError("silverness is checked against an independent set")
    if not is_proper(g, coloring):
        return False
    if assert_maximum:
        mis, exact = max_independent_set(g)
        if not exact:
            raise ValueError("budget too small to certify maximality")
        if mis.size != ind.size:
            return False
    rainbow = rainbow_vertices(g, coloring)
    return all(x in rainbow for x in ind.vertices)


# ---------------------------------------------------------------------------
# Canonical silver colorings


def _disjointness_classes(design) -> list[list[int]] | None:
    """Group the blocks of an affine plane by pairwise disjointness.

    Uses the attached resolution when present; otherwise groups blocks
    directly (disjointness is transitive on the lines of a plane).
    Classes are ordered by smallest block index.
    """
    if design.resolution is not None:
        return [list(cls) for cls in design.resolution.classes]
    sets = [set(blk) for blk in design.blocks]
    classes: list[list[int]] = []
    for i in range(design.b):
        for cls in classes:
            if sets[i].isdisjoint(sets[cls[0]]):
                if not all(sets[i].isdisjoint(sets[j]) for j in cls):
                    return None
                cls.append(i)
                break
        else:
            classes.append([i])
    if any(len(cls) != design.k for cls in classes):
        return None
    return classes


def construct_silver_canonical(
    design, i: int
) -> tuple[Coloring, IndependentSet] | None:
    """The closed-form silver colorings for symmetric designs and affine
    planes; None for designs outside those families.

    Symmetric design: blocks meet pairwise in lam points, so the i-BIG
    is complete for i = lam (distinct colors, singleton alpha-set) and
    edgeless otherwise (one color, all vertices). Affine plane of order
    n: the 0-BIG is n+1 disjoint n-cliques, colored 0..n-1 inside each
    clique (totally silver, so the alpha-set takes the first vertex of
    each clique); the 1-BIG is complete multipartite with the parallel
    classes as parts, where part 0 shares color 0 and vertex t of part
    j >= 1 gets color (j-1)n + t + 1, silver with respect to part 0.
    """
    if not 0 <= i <= design.k:
        raise ValueError(f"intersection size {i} out of range 0..{design.k}")
    n_blocks = design.b
    if n_blocks == design.v:  # symmetric
        if i == design.lam:
            return (
                Coloring(tuple(range(n_blocks)), n_blocks),
                IndependentSet((0,)),
            )
        return (
            Coloring((0,) * n_blocks, 1),
            IndependentSet(tuple(range(n_blocks))),
        )
    if design.v == design.k**2 and design.lam == 1:  # affine plane
        n = design.k
        classes = _disjointness_classes(design)
        if classes is None:
            return None
        colors = [0] * n_blocks
        if i == 0:
            for cls in classes:
                for t, idx in enumerate(cls):
                    colors[idx] = t
            # totally silver; one vertex per clique is a maximum independent set
            return (
                Coloring(tuple(colors), n),
                IndependentSet(tuple(sorted(cls[0] for cls in classes))),
            )
        if i == 1:
            for j, cls in enumerate(classes[1:], start=1):
                for t, idx in enumerate(cls):
                    colors[idx] = (j - 1) * n + t + 1
            return (
                Coloring(tuple(colors), n * n + 1),
                IndependentSet(tuple(sorted(classes[0]))),
            )
        # blocks of a plane never meet in 2+ points: edgeless
        return Coloring((0,) * n_blocks, 1), IndependentSet(tuple(range(n_blocks)))
    return None


# ---------------------------------------------------------------------------
# Non-silverness screens


def _check_partial_class(design, indices, missing: int):
    blocks = [design.blocks[i] for i in indices]
    pts = sorted(x for blk in blocks for x in blk)
    if len(pts) != len(set(pts)) or len(pts) != design.v - missing:
        kind = "parallel class" if missing == 0 else "near parallel class"
        raise ValueError(f"supplied block set is not a {kind}")


def silver_alpha_bound(v: int, k: int) -> int:
    """Largest admissible alpha of a silver 1-BIG: k * floor of
    v(v-1) / (k^2 v - k^3 + k^2 - k)."""
    return k * (v * (v - 1) // (k * k * v - k**3 + k * k - k))


def pencil_threshold(k: int) -> int:
    """0-BIGs are never silver for v strictly above k^3 - 2k^2 + 2k."""
    return k**3 - 2 * k * k + 2 * k


def screen(design, i: int, pc=None, near_pc=None, alpha=None) -> list[Verdict]:
    """Apply every non-silverness screen whose structural fact is at hand.

    pc and near_pc are block-index collections, validated against the
    design; alpha is the (exact) independence number of the i-BIG. An
    empty list means no screen applies, not that the graph is silver.
    """
    if i not in (0, 1):
        raise ValueError("screens exist for i in {0, 1} only")
    v, k = design.v, design.k
    verdicts = []
    if i == 1:
        if pc is not None:
            _check_partial_class(design, pc, missing=0)
            if v % (k * k):
                verdicts.append(
                    Verdict(
                        NOT_SILVER,
                        reason=PC_DIVISIBILITY,
                        certificate={"pc": tuple(pc), "v": v, "k": k},
                    )
                )
        if alpha is not None:
            bound = silver_alpha_bound(v, k)
            if alpha > bound:
                verdicts.append(
                    Verdict(
                        NOT_SILVER,
                        reason=INDEPENDENCE_BOUND,
                        certificate={"alpha": alpha, "bound": bound},
                    )
                )
        if near_pc is not None:
            _check_partial_class(design, near_pc, missing=1)
            covered = {x for idx in near_pc for x in design.blocks[idx]}
            (missed,) = set(range(v)) - covered
            verdicts.append(
                Verdict(
                    NOT_SILVER,
                    reason=NEAR_PC,
                    certificate={"near_pc": tuple(near_pc), "missed_point": missed},
                )
            )
    else:
        if v > pencil_threshold(k):
            verdicts.append(
                Verdict(
                    NOT_SILVER,
                    reason=PENCIL_THRESHOLD,
                    certificate={"v": v, "threshold": pencil_threshold(k)},
                )
            )
    return verdicts
