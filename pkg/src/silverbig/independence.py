"""Exact independence computations: pencils, maximum independent sets,
alpha-set enumeration, and the pencil classification for 0-BIGs."""

from __future__ import annotations

from dataclasses import dataclass

from .big import Graph, build_big

DEFAULT_SEARCH_BUDGET = 10_000_000


@dataclass(frozen=True)
class IndependentSet:
    vertices: tuple[int, ...]

    def __post_init__(self):
        vs = tuple(self.vertices)
        if list(vs) != sorted(set(vs)):
            raise ValueError("vertices must be strictly increasing")
        object.__setattr__(self, "vertices", vs)

    @property
    def size(self) -> int:
        return len(self.vertices)

    def mask(self) -> int:
        m = 0
        for v in self.vertices:
            m |= 1 << v
        return m


def is_independent(g: Graph, vertices) -> bool:
    vs = list(vertices)
    return all(not g.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1 :])


def pencil(design, x: int) -> IndependentSet:
    """All blocks through point x: an independent set of the 0-BIG of
    size (v-1)/(k-1)."""
    if not 0 <= x < design.v:
        raise ValueError(f"point {x} out of range 0..{design.v - 1}")
    return IndependentSet(tuple(i for i, blk in enumerate(design.blocks) if x in blk))


def _greedy_clique_cover(g: Graph, candidates: int) -> int:
    """Number of cliques in a greedy clique cover of the candidate set;
    an upper bound on the independence number within it."""
    cliques: list[int] = []
    m = candidates
    while m:
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        av = g.adj[v]
        for i, c in enumerate(cliques):
            if c & ~av == 0:
                cliques[i] = c | low
                break
        else:
            cliques.append(low)
    return len(cliques)


def max_independent_set(
    g: Graph, budget: int = DEFAULT_SEARCH_BUDGET
) -> tuple[IndependentSet, bool]:
    """Branch-and-bound maximum independent set.

    Branches on the candidate vertex of maximum degree within the
    candidate set (lowest id on ties), include-branch first, pruning
    with a greedy clique-cover bound. Returns the set and an exactness
    flag; the flag is False when the node budget ran out, in which case
    the set is only the best one found.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    best = [0, 0]  # mask, size
    nodes = [0]

    def expand(candidates: int, current: int, size: int) -> bool:
        # returns False once the budget is exhausted
        nodes[0] += 1
        if nodes[0] > budget:
            return False
        if size > best[1]:
            best[0], best[1] = current, size
        if candidates == 0:
            return True
        if size + _greedy_clique_cover(g, candidates) <= best[1]:
            return True
        pick, pick_deg = -1, -1
        m = candidates
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            d = (g.adj[v] & candidates).bit_count()
            if d > pick_deg:
                pick, pick_deg = v, d
        bit = 1 << pick
        if not expand(candidates & ~g.adj[pick] & ~bit, current | bit, size + 1):
            return False
        return expand(candidates & ~bit, current, size)

    exact = expand((1 << g.n) - 1, 0, 0)
    vertices = []
    m = best[0]
    while m:
        low = m & -m
        vertices.append(low.bit_length() - 1)
        m ^= low
    return IndependentSet(tuple(vertices)), exact


def enumerate_alpha_sets(
    g: Graph, alpha: int, budget: int = DEFAULT_SEARCH_BUDGET
) -> tuple[list[IndependentSet], bool]:
    """All independent sets of size alpha, in lexicographic order.

    The caller supplies alpha (normally from max_independent_set).
    Returns (sets, complete); complete is False when the node budget ran
    out and the list may be partial.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    results: list[IndependentSet] = []
    nodes = [0]
    prefix: list[int] = []

    def extend(candidates: int, need: int) -> bool:
        nodes[0] += 1
        if nodes[0] > budget:
            return False
        if need == 0:
            results.append(IndependentSet(tuple(prefix)))
            return True
        if candidates.bit_count() < need:
            return True
        m = candidates
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            if 1 + m.bit_count() < need:
                return True
            prefix.append(v)
            ok = extend(m & ~g.adj[v], need - 1)
            prefix.pop()
            if not ok:
                return False
        return True

    complete = extend((1 << g.n) - 1, alpha)
    return results, complete


@dataclass(frozen=True)
class PencilReport:
    """Whether every alpha-set of a 0-BIG is a pencil; witness is a
    non-pencil alpha-set when one exists. On budget exhaustion exact is
    False and all_pencils is None (unknown)."""

    all_pencils: bool | None
    witness: IndependentSet | None
    alpha: int
    exact: bool


def classify_alpha_g0(design, budget: int = DEFAULT_SEARCH_BUDGET) -> PencilReport:
    """Check whether the alpha-sets of the 0-BIG are exactly the pencils.

    Above the threshold v > k^3 - 2k^2 + 2k this always holds; below it
    a non-pencil witness may exist (e.g. a 7-block subsystem family in
    some 15-point triple systems).
    """
    if design.lam != 1:
        raise ValueError("pencil classification needs lambda = 1")
    g0 = build_big(design, 0)
    mis, exact = max_independent_set(g0, budget)
    if not exact:
        return PencilReport(None, None, mis.size, exact=False)
    sets, complete = enumerate_alpha_sets(g0, mis.size, budget)
    if not complete:
        return PencilReport(None, None, mis.size, exact=False)
    pencils = {pencil(design, x).vertices for x in range(design.v)}
    for s in sets:
        if s.vertices not in pencils:
            return PencilReport(False, s, mis.size, exact=True)
    return PencilReport(True, None, mis.size, exact=True)


def xi_census(g: Graph, ind: IndependentSet) -> dict[int, int]:
    """Partition sizes of V minus I by number of neighbors in I; counts
    of zero are omitted, so an all-vertex I gives an empty census."""
    if not is_independent(g, ind.vertices):
        raise ValueError("census requires an independent set")
    imask = ind.mask()
    census: dict[int, int] = {}
    for u in range(g.n):
        if imask >> u & 1:
            continue
        i = (g.adj[u] & imask).bit_count()
        census[i] = census.get(i, 0) + 1
    return dict(sorted(census.items()))
