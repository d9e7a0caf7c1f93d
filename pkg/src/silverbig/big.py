"""Block intersection graphs and strongly-regular parameter checks."""

from __future__ import annotations

from dataclasses import dataclass


class Graph:
    """Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.

    Rows are plain integers so edge tests and common-neighbor counts are
    single AND/popcount operations; fast enough for the few hundred
    vertices these graphs reach.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges=()):
        self.n = n
        self.adj = [0] * n
        for u, v in edges:
            self.add_edge(u, v)

    def add_edge(self, u: int, v: int):
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"bad edge ({u}, {v})")
        self.adj[u] |= 1 << v
        self.adj[v] |= 1 << u

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def neighbors(self, u: int):
        m = self.adj[u]
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def closed_mask(self, u: int) -> int:
        return self.adj[u] | 1 << u

    def edges(self):
        for u in range(self.n):
            m = self.adj[u] >> (u + 1) << (u + 1)
            while m:
                low = m & -m
                yield u, low.bit_length() - 1
                m ^= low

    def edge_count(self) -> int:
        return sum(self.degree(u) for u in range(self.n)) // 2

    def regular_degree(self) -> int | None:
        """Common degree if the graph is regular, else None."""
        if self.n == 0:
            return None
        degs = {self.degree(u) for u in range(self.n)}
        return degs.pop() if len(degs) == 1 else None

    def complement(self) -> "Graph":
        g = Graph(self.n)
        full = (1 << self.n) - 1
        for u in range(self.n):
            g.adj[u] = full & ~self.adj[u] & ~(1 << u)
        return g

    def __eq__(self, other):
        return (
            isinstance(other, Graph) and self.n == other.n and self.adj == other.adj
        )

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count()})"


def build_big(design, i: int) -> Graph:
    """The i-block-intersection graph: one vertex per block, edges between
    blocks sharing exactly i points."""
    if not (0 <= i <= design.k):
        raise ValueError(f"intersection size {i} out of range 0..{design.k}")
    masks = [0] * design.b
    for idx, blk in enumerate(design.blocks):
        for x in blk:
            masks[idx] |= 1 << x
    g = Graph(design.b)
    for u in range(design.b):
        mu = masks[u]
        for v in range(u + 1, design.b):
            if (mu & masks[v]).bit_count() == i:
                g.add_edge(u, v)
    return g


@dataclass(frozen=True)
class SRGParams:
    """Strongly-regular parameters (n, degree, lambda_adj, mu); degenerate
    marks complete or edgeless graphs, which fall outside the definition."""

    n: int
    degree: int
    lambda_adj: int
    mu: int
    degenerate: bool = False


def expected_srg(v: int, k: int, i: int) -> SRGParams:
    """Parameters of the i-BIG of any S(2,k,v), i in {0,1}.

    The 1-BIG is SRG(b, k(r-1), r-2+(k-1)^2, k^2) and the 0-BIG its
    complement SRG(b, b-k(r-1)-1, b-2k(r-1)+k^2-2, b-2kr+k^2+r-1).
    """
    if i not in (0, 1):
        raise ValueError("SRG parameters are defined for i in {0, 1}")
    if not 2 <= k < v or (v - 1) % (k - 1) or v * (v - 1) % (k * (k - 1)):
        raise ValueError(f"inadmissible Steiner parameters (v={v}, k={k})")
    b = v * (v - 1) // (k * (k - 1))
    r = (v - 1) // (k - 1)
    if i == 1:
        deg, lam, mu = k * (r - 1), r - 2 + (k - 1) ** 2, k * k
    else:
        deg = b - k * (r - 1) - 1
        lam = b - 2 * k * (r - 1) + k * k - 2
        mu = b - 2 * k * r + k * k + r - 1
    return SRGParams(b, deg, lam, mu, degenerate=deg in (0, b - 1))


@dataclass(frozen=True)
class SRGReport:
    ok: bool
    counterexample: tuple | None = None


def verify_srg(g: Graph, params: SRGParams) -> SRGReport:
    """Exhaustively check regularity and common-neighbor counts.

    Degenerate parameters only assert completeness/edgelessness. The
    counterexample is (u, v, found, expected) for the first failing pair,
    or ("degree", u, found, expected) for a degree failure.
    """
    if g.n != params.n:
        return SRGReport(False, ("order", g.n, params.n))
    for u in range(g.n):
        if g.degree(u) != params.degree:
            return SRGReport(False, ("degree", u, g.degree(u), params.degree))
    if params.degenerate:
        return SRGReport(True)
    for u in range(g.n):
        au = g.adj[u]
        for v in range(u + 1, g.n):
            common = (au & g.adj[v]).bit_count()
            want = params.lambda_adj if g.has_edge(u, v) else params.mu
            if common != want:
                return SRGReport(False, (u, v, common, want))
    return SRGReport(True)
