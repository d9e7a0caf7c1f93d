"""Independent reference implementations used to check the search code.

These deliberately share no machinery with the library: the coloring
oracle backtracks over proper colorings in plain vertex-id order with no
constraint propagation and checks the rainbow condition only on complete
colorings. Colorings are enumerated one representative per color
permutation (a fresh color must be the smallest unused one), which is
sound because silverness is invariant under permuting colors;
test_plain_and_canonical_enumeration_agree cross-checks the restriction
against the unrestricted enumeration on the smallest instances.
"""

from itertools import combinations


def brute_force_silver(g, ind, canonical=True):
    """Does some proper (r+1)-coloring make every vertex of ind rainbow?"""
    r = g.regular_degree()
    ncolors = r + 1
    colors = [-1] * g.n
    members = set(ind.vertices)

    def leaf_ok():
        for x in members:
            seen = {colors[x]}
            seen.update(colors[u] for u in g.neighbors(x))
            if len(seen) != ncolors:
                return False
        return True

    def rec(u, used):
        if u == g.n:
            return leaf_ok()
        limit = min(used + 1, ncolors) if canonical else ncolors
        for c in range(limit):
            if any(colors[w] == c for w in g.neighbors(u) if w < u):
                continue
            colors[u] = c
            if rec(u + 1, max(used, c + 1)):
                return True
            colors[u] = -1
        return False

    return rec(0, 0)


def brute_force_mis_size(g):
    """Largest independent set by scanning all subsets, largest first."""
    for size in range(g.n, -1, -1):
        for combo in combinations(range(g.n), size):
            if all(not g.has_edge(u, v) for u, v in combinations(combo, 2)):
                return size
    return 0


def brute_force_independent_sets(g, size):
    """All independent sets of the given size, lexicographic."""
    return [
        combo
        for combo in combinations(range(g.n), size)
        if all(not g.has_edge(u, v) for u, v in combinations(combo, 2))
    ]


def pair_coverage(v, blocks):
    cover = {}
    for blk in blocks:
        for p in combinations(sorted(blk), 2):
            cover[p] = cover.get(p, 0) + 1
    return cover
