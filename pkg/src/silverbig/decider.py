"""Exhaustive decision of silver colorability.

decide_silver searches proper (r+1)-colorings of an r-regular graph
under an alldifferent constraint on the closed neighborhood of every
member of the given independent set (each such neighborhood has exactly
r+1 vertices, so rainbow means the colors are a bijection). Unsat is
claimed only when the search completes; budget exhaustion is a distinct
unknown outcome.

find_triple_certificate implements the counting shortcut: three set
members with no common neighbor whose pairwise common neighborhoods
together exceed r+1 vertices force more colors than exist, since any
two vertices of that union share one of the three rainbow-constrained
neighborhoods.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .big import Graph
from .independence import (
    DEFAULT_SEARCH_BUDGET,
    IndependentSet,
    enumerate_alpha_sets,
    is_independent,
    max_independent_set,
)
from .silver import (
    EXHAUSTIVE,
    NOT_SILVER,
    SILVER,
    TRIPLE_CERT,
    UNKNOWN,
    Coloring,
    Verdict,
    is_proper,
    rainbow_vertices,
)

DEFAULT_DECIDE_BUDGET = 100_000_000

SAT = "sat"
UNSAT = "unsat"


@dataclass(frozen=True)
class DecideResult:
    status: str  # SAT, UNSAT, or silver.UNKNOWN
    coloring: Coloring | None = None
    steps: int = 0


@dataclass(frozen=True)
class TripleCertificate:
    """Unsatisfiability witness: total pairwise common neighbors of three
    mutually rainbow-constrained vertices exceeds the r+1 colors."""

    b1: int
    b2: int
    b3: int
    pairwise_common: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]
    total: int

    def check(self, g: Graph, ind: IndependentSet) -> bool:
        vs = (self.b1, self.b2, self.b3)
        if len(set(vs)) != 3 or any(x not in ind.vertices for x in vs):
            return False
        r = g.regular_degree()
        if r is None:
            return False
        masks = []
        for (x, y) in ((vs[0], vs[1]), (vs[1], vs[2]), (vs[0], vs[2])):
            masks.append(g.adj[x] & g.adj[y])
        if g.adj[vs[0]] & g.adj[vs[1]] & g.adj[vs[2]]:
            return False
        listed = [tuple(_bits(m)) for m in masks]
        if listed != list(self.pairwise_common):
            return False
        total = sum(m.bit_count() for m in masks)
        return total == self.total and total > r + 1


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def find_triple_certificate(g: Graph, ind: IndependentSet) -> TripleCertificate | None:
    """First (lexicographic) triple of set members with empty common
    neighborhood and pairwise common neighborhoods totalling > r+1."""
    r = g.regular_degree()
    if r is None:
        raise ValueError("certificates are defined for regular graphs")
    if not is_independent(g, ind.vertices):
        raise ValueError("certificate search requires an independent set")
    for b1, b2, b3 in combinations(ind.vertices, 3):
        if g.adj[b1] & g.adj[b2] & g.adj[b3]:
            continue
        m12 = g.adj[b1] & g.adj[b2]
        m23 = g.adj[b2] & g.adj[b3]
        m13 = g.adj[b1] & g.adj[b3]
        total = m12.bit_count() + m23.bit_count() + m13.bit_count()
        if total > r + 1:
            return TripleCertificate(
                b1, b2, b3, (tuple(_bits(m12)), tuple(_bits(m23)), tuple(_bits(m13))), total
            )
    return None


def decide_silver(
    g: Graph,
    ind: IndependentSet,
    budget: int = DEFAULT_DECIDE_BUDGET,
    symmetry_break: bool = True,
) -> DecideResult:
    """Complete backtracking search for a silver coloring w.r.t. ind.

    Propagation: assigned colors are removed from the domains of
    neighbors and of co-members of every constrained neighborhood
    (singleton domains cascade), and within each constrained
    neighborhood a color with a single remaining candidate is forced.
    Symmetry breaking pre-colors the closed neighborhood of the
    lowest-id set member 0..r in vertex-id order, which is lossless up
    to color permutation because that neighborhood is rainbow in any
    solution. Variables follow a fixed order (constraint count, degree,
    id, all descending); values ascend. The budget caps propagation
    steps; exhaustion gives status unknown.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    r = g.regular_degree()
    if r is None:
        raise ValueError("silver colorings are defined for regular graphs")
    if not is_independent(g, ind.vertices):
        raise ValueError("decide_silver requires an independent set")
    n = g.n
    ncolors = r + 1
    full = (1 << ncolors) - 1

    hoods = [sorted(_bits(g.closed_mask(x))) for x in ind.vertices]
    hoods_of: list[list[int]] = [[] for _ in range(n)]
    for h, members in enumerate(hoods):
        for u in members:
            hoods_of[u].append(h)

    order = sorted(
        range(n), key=lambda u: (len(hoods_of[u]), g.degree(u), u), reverse=True
    )
    steps = [0]
    co_members = [g.adj[u] for u in range(n)]
    for u in range(n):
        for h in hoods_of[u]:
            for w in hoods[h]:
                co_members[u] |= 1 << w
        co_members[u] &= ~(1 << u)

    def propagate(domains, assigned, queue) -> bool | None:
        """Run assignments to fixpoint; False on contradiction, None on
        budget exhaustion, True otherwise."""
        while True:
            while queue:
                u, c = queue.pop()
                steps[0] += 1
                if steps[0] > budget:
                    return None
                if assigned[u] == c:
                    continue
                bit = 1 << c
                if assigned[u] != -1 or not domains[u] & bit:
                    return False
                assigned[u] = c
                domains[u] = bit
                # c leaves the domain of every neighbor and every
                # co-member of a constrained closed neighborhood
                for w in _bits(co_members[u]):
                    if domains[w] & bit:
                        steps[0] += 1
                        domains[w] &= ~bit
                        if domains[w] == 0:
                            return False
                        if assigned[w] == -1 and domains[w] & (domains[w] - 1) == 0:
                            queue.append((w, domains[w].bit_length() - 1))
            # alldifferent per neighborhood: every color needs exactly one home
            forced = False
            for members in hoods:
                union = 0
                for w in members:
                    union |= domains[w]
                if union != full:
                    return False
                for c in range(ncolors):
                    bit = 1 << c
                    cands = [w for w in members if domains[w] & bit]
                    steps[0] += 1
                    if steps[0] > budget:
                        return None
                    if not cands:
                        return False
                    if len(cands) == 1 and assigned[cands[0]] == -1:
                        queue.append((cands[0], c))
                        forced = True
            if not forced:
                return True

    def search(domains, assigned) -> bool | None:
        pick = next((u for u in order if assigned[u] == -1), None)
        if pick is None:
            return True
        for c in range(ncolors):
            if not domains[pick] >> c & 1:
                continue
            trial_d, trial_a = list(domains), list(assigned)
            res = propagate(trial_d, trial_a, [(pick, c)])
            if res:
                res = search(trial_d, trial_a)
            if res:
                domains[:], assigned[:] = trial_d, trial_a
                return True
            if res is None:
                return None
        return False

    domains = [full] * n
    assigned = [-1] * n
    if ncolors == 1:
        for u in range(n):
            assigned[u] = 0
    seed: list[tuple[int, int]] = []
    if symmetry_break and ind.vertices:
        x0 = ind.vertices[0]
        seed = [(u, c) for c, u in enumerate(sorted(_bits(g.closed_mask(x0))))]
    res = propagate(domains, assigned, seed)
    if res:
        res = search(domains, assigned)
    if res is None:
        return DecideResult(UNKNOWN, steps=steps[0])
    if not res:
        return DecideResult(UNSAT, steps=steps[0])
    coloring = Coloring(tuple(assigned), ncolors)
    if not is_proper(g, coloring):
        raise RuntimeError("search produced an improper coloring")
    if not set(ind.vertices) <= rainbow_vertices(g, coloring):
        raise RuntimeError("search produced a non-silver coloring")
    return DecideResult(SAT, coloring=coloring, steps=steps[0])


def decide_silver_for_set(
    g: Graph,
    ind: IndependentSet,
    budget: int = DEFAULT_DECIDE_BUDGET,
    use_certificate: bool = True,
) -> Verdict:
    """Decide one alpha-set: counting certificate first, then search."""
    if use_certificate:
        cert = find_triple_certificate(g, ind)
        if cert is not None:
            return Verdict(
                NOT_SILVER, reason=TRIPLE_CERT, alpha_set=ind, certificate=cert
            )
    res = decide_silver(g, ind, budget)
    if res.status == SAT:
        return Verdict(SILVER, coloring=res.coloring, alpha_set=ind)
    if res.status == UNSAT:
        return Verdict(NOT_SILVER, reason=EXHAUSTIVE, alpha_set=ind)
    return Verdict(UNKNOWN, alpha_set=ind, budget=budget)


def decide_silver_any(g: Graph, budget: int = DEFAULT_DECIDE_BUDGET) -> Verdict:
    """Decide silverness over all alpha-sets.

    Computes the independence number, enumerates every alpha-set, and
    decides each in turn (certificate, then search). Silver on the first
    satisfiable set; not-silver only when every set is refuted; unknown
    as soon as completeness is lost without a silver witness. The
    certificate field collects the per-set refutations.
    """
    mis, exact = max_independent_set(g, min(budget, DEFAULT_SEARCH_BUDGET))
    if not exact:
        return Verdict(UNKNOWN, budget=budget)
    sets, complete = enumerate_alpha_sets(g, mis.size, min(budget, DEFAULT_SEARCH_BUDGET))
    refutations = []
    for ind in sets:
        verdict = decide_silver_for_set(g, ind, budget)
        if verdict.outcome == SILVER:
            return verdict
        refutations.append(verdict)
    if not complete or any(v.outcome == UNKNOWN for v in refutations):
        return Verdict(UNKNOWN, budget=budget)
    return Verdict(NOT_SILVER, reason=EXHAUSTIVE, certificate=tuple(refutations))
