"""Steiner 2-designs: construction, verification, resolutions, and the
affine-plane product construction.

Conventions used throughout:
  * points are 0-based integers 0..v-1,
  * blocks are strictly increasing tuples of point indices,
  * the block list is sorted lexicographically and the block index is the
    position in that list,
  * classical 1-based tables are embedded as printed and shifted down by 1.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from .gf import GF, SUPPORTED_ORDERS
from .independence import IndependentSet
from .silver import Coloring

DEFAULT_COVER_BUDGET = 10_000_000


def _canonical_blocks(blocks) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(tuple(b) for b in blocks))


@dataclass(frozen=True)
class Resolution:
    """A partition of the block indices into parallel classes."""

    classes: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(tuple(c) for c in self.classes))


@dataclass(frozen=True)
class Design:
    """A 2-(v, k, lam) block collection in canonical form.

    Construction enforces structural validity (admissible parameters,
    sorted in-range blocks, resolution shape) but not pair coverage;
    use verify_design for that, so that broken block lists can still be
    represented and reported on.
    """

    v: int
    k: int
    lam: int
    blocks: tuple[tuple[int, ...], ...]
    resolution: Resolution | None = None

    def __post_init__(self):
        v, k, lam = self.v, self.k, self.lam
        if not (2 <= k < v):
            raise ValueError(f"block size k={k} must satisfy 2 <= k < v={v}")
        if lam < 1:
            raise ValueError("lambda must be a positive integer")
        if lam * (v - 1) % (k - 1) or lam * v * (v - 1) % (k * (k - 1)):
            raise ValueError(f"inadmissible parameters 2-({v},{k},{lam})")
        blocks = tuple(tuple(b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        for b in blocks:
            if len(b) != k:
                raise ValueError(f"block {b} does not have size {k}")
            if any(x < 0 or x >= v for x in b) or any(x >= y for x, y in zip(b, b[1:])):
                raise ValueError(f"block {b} is not strictly increasing in 0..{v - 1}")
        if list(blocks) != sorted(blocks):
            raise ValueError("blocks are not in canonical (lexicographic) order")
        if lam == 1 and len(set(blocks)) != len(blocks):
            raise ValueError("duplicate blocks in a lambda=1 design")
        if self.resolution is not None:
            self._check_resolution()

    def _check_resolution(self):
        res = self.resolution
        seen: list[int] = []
        for cls in res.classes:
            pts = sorted(x for i in cls for x in self.blocks[i])
            if pts != list(range(self.v)):
                raise ValueError(f"class {cls} does not partition the point set")
            seen.extend(cls)
        if sorted(seen) != list(range(len(self.blocks))):
            raise ValueError("resolution classes do not partition the block list")
        if len(res.classes) != self.r:
            raise ValueError(
                f"resolution has {len(res.classes)} classes, expected r={self.r}"
            )

    @property
    def b(self) -> int:
        return len(self.blocks)

    @property
    def r(self) -> int:
        """Replication number lam(v-1)/(k-1)."""
        return self.lam * (self.v - 1) // (self.k - 1)

    @classmethod
    def from_block_sets(cls, v, k, lam, blocks, classes=None) -> "Design":
        """Canonicalize unordered blocks (and optional classes given as
        block lists) into a Design with index-based resolution."""
        canon = _canonical_blocks(tuple(sorted(b)) for b in blocks)
        resolution = None
        if classes is not None:
            index = {blk: i for i, blk in enumerate(canon)}
            if len(index) != len(canon):
                raise ValueError("duplicate blocks cannot carry a resolution")
            resolution = Resolution(
                tuple(
                    tuple(sorted(index[tuple(sorted(b))] for b in cl)) for cl in classes
                )
            )
        return cls(v, k, lam, canon, resolution)


@dataclass(frozen=True)
class DesignReport:
    """Output of verify_design: pair-coverage audit plus basic counts."""

    ok: bool
    b: int
    r: int | None
    histogram: dict[int, int]
    violations: tuple[tuple[tuple[int, int], int], ...]


def verify_design(design: Design) -> DesignReport:
    """Check that every point pair is covered exactly lam times.

    The histogram maps coverage multiplicity to the number of pairs with
    that multiplicity; violations lists every pair whose multiplicity is
    not lam.
    """
    counts: Counter = Counter()
    for blk in design.blocks:
        for p in combinations(blk, 2):
            counts[p] += 1
    histogram: Counter = Counter()
    violations = []
    for pair in combinations(range(design.v), 2):
        c = counts.get(pair, 0)
        histogram[c] += 1
        if c != design.lam:
            violations.append((pair, c))
    r = design.lam * (design.v - 1)
    r = r // (design.k - 1) if r % (design.k - 1) == 0 else None
    return DesignReport(
        ok=not violations,
        b=design.b,
        r=r,
        histogram=dict(sorted(histogram.items())),
        violations=tuple(violations),
    )


# ---------------------------------------------------------------------------
# Steiner triple systems


def _sts_bose(v: int) -> Design:
    # v = 3n with n odd; point (x, layer) -> layer*n + x, using the
    # idempotent commutative quasigroup x*y = (x+y)(n+1)/2 mod n
    n = v // 3
    half = (n + 1) // 2

    def op(x, y):
        return ((x + y) * half) % n

    blocks = [tuple(sorted(l * n + x for l in range(3))) for x in range(n)]
    for x in range(n):
        for y in range(x + 1, n):
            for l in range(3):
                blocks.append(
                    tuple(sorted((l * n + x, l * n + y, ((l + 1) % 3) * n + op(x, y))))
                )
    return Design.from_block_sets(v, 3, 1, blocks)


def _sts_skolem(v: int) -> Design:
    # v = 6t+1; points (x, layer) -> layer*2t + x plus one extra point 6t,
    # using the half-idempotent quasigroup on 0..2t-1
    t = v // 6
    n = 2 * t
    extra = 6 * t

    def op(x, y):
        z = (x + y) % n
        return z // 2 if z % 2 == 0 else z // 2 + t

    blocks = [tuple(sorted(l * n + i for l in range(3))) for i in range(t)]
    for i in range(t):
        for l in range(3):
            blocks.append(tuple(sorted((extra, l * n + t + i, ((l + 1) % 3) * n + i))))
    for x in range(n):
        for y in range(x + 1, n):
            for l in range(3):
                blocks.append(
                    tuple(sorted((l * n + x, l * n + y, ((l + 1) % 3) * n + op(x, y))))
                )
    return Design.from_block_sets(v, 3, 1, blocks)


# Base blocks {1,2,5} and {1,3,8} mod 13, shifted to 0-based {0,1,4}, {0,2,7}.
_CYCLIC13_BASES = ((0, 1, 4), (0, 2, 7))

# Interchangeable 4-block trades on the same pair set, 0-based.
TRADE_T1 = ((0, 1, 4), (0, 2, 7), (1, 7, 9), (2, 4, 9))
TRADE_T2 = ((0, 1, 7), (0, 2, 4), (1, 4, 9), (2, 7, 9))


def _sts13_cyclic() -> Design:
    blocks = [
        tuple(sorted((x + d) % 13 for x in base))
        for base in _CYCLIC13_BASES
        for d in range(13)
    ]
    return Design.from_block_sets(13, 3, 1, blocks)


def _sts13_noncyclic() -> Design:
    blocks = set(_sts13_cyclic().blocks)
    blocks.difference_update(TRADE_T1)
    blocks.update(TRADE_T2)
    return Design.from_block_sets(13, 3, 1, blocks)


# The classical 15-schoolgirl arrangement (points 1..15, one class per day),
# embedded as a constant so regression values are stable.
_KIRKMAN15_DAYS = (
    ((1, 2, 3), (4, 8, 12), (5, 10, 15), (6, 11, 13), (7, 9, 14)),
    ((1, 4, 5), (2, 8, 10), (3, 13, 14), (6, 9, 15), (7, 11, 12)),
    ((1, 6, 7), (2, 9, 11), (3, 12, 15), (4, 10, 14), (5, 8, 13)),
    ((1, 8, 9), (2, 12, 14), (3, 5, 6), (4, 11, 15), (7, 10, 13)),
    ((1, 10, 11), (2, 13, 15), (3, 4, 7), (5, 9, 12), (6, 8, 14)),
    ((1, 12, 13), (2, 4, 6), (3, 9, 10), (5, 11, 14), (7, 8, 15)),
    ((1, 14, 15), (2, 5, 7), (3, 8, 11), (4, 9, 13), (6, 10, 12)),
)


def _sts15_kirkman() -> Design:
    classes = [
        [tuple(sorted(x - 1 for x in blk)) for blk in day] for day in _KIRKMAN15_DAYS
    ]
    blocks = [blk for day in classes for blk in day]
    return Design.from_block_sets(15, 3, 1, blocks, classes)


STS_VARIANTS = ("bose", "skolem", "cyclic13", "noncyclic13", "kirkman15")


def make_sts(v: int, variant: str) -> Design:
    """Construct a Steiner triple system on v points.

    bose: v = 3 (mod 6); skolem: v = 1 (mod 6); cyclic13 develops the
    base blocks {0,1,4} and {0,2,7} mod 13; noncyclic13 swaps the four
    TRADE_T1 blocks of cyclic13 for TRADE_T2; kirkman15 is the embedded
    schoolgirl arrangement with its 7-class resolution attached.
    """
    if variant == "bose":
        if v % 6 != 3:
            raise ValueError(f"bose needs v = 3 (mod 6), got {v}")
        return _sts_bose(v)
    if variant == "skolem":
        if v % 6 != 1:
            raise ValueError(f"skolem needs v = 1 (mod 6), got {v}")
        return _sts_skolem(v)
    if variant == "cyclic13":
        if v != 13:
            raise ValueError("cyclic13 is only defined for v=13")
        return _sts13_cyclic()
    if variant == "noncyclic13":
        if v != 13:
            raise ValueError("noncyclic13 is only defined for v=13")
        return _sts13_noncyclic()
    if variant == "kirkman15":
        if v != 15:
            raise ValueError("kirkman15 is only defined for v=15")
        return _sts15_kirkman()
    raise ValueError(f"unknown variant {variant!r}, expected one of {STS_VARIANTS}")


# ---------------------------------------------------------------------------
# Planes


def make_affine_plane(n: int) -> Design:
    """The affine plane AG(2,n): a resolvable 2-(n^2, n, 1) design.

    Point (u, w) in GF(n)^2 gets index u*n + w. Class 0 holds the lines
    of constant second coordinate; class 1 the lines of constant first
    coordinate; the remaining classes take slopes 1, 2, ... in field
    enumeration order (line w = m*u + c).
    """
    if n not in SUPPORTED_ORDERS:
        raise ValueError(f"unsupported plane order {n}")
    F = GF(n)
    classes = []
    classes.append([tuple(u * n + w0 for u in range(n)) for w0 in range(n)])
    classes.append([tuple(sorted(u0 * n + w for w in range(n))) for u0 in range(n)])
    for m in range(1, n):
        classes.append(
            [
                tuple(sorted(u * n + F.add(F.mul(m, u), c) for u in range(n)))
                for c in range(n)
            ]
        )
    blocks = [blk for cl in classes for blk in cl]
    return Design.from_block_sets(n * n, n, 1, blocks, classes)


def make_projective_plane(n: int) -> Design:
    """The projective plane PG(2,n): a symmetric 2-(n^2+n+1, n+1, 1) design.

    Points are the normalized vectors of GF(n)^3 enumerated as (1,a,b),
    then (0,1,c), then (0,0,1); a line is the set of points orthogonal to
    a normalized vector under the standard dot product.
    """
    if n not in SUPPORTED_ORDERS or n == 9:
        raise ValueError(f"unsupported plane order {n}")
    F = GF(n)
    reps = [(1, a, b) for a in range(n) for b in range(n)]
    reps += [(0, 1, c) for c in range(n)]
    reps.append((0, 0, 1))

    def dot(p, q):
        s = 0
        for x, y in zip(p, q):
            s = F.add(s, F.mul(x, y))
        return s

    blocks = [
        tuple(i for i, p in enumerate(reps) if dot(p, line) == 0) for line in reps
    ]
    return Design.from_block_sets(n * n + n + 1, n + 1, 1, blocks)


# ---------------------------------------------------------------------------
# Product construction and Kirkman triple systems


@dataclass(frozen=True)
class PointMap:
    """Bijection between product points (layer, s) and indices layer*v + s."""

    layers: int
    base_points: int

    def index(self, layer: int, s: int) -> int:
        return layer * self.base_points + s

    def pair(self, idx: int) -> tuple[int, int]:
        return divmod(idx, self.base_points)


@dataclass(frozen=True)
class ProductOutput:
    """Product design plus the coloring and independent set that witness
    silverness of its 1-block-intersection graph."""

    design: Design
    coloring: Coloring
    alpha_set: IndependentSet
    point_map: PointMap
    color_legend: dict[int, int | tuple[int, int]] = field(compare=False)


def product_design(plane: Design, base: Design) -> ProductOutput:
    """Compose an affine plane of order k with a resolvable 2-(v,k,1)
    design into a resolvable 2-(kv,k,1) design with a silver 1-BIG.

    Each base block b (points s_0 < ... < s_{k-1}) is blown up through
    every plane line: plane point u*k + w maps to product point
    u*v + s_w. Lines of constant second coordinate (class 0 of the
    plane) all produce the same v "spine" blocks {(0,s),...,(k-1,s)},
    emitted once as the parallel class that doubles as the alpha-set.
    The coloring gives every spine color 0 and gives the image of
    (plane line a, base class beta) a color unique to that pair, so the
    number of colors is 1 + k^2(v-1)/(k-1), one more than the 1-BIG
    degree. The legend maps each color to 0 or to (plane block index,
    beta with 1-based beta).
    """
    k = plane.k
    if plane.v != k * k or plane.lam != 1:
        raise ValueError("first argument must be an affine plane of order k")
    if plane.resolution is None:
        raise ValueError("plane must carry its resolution")
    theta0 = {tuple(range(j, k * k, k)) for j in range(k)}
    class0 = plane.resolution.classes[0]
    if {plane.blocks[i] for i in class0} != theta0:
        raise ValueError("plane class 0 must be the constant-second-coordinate lines")
    if base.k != k or base.lam != 1:
        raise ValueError(f"base design must have block size {k} and lambda 1")
    if base.resolution is None:
        raise ValueError("base design must carry a resolution")

    v = base.v
    nbeta = (v - 1) // (k - 1)
    labelled: dict[tuple[int, ...], tuple[tuple, int]] = {}
    for s in range(v):
        labelled[tuple(l * v + s for l in range(k))] = ((0, 0), 0)

    in_theta0 = set(class0)
    slanted = [i for i in range(plane.b) if i not in in_theta0]
    plane_class = {}
    for alpha, cls in enumerate(plane.resolution.classes):
        for i in cls:
            plane_class[i] = alpha
    for beta0, pclass in enumerate(base.resolution.classes):
        for bidx in pclass:
            blk = base.blocks[bidx]
            for pos, aidx in enumerate(slanted):
                img = tuple(
                    sorted((p // k) * v + blk[p % k] for p in plane.blocks[aidx])
                )
                labelled[img] = ((plane_class[aidx], beta0 + 1), 1 + pos * nbeta + beta0)

    expected_b = v * (k * v - 1) // (k - 1)
    if len(labelled) != expected_b:
        raise RuntimeError("product images collided; inputs are not a plane/RBIBD pair")

    canon = sorted(labelled)
    index = {blk: i for i, blk in enumerate(canon)}
    class_keys = [(0, 0)] + [(a, b) for a in range(1, k + 1) for b in range(1, nbeta + 1)]
    members: dict[tuple, list[int]] = {key: [] for key in class_keys}
    colors = [0] * expected_b
    for blk, (key, color) in labelled.items():
        members[key].append(index[blk])
        colors[index[blk]] = color
    design = Design(
        k * v,
        k,
        1,
        tuple(canon),
        Resolution(tuple(tuple(sorted(members[key])) for key in class_keys)),
    )
    legend: dict[int, int | tuple[int, int]] = {0: 0}
    for pos, aidx in enumerate(slanted):
        for beta0 in range(nbeta):
            legend[1 + pos * nbeta + beta0] = (aidx, beta0 + 1)
    return ProductOutput(
        design=design,
        coloring=Coloring(tuple(colors), 1 + k * k * nbeta),
        alpha_set=IndependentSet(tuple(sorted(members[(0, 0)]))),
        point_map=PointMap(k, v),
        color_legend=legend,
    )


def make_kts(v: int) -> Design:
    """A Kirkman triple system on v points, with resolution attached.

    Base cases are KTS(9) = AG(2,3) and the embedded KTS(15); every
    other reachable v is 3w with KTS(w) reachable, built by the product
    construction with AG(2,3). Reachable orders: 9*3^a and 15*3^a.
    """
    if v == 9:
        return make_affine_plane(3)
    if v == 15:
        return _sts15_kirkman()
    if v % 3 == 0 and (v // 3) % 6 == 3:
        return product_design(make_affine_plane(3), make_kts(v // 3)).design
    raise ValueError(f"no KTS({v}) construction available (need v = 9*3^a or 15*3^a)")


# ---------------------------------------------------------------------------
# Parallel class search


def find_parallel_class(
    design: Design, mode: str = "full", budget: int = DEFAULT_COVER_BUDGET
) -> tuple[tuple[int, ...] | None, bool]:
    """Search for a (near) parallel class by exact-cover backtracking.

    mode "full" covers every point; "near" covers all but one point,
    trying missed points in increasing order. Branches on the lowest
    uncovered point and tries blocks in canonical order, so the result
    is deterministic. Returns (class, True) on success, (None, True)
    when the search completes with no class, and (None, False) when the
    node budget runs out first.
    """
    if mode not in ("full", "near"):
        raise ValueError(f"unknown mode {mode!r}")
    if budget <= 0:
        raise ValueError("budget must be positive")
    masks = [0] * design.b
    by_point: list[list[int]] = [[] for _ in range(design.v)]
    for i, blk in enumerate(design.blocks):
        for x in blk:
            masks[i] |= 1 << x
            by_point[x].append(i)
    full = (1 << design.v) - 1
    nodes = [0]
    chosen: list[int] = []

    def search(covered: int, universe: int) -> bool | None:
        # None propagates budget exhaustion
        nodes[0] += 1
        if nodes[0] > budget:
            return None
        remaining = universe & ~covered
        if remaining == 0:
            return True
        p = (remaining & -remaining).bit_length() - 1
        for i in by_point[p]:
            m = masks[i]
            if m & covered or m & ~universe:
                continue
            chosen.append(i)
            res = search(covered | m, universe)
            if res:
                return True
            chosen.pop()
            if res is None:
                return None
        return False

    targets = [full] if mode == "full" else [full & ~(1 << x) for x in range(design.v)]
    for universe in targets:
        chosen.clear()
        res = search(0, universe)
        if res:
            return tuple(chosen), True
        if res is None:
            return None, False
    return None, True
