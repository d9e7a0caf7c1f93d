"""Steiner 2-designs, their block intersection graphs, and silver colorings."""

from .big import Graph, SRGParams, SRGReport, build_big, expected_srg, verify_srg
from .decider import (
    DEFAULT_DECIDE_BUDGET,
    SAT,
    UNSAT,
    DecideResult,
    TripleCertificate,
    decide_silver,
    decide_silver_any,
    decide_silver_for_set,
    find_triple_certificate,
)
from .designs import (
    DEFAULT_COVER_BUDGET,
    Design,
    DesignReport,
    PointMap,
    ProductOutput,
    Resolution,
    STS_VARIANTS,
    TRADE_T1,
    TRADE_T2,
    find_parallel_class,
    make_affine_plane,
    make_kts,
    make_projective_plane,
    make_sts,
    product_design,
    verify_design,
)
from .independence import (
    DEFAULT_SEARCH_BUDGET,
    IndependentSet,
    PencilReport,
    classify_alpha_g0,
    enumerate_alpha_sets,
    is_independent,
    max_independent_set,
    pencil,
    xi_census,
)
from .silver import (
    EXHAUSTIVE,
    INDEPENDENCE_BOUND,
    NEAR_PC,
    NOT_SILVER,
    PC_DIVISIBILITY,
    PENCIL_THRESHOLD,
    SILVER,
    TRIPLE_CERT,
    UNKNOWN,
    Coloring,
    Verdict,
    construct_silver_canonical,
    is_proper,
    is_silver,
    pencil_threshold,
    rainbow_vertices,
    screen,
    silver_alpha_bound,
)

__version__ = "0.1.0"
