"""
Wedge decomposition of (CY,Y)^K for flag K with chordal 1-skeleton.

Each ω ⊆ [m] with |ω| >= 2 contributes c(ω) copies of Σ Y_{i1} ^ ... ^ Y_{ik},
where c(ω) is one less than the number of connected components of K_ω.
"""

import time
from typing import Iterable, Optional, Tuple

import structlog

from src.chordal.certificates import ChordlessCycleCertificate, is_chordal
from src.chordal.ordering import EliminationOrdering
from src.complex.builders import discrete
from src.complex.faces import face_sort_key, positions
from src.complex.operations import flag_witness, induced_component_count, skeleton_graph
from src.complex.simplicial import SimplicialComplex
from src.decomposition.models import DecompositionStats, SphereAssignment, WedgeDecomposition, WedgeSummand
from src.errors import GhostVertexError, NotChordalError, NotFlagError, OracleInconsistencyError
from src.series import PoincareSeries

logger = structlog.get_logger(__name__)

SYMBOLIC_ASSUMPTION = "reduced integral cohomology of every Y_i is non-zero"


def require_decomposable(K: SimplicialComplex) -> EliminationOrdering:
    """
    Check the hypotheses of the decomposition and return a perfect elimination ordering.

    Raises:
        GhostVertexError: K has ghost vertices
        NotFlagError: K has a missing face with three or more vertices
        NotChordalError: the 1-skeleton has a chordless cycle
    """
    if K.ghost_vertices:
        logger.error("decomposition_rejected", reason="ghost_vertices", ghosts=list(K.ghost_vertices))
        raise GhostVertexError(K.ghost_vertices)

    witness = flag_witness(K)
    if witness is not None:
        logger.error("decomposition_rejected", reason="not_flag", witness=list(witness))
        raise NotFlagError(witness)

    certificate = is_chordal(skeleton_graph(K))
    if isinstance(certificate, ChordlessCycleCertificate):
        logger.error("decomposition_rejected", reason="not_chordal", cycle=list(certificate.cycle))
        raise NotChordalError(certificate)
    return certificate


def check_dims(K: SimplicialComplex, dims: Optional[SphereAssignment]) -> None:
    if dims is not None and len(dims) != K.m:
        raise ValueError(f"sphere assignment has {len(dims)} entries but the complex has {K.m} vertices")


def summand_name(labels: Iterable[int], symbol: str = "Y") -> str:
    return "S(" + "^".join(f"{symbol}_{label}" for label in labels) + ")"


def build_decomposition(
    K: SimplicialComplex,
    component_counts: Iterable[Tuple[int, int]],
    dims: Optional[SphereAssignment],
    symbol: str,
    stats: DecompositionStats,
) -> WedgeDecomposition:
    """Assemble summands from (ω mask, number of components of K_ω) pairs."""
    summands = []
    for mask, components in component_counts:
        if mask.bit_count() < 2:
            continue
        stats.subsets_scanned += 1
        multiplicity = components - 1
        if multiplicity <= 0:
            stats.zero_multiplicity += 1
            continue
        summands.append((mask, multiplicity))

    summands.sort(key=lambda item: face_sort_key(item[0]))
    if dims is None:
        mode = "symbolic"
    elif dims.is_moment_angle:
        mode = "moment-angle"
    else:
        mode = "spheres"

    return WedgeDecomposition(
        complex=K,
        summands=[
            WedgeSummand(
                omega=K.face_labels(mask),
                multiplicity=multiplicity,
                name=summand_name(K.face_labels(mask), symbol),
                sphere_dim=dims.summand_dim(positions(mask)) if dims is not None else None,
            )
            for mask, multiplicity in summands
        ],
        mode=mode,
        dims=dims,
        assumptions=[SYMBOLIC_ASSUMPTION] if dims is None else [],
        stats=stats,
    )


def decompose(K: SimplicialComplex, dims: Optional[SphereAssignment] = None, symbol: str = "Y") -> WedgeDecomposition:
    """
    Wedge decomposition by scanning every ω ⊆ [m].

    Args:
        K: flag complex with chordal 1-skeleton and no ghost vertices
        dims: sphere assignment; None gives symbolic summands only
        symbol: letter used in summand names

    Raises:
        GhostVertexError, NotFlagError, NotChordalError
    """
    check_dims(K, dims)
    require_decomposable(K)
    started = time.perf_counter()

    stats = DecompositionStats(method="subset-scan")
    full = (1 << K.m) - 1
    counts = ((mask, induced_component_count(K, mask)) for mask in range(1, full + 1))
    decomposition = build_decomposition(K, counts, dims, symbol, stats)
    stats.duration_seconds = time.perf_counter() - started

    logger.info(
        "decomposition_completed",
        m=K.m,
        mode=decomposition.mode,
        summands=len(decomposition.summands),
        subsets_scanned=stats.subsets_scanned,
        zero_multiplicity=stats.zero_multiplicity,
    )
    return decomposition


def porter_decomposition(m: int, dims: Optional[SphereAssignment] = None) -> WedgeDecomposition:
    """
    The m-disjoint-points case: multiplicity k-1 on every k-subset.

    Raises:
        OracleInconsistencyError: decompose disagrees with the closed formula
    """
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    decomposition = decompose(discrete(m), dims, symbol="OX")

    full = (1 << m) - 1
    expected = {
        tuple(p + 1 for p in positions(mask)): mask.bit_count() - 1
        for mask in range(1, full + 1)
        if mask.bit_count() >= 2
    }
    if decomposition.multiplicities() != expected:
        logger.error("porter_mismatch", m=m)
        raise OracleInconsistencyError(f"decomposition of {m} disjoint points disagrees with k-1 multiplicities")
    return decomposition


def poincare_polynomial(
    decomposition: WedgeDecomposition, dims: Optional[SphereAssignment] = None
) -> PoincareSeries:
    """1 + Σ c(ω) t^{dim}; uses the decomposition's own assignment unless dims is given."""
    dims = dims or decomposition.dims
    if dims is None:
        raise ValueError("a sphere assignment is needed for a Poincaré polynomial")
    check_dims(decomposition.complex, dims)

    K = decomposition.complex
    terms = {0: 1}
    for summand in decomposition.summands:
        d = dims.summand_dim(K.position(v) for v in summand.omega)
        terms[d] = terms.get(d, 0) + summand.multiplicity
    return PoincareSeries.from_terms(terms, max(terms))
