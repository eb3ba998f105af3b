"""
The decomposition rebuilt vertex by vertex along a perfect elimination ordering.

When v is added to the vertices before it, its earlier neighbours form a
clique, so inside any ω of earlier vertices they meet at most one
component. Hence

    components(ω ∪ v) = components(ω) + 1 - [ω meets the earlier neighbours of v]

which fills the component table of every subset without a union-find.
"""

import time
from dataclasses import dataclass
from typing import List, Optional

import structlog

from src.complex.faces import FaceSet, bit
from src.complex.simplicial import SimplicialComplex
from src.decomposition.models import DecompositionStats, SphereAssignment, WedgeDecomposition
from src.decomposition.wedge import build_decomposition, check_dims, require_decomposable

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class AttachmentStep:
    vertex: int
    clique: FaceSet  # the vertex together with its earlier neighbours


def clique_attachment_sequence(K: SimplicialComplex) -> List[AttachmentStep]:
    """Simplices σ_v = {v} ∪ (earlier neighbours of v), in elimination order. Their union is K."""
    ordering = require_decomposable(K)
    steps = []
    for v in ordering.order:
        p = K.position(v)
        earlier = [u for u in K.face_labels(K.adjacency[p]) if ordering.rank[u] < ordering.rank[v]]
        steps.append(AttachmentStep(vertex=v, clique=tuple(sorted(earlier + [v]))))
    return steps


def decompose_by_elimination(
    K: SimplicialComplex, dims: Optional[SphereAssignment] = None, symbol: str = "Y"
) -> WedgeDecomposition:
    """Same summands as decompose(K, dims), computed along the elimination ordering."""
    check_dims(K, dims)
    ordering = require_decomposable(K)
    started = time.perf_counter()

    # index i refers to the i-th vertex of the ordering
    m = K.m
    ground_position = [K.position(v) for v in ordering.order]
    earlier = [0] * m
    for i, v in enumerate(ordering.order):
        for u in K.face_labels(K.adjacency[ground_position[i]]):
            j = ordering.rank[u]
            if j < i:
                earlier[i] |= bit(j)

    components = bytearray(1 << m)
    ground_mask = [0] * (1 << m)
    for mask in range(1, 1 << m):
        top = mask.bit_length() - 1
        rest = mask ^ bit(top)
        components[mask] = components[rest] + (0 if rest & earlier[top] else 1)
        ground_mask[mask] = ground_mask[rest] | bit(ground_position[top])

    stats = DecompositionStats(method="elimination")
    counts = ((ground_mask[mask], components[mask]) for mask in range(1, 1 << m))
    decomposition = build_decomposition(K, counts, dims, symbol, stats)
    stats.duration_seconds = time.perf_counter() - started

    logger.info(
        "elimination_decomposition_completed",
        m=m,
        order=list(ordering.order),
        summands=len(decomposition.summands),
    )
    return decomposition
