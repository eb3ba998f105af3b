"""
Betti numbers: reduced ranks of complexes, and the additive Betti numbers of
polyhedral products (D^n, S^{n-1})^K assembled from full subcomplexes:

    b_j = Σ_{ω ⊆ [m]} rank H̃^{j - 1 - Σ_{i∈ω}(n_i - 1)}(K_ω)

Ranks are over the rationals (torsion is not tracked).
"""

from dataclasses import dataclass, field
from typing import Dict, Iterator, Optional, Tuple

import structlog

from src.complex.faces import bit
from src.complex.operations import full_subcomplex_mask
from src.complex.simplicial import SimplicialComplex, check_enumeration_guard
from src.config import get_config
from src.decomposition.models import SphereAssignment
from src.errors import GhostVertexError, OracleInconsistencyError
from src.homology.chains import boundary_matrices, chain_groups, check_boundary_squared
from src.series import PoincareSeries

logger = structlog.get_logger(__name__)


def _sign(degree: int) -> int:
    return -1 if degree % 2 else 1


@dataclass
class BettiTable:
    """Degree -> rank; only non-zero ranks are stored."""
    ranks: Dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        self.ranks = {d: r for d, r in sorted(self.ranks.items()) if r}

    def __getitem__(self, degree: int) -> int:
        return self.ranks.get(degree, 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, BettiTable):
            return self.ranks == other.ranks
        if isinstance(other, dict):
            return self.ranks == {d: r for d, r in other.items() if r}
        return NotImplemented

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(self.ranks)

    @property
    def total(self) -> int:
        return sum(self.ranks.values())

    @property
    def top_degree(self) -> int:
        return max(self.ranks, default=0)

    def euler_characteristic(self) -> int:
        return sum(_sign(d) * r for d, r in self.ranks.items())

    def as_series(self, degree: Optional[int] = None) -> PoincareSeries:
        return PoincareSeries.from_terms(self.ranks, self.top_degree if degree is None else degree)

    def truncated(self, max_degree: int) -> "BettiTable":
        return BettiTable({d: r for d, r in self.ranks.items() if d <= max_degree})


def _cone_shortcut_enabled() -> bool:
    return get_config().cone_shortcut


def is_cone(K: SimplicialComplex) -> bool:
    """Some vertex lies in every facet."""
    apex = -1
    for facet in K.facet_masks:
        apex &= facet
    return apex != 0


def reduced_betti_table(K: SimplicialComplex, check: bool = True, cone_shortcut: Optional[bool] = None) -> BettiTable:
    """
    All reduced Betti ranks of K, degree -1 included ({∅} has rank 1 there).

    Raises:
        OracleInconsistencyError: ∂∘∂ ≠ 0 or the Euler characteristic check fails
    """
    if cone_shortcut is None:
        cone_shortcut = _cone_shortcut_enabled()
    if cone_shortcut and is_cone(K):
        return BettiTable()

    groups = chain_groups(K)
    matrices = boundary_matrices(K)
    if check:
        check_boundary_squared(matrices)

    ranks = {}
    for k, faces in groups.items():
        lower = matrices[k].rank if k in matrices else 0
        upper = matrices[k + 1].rank if k + 1 in matrices else 0
        ranks[k] = len(faces) - lower - upper

    table = BettiTable(ranks)
    if check:
        chain_euler = sum(_sign(k) * len(faces) for k, faces in groups.items())
        if chain_euler != table.euler_characteristic():
            logger.error("euler_characteristic_mismatch", chains=chain_euler, betti=table.euler_characteristic())
            raise OracleInconsistencyError(
                f"Euler characteristic mismatch: faces give {chain_euler}, ranks give {table.euler_characteristic()}"
            )
    return table


def reduced_betti(K: SimplicialComplex, i: int) -> int:
    return reduced_betti_table(K)[i]


def full_subcomplex_tables(K: SimplicialComplex) -> Iterator[Tuple[int, BettiTable]]:
    """(ω mask, reduced Betti table of K_ω) for every ω ⊆ [m], the empty set included."""
    cone_shortcut = _cone_shortcut_enabled()
    for mask in range(1 << K.m):
        yield mask, reduced_betti_table(full_subcomplex_mask(K, mask), cone_shortcut=cone_shortcut)


def require_oracle_input(K: SimplicialComplex, max_vertices: Optional[int]) -> None:
    if max_vertices is None:
        max_vertices = get_config().oracle_max_vertices
    check_enumeration_guard(K.m, max_vertices, what="homology oracle")
    if K.ghost_vertices:
        raise GhostVertexError(K.ghost_vertices)


def betti_polyhedral(
    K: SimplicialComplex, dims: SphereAssignment, max_vertices: Optional[int] = None
) -> BettiTable:
    """
    Betti numbers of (D^n, S^{n-1})^K for the sphere assignment dims.

    Raises:
        GhostVertexError: K has ghost vertices
        EnumerationGuardError: m exceeds the oracle guard
    """
    require_oracle_input(K, max_vertices)
    if len(dims) != K.m:
        raise ValueError(f"sphere assignment has {len(dims)} entries but the complex has {K.m} vertices")

    totals: Dict[int, int] = {}
    for mask, table in full_subcomplex_tables(K):
        shift = 1 + sum(dims.dims[p] - 1 for p in range(K.m) if mask & bit(p))
        for degree, rank in table.ranks.items():
            totals[degree + shift] = totals.get(degree + shift, 0) + rank

    result = BettiTable(totals)
    logger.info("betti_computed", m=K.m, moment_angle=dims.is_moment_angle, ranks=result.ranks)
    return result


def betti_zk(K: SimplicialComplex, max_vertices: Optional[int] = None) -> BettiTable:
    """Betti numbers of the moment-angle complex Z_K = (D², S¹)^K."""
    return betti_polyhedral(K, SphereAssignment.moment_angle(K.m), max_vertices=max_vertices)
