"""
Loop space of Z_K for flag K with chordal 1-skeleton.

Z_K is a wedge of spheres S^{d_j}, so ΩZ_K is a product of loops on spheres
by Hilton–Milnor, one letter per wedge sphere. ΩDJ(K) splits off m circles.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import structlog

from src.complex.simplicial import SimplicialComplex
from src.decomposition.models import SphereAssignment, WedgeDecomposition
from src.decomposition.wedge import decompose
from src.errors import OracleInconsistencyError
from src.loopspace.factors import (
    DEFAULT_FACTOR_LIMIT,
    HMFactor,
    enumerate_factors,
    factor_series,
    split_hopf as apply_hopf_split,
    wedge_loop_series,
)
from src.series import PoincareSeries

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class WedgeLetter:
    """One copy of a wedge summand, used as a Hilton–Milnor letter."""
    index: int  # 1-based letter number x_index
    summand: str
    copy: int
    sphere_dim: int


@dataclass
class LoopSpaceDecomposition:
    complex: SimplicialComplex
    decomposition: WedgeDecomposition
    letters: List[WedgeLetter]
    factors: List[HMFactor]
    max_dim: int
    split_hopf: bool = False
    circle_factors: int = 0
    series: Optional[PoincareSeries] = None
    expected_series: Optional[PoincareSeries] = None
    residual: List[Tuple[int, int, int]] = field(default_factory=list)

    @property
    def letter_dims(self) -> Tuple[int, ...]:
        return tuple(letter.sphere_dim for letter in self.letters)


def wedge_letters(decomposition: WedgeDecomposition) -> List[WedgeLetter]:
    letters = []
    for summand in decomposition.summands:
        for copy in range(1, summand.multiplicity + 1):
            letters.append(
                WedgeLetter(
                    index=len(letters) + 1,
                    summand=summand.name,
                    copy=copy,
                    sphere_dim=summand.sphere_dim,
                )
            )
    return letters


def loop_zk_factors(
    K: SimplicialComplex,
    max_dim: int,
    split_hopf: bool = False,
    limit: int = DEFAULT_FACTOR_LIMIT,
) -> LoopSpaceDecomposition:
    """
    Factors of ΩZ_K up to sphere dimension max_dim.

    The product of the factor series is checked against the loop homology
    of the wedge below t^{max_dim}.

    Raises:
        NotFlagError, NotChordalError, GhostVertexError: K is not flag, not chordal, or has ghost vertices
        OracleInconsistencyError: the series check fails
    """
    if max_dim < 1:
        raise ValueError(f"max_dim must be positive, got {max_dim}")
    decomposition = decompose(K, SphereAssignment.moment_angle(K.m))
    letters = wedge_letters(decomposition)
    dims = [letter.sphere_dim for letter in letters]

    factors = enumerate_factors(dims, max_dim, limit)
    if split_hopf:
        factors = apply_hopf_split(factors)

    degree = max(max_dim - 1, 0)
    series = factor_series(factors, degree)
    expected = wedge_loop_series(dims, degree)
    residual = series.differences(expected)
    if residual:
        logger.error("loop_series_mismatch", m=K.m, residual=residual[:5])
        raise OracleInconsistencyError(f"loop-space factors disagree with the wedge series: {residual[:3]}")

    result = LoopSpaceDecomposition(
        complex=K,
        decomposition=decomposition,
        letters=letters,
        factors=factors,
        max_dim=max_dim,
        split_hopf=split_hopf,
        circle_factors=K.m,
        series=series,
        expected_series=expected,
    )
    logger.info("loop_space_factors", m=K.m, letters=len(letters), factors=len(factors), max_dim=max_dim)
    return result
