"""
Augmented simplicial chain complex with exact boundary matrices.

C_k is spanned by the faces with k+1 vertices, so C_{-1} is spanned by the
empty face. Faces are oriented by increasing position and

    ∂[p0 < ... < pk] = Σ_i (-1)^i [p0 .. p̂i .. pk].
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Tuple

import structlog
from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from src.complex.faces import bit, positions
from src.complex.simplicial import SimplicialComplex
from src.errors import OracleInconsistencyError

logger = structlog.get_logger(__name__)


@dataclass
class BoundaryMatrix:
    """∂_k : C_k -> C_{k-1}; rows are (k-1)-faces, columns k-faces."""
    degree: int
    rows: Tuple[int, ...]
    cols: Tuple[int, ...]
    matrix: DomainMatrix

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), len(self.cols)

    @property
    def is_empty(self) -> bool:
        return not self.rows or not self.cols

    @cached_property
    def rank(self) -> int:
        if self.is_empty:
            return 0
        return self.matrix.to_field().rank()


def chain_groups(K: SimplicialComplex) -> Dict[int, List[int]]:
    """Face masks by degree k = |face| - 1, each list in canonical order."""
    groups: Dict[int, List[int]] = {}
    for f in K.sorted_faces:
        groups.setdefault(f.bit_count() - 1, []).append(f)
    return groups


def boundary_matrix(degree: int, rows: List[int], cols: List[int]) -> BoundaryMatrix:
    row_index = {f: i for i, f in enumerate(rows)}
    entries: Dict[int, Dict[int, object]] = {}
    for j, face in enumerate(cols):
        for sign_index, p in enumerate(positions(face)):
            i = row_index[face & ~bit(p)]
            entries.setdefault(i, {})[j] = ZZ(-1) if sign_index % 2 else ZZ(1)
    matrix = DomainMatrix(entries, (len(rows), len(cols)), ZZ)
    return BoundaryMatrix(degree, tuple(rows), tuple(cols), matrix)


def boundary_matrices(K: SimplicialComplex) -> Dict[int, BoundaryMatrix]:
    """∂_k for k = 0 .. dim K (∂_0 sends every vertex to the empty face)."""
    groups = chain_groups(K)
    return {
        k: boundary_matrix(k, groups.get(k - 1, []), groups[k])
        for k in sorted(groups)
        if k >= 0
    }


def check_boundary_squared(matrices: Dict[int, BoundaryMatrix]) -> None:
    """
    Raises:
        OracleInconsistencyError: ∂_{k} ∘ ∂_{k+1} is not zero for some k
    """
    for k, lower in matrices.items():
        upper = matrices.get(k + 1)
        if upper is None or lower.is_empty or upper.is_empty:
            continue
        if not (lower.matrix * upper.matrix).is_zero_matrix:
            logger.error("boundary_squared_nonzero", degree=k)
            raise OracleInconsistencyError(f"∂_{k} ∘ ∂_{k + 1} is not zero")
