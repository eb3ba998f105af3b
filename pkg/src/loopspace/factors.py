"""
Hilton–Milnor factors of Ω(S^{n_1} ∨ ... ∨ S^{n_m}).

Each Lyndon word α contributes ΩS^{n(α)} with n(α) = 1 + Σ α_i (n_i - 1).
Truncation is by the target sphere dimension n(α), so letter i carries
weight n_i - 1.
"""

from collections import Counter
from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional, Sequence, Tuple

import structlog

from src.loopspace.lyndon import LieBasisElement, format_bracket, lyndon_bracket, lyndon_words
from src.series import PoincareSeries

logger = structlog.get_logger(__name__)

KIND_LOOP_SPHERE = "loop_sphere"
KIND_SPHERE = "sphere"

HOPF_DIMENSIONS = (2, 4, 8)

DEFAULT_FACTOR_LIMIT = 200_000


@dataclass(frozen=True)
class HMFactor:
    basis_element: LieBasisElement
    sphere_dim: int
    kind: str = KIND_LOOP_SPHERE
    annotation: str = ""

    def label(self) -> str:
        if self.kind == KIND_SPHERE:
            return f"S^{self.sphere_dim}"
        return f"ΩS^{self.sphere_dim}"

    def series(self, degree: int) -> PoincareSeries:
        if self.kind == KIND_SPHERE:
            return PoincareSeries.sphere(self.sphere_dim, degree)
        return PoincareSeries.loop_sphere(self.sphere_dim, degree)


def _annotation(element: LieBasisElement) -> str:
    if element.length == 1:
        return f"Ω(inclusion of x{element.word[0]})"
    return f"Ωw{format_bracket(lyndon_bracket(element.word))}"


def enumerate_factors(dims: Sequence[int], max_dim: int, limit: int = DEFAULT_FACTOR_LIMIT) -> List[HMFactor]:
    """All factors ΩS^{n(α)} with n(α) <= max_dim, by dimension then word."""
    dims = tuple(dims)
    if not dims:
        return []
    if any(n < 2 for n in dims):
        raise ValueError(f"every sphere must have dimension >= 2, got {list(dims)}")
    if max_dim < 2:
        return []
    weights = [n - 1 for n in dims]
    words = lyndon_words(len(dims), max_dim - 1, weights, limit=limit)
    factors = [
        HMFactor(
            basis_element=element,
            sphere_dim=1 + element.weight(weights),
            annotation=_annotation(element),
        )
        for element in words
    ]
    factors.sort(key=lambda f: (f.sphere_dim, f.basis_element.word))
    return factors


def hm_factors(dims: Sequence[int], max_dim: int, limit: int = DEFAULT_FACTOR_LIMIT) -> List[HMFactor]:
    """
    Hilton–Milnor factors of Ω(S^{n_1} ∨ ... ∨ S^{n_m}) up to sphere dimension max_dim.

    Raises:
        ValueError: some n_i < 2, or max_dim < max(n_i)
    """
    dims = tuple(dims)
    if not dims:
        raise ValueError("need at least one sphere")
    if max_dim < max(dims):
        raise ValueError(f"max_dim {max_dim} is below the largest sphere dimension {max(dims)}")
    factors = enumerate_factors(dims, max_dim, limit)
    logger.info("hm_factors_enumerated", dims=list(dims), max_dim=max_dim, factors=len(factors))
    return factors


def split_hopf(factors: Sequence[HMFactor]) -> List[HMFactor]:
    """ΩS^n ≃ S^{n-1} × ΩS^{2n-1} for n in {2, 4, 8}; other factors unchanged."""
    out: List[HMFactor] = []
    for factor in factors:
        if factor.kind == KIND_LOOP_SPHERE and factor.sphere_dim in HOPF_DIMENSIONS:
            n = factor.sphere_dim
            out.append(replace(factor, sphere_dim=n - 1, kind=KIND_SPHERE, annotation=f"{factor.annotation}∘E"))
            out.append(replace(factor, sphere_dim=2 * n - 1, annotation=f"{factor.annotation}∘ΩH"))
        else:
            out.append(factor)
    return out


def factor_series(factors: Sequence[HMFactor], degree: int) -> PoincareSeries:
    return PoincareSeries.product((f.series(degree) for f in factors), degree)


def wedge_loop_series(dims: Sequence[int], degree: int) -> PoincareSeries:
    """H_*(Ω(∨ S^{n_i})) = 1 / (1 - Σ t^{n_i - 1})."""
    denominator = PoincareSeries.one(degree)
    for n in dims:
        denominator = denominator - PoincareSeries.monomial(n - 1, degree)
    return denominator.inverse()


def factor_counts(factors: Sequence[HMFactor]) -> Dict[Tuple[str, int], int]:
    """Multiset of (kind, sphere dimension)."""
    return dict(sorted(Counter((f.kind, f.sphere_dim) for f in factors).items()))


@dataclass
class SeriesCheck:
    passed: bool
    degree: int
    product: PoincareSeries
    expected: PoincareSeries
    residual: List[Tuple[int, int, int]] = field(default_factory=list)


def series_identity_check(dims: Sequence[int], max_dim: int, split: bool = False) -> SeriesCheck:
    """
    ∏_α 1/(1 - t^{n(α)-1}) against 1/(1 - Σ t^{n_i - 1}) modulo t^{max_dim+1}.

    Factors up to sphere dimension max_dim + 1 are exactly those visible
    below t^{max_dim+1}.
    """
    dims = tuple(dims)
    factors = enumerate_factors(dims, max_dim + 1)
    if split:
        factors = split_hopf(factors)
    product = factor_series(factors, max_dim)
    expected = wedge_loop_series(dims, max_dim)
    residual = product.differences(expected)
    check = SeriesCheck(passed=not residual, degree=max_dim, product=product, expected=expected, residual=residual)
    log = logger.info if check.passed else logger.error
    log("series_identity_checked", dims=list(dims), degree=max_dim, passed=check.passed, residual=residual[:5])
    return check
