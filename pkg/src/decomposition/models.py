"""Result models for wedge decompositions."""

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from src.complex.faces import FaceSet
from src.complex.simplicial import SimplicialComplex


@dataclass(frozen=True)
class SphereAssignment:
    """
    dims[p] = n for the pair (D^n, S^{n-1}) at ground-set position p.

    A smash Y_{i1} ^ ... ^ Y_{ik} of spheres Y_i = S^{n_i - 1}, suspended
    once, is a sphere of dimension 1 + sum (n_i - 1).
    """
    dims: Tuple[int, ...]

    def __post_init__(self):
        bad = [n for n in self.dims if n < 1]
        if bad:
            raise ValueError(f"sphere assignment needs every n_i >= 1, got {list(self.dims)}")

    @classmethod
    def moment_angle(cls, m: int) -> "SphereAssignment":
        return cls((2,) * m)

    @classmethod
    def from_string(cls, text: str) -> "SphereAssignment":
        """Parse "n1,n2,...,nm"."""
        try:
            dims = tuple(int(part) for part in text.split(",") if part.strip())
        except ValueError:
            raise ValueError(f"expected comma-separated integers, got {text!r}") from None
        if not dims:
            raise ValueError("empty sphere assignment")
        return cls(dims)

    def __len__(self) -> int:
        return len(self.dims)

    @property
    def is_moment_angle(self) -> bool:
        return all(n == 2 for n in self.dims)

    def summand_dim(self, positions: Iterable[int]) -> int:
        return 1 + sum(self.dims[p] - 1 for p in positions)


@dataclass(frozen=True)
class WedgeSummand:
    """c(ω) copies of the suspended smash over ω."""
    omega: FaceSet
    multiplicity: int
    name: str
    sphere_dim: Optional[int] = None


@dataclass
class DecompositionStats:
    method: str
    subsets_scanned: int = 0
    zero_multiplicity: int = 0
    duration_seconds: float = 0.0


@dataclass
class WedgeDecomposition:
    complex: SimplicialComplex
    summands: List[WedgeSummand]
    mode: str  # "moment-angle", "spheres", "symbolic"
    dims: Optional[SphereAssignment] = None
    assumptions: List[str] = field(default_factory=list)
    stats: Optional[DecompositionStats] = None

    @property
    def is_contractible(self) -> bool:
        return not self.summands

    @property
    def total_multiplicity(self) -> int:
        return sum(s.multiplicity for s in self.summands)

    def sphere_counts(self) -> Dict[int, int]:
        """Number of wedge spheres per dimension."""
        counts: Counter = Counter()
        for s in self.summands:
            if s.sphere_dim is not None:
                counts[s.sphere_dim] += s.multiplicity
        return dict(sorted(counts.items()))

    def multiplicities(self) -> Dict[FaceSet, int]:
        return {s.omega: s.multiplicity for s in self.summands}

    def same_summands(self, other: "WedgeDecomposition") -> bool:
        return [(s.omega, s.multiplicity, s.sphere_dim) for s in self.summands] == [
            (s.omega, s.multiplicity, s.sphere_dim) for s in other.summands
        ]
