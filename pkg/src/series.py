"""
Truncated power series with integer coefficients.

Used for Poincaré series bookkeeping: a PoincareSeries with degree D
stores the coefficients of t^0..t^D and all arithmetic is modulo t^{D+1}.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple


@dataclass(frozen=True)
class PoincareSeries:
    coefficients: Tuple[int, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("a series needs at least the constant coefficient")

    @property
    def degree(self) -> int:
        """Truncation degree D."""
        return len(self.coefficients) - 1

    # ── constructors ────────────────────────────────────────────────────────

    @classmethod
    def zero(cls, degree: int) -> "PoincareSeries":
        return cls((0,) * (degree + 1))

    @classmethod
    def one(cls, degree: int) -> "PoincareSeries":
        return cls.monomial(0, degree)

    @classmethod
    def monomial(cls, exponent: int, degree: int, coefficient: int = 1) -> "PoincareSeries":
        coefficients = [0] * (degree + 1)
        if 0 <= exponent <= degree:
            coefficients[exponent] = coefficient
        return cls(tuple(coefficients))

    @classmethod
    def from_terms(cls, terms: Dict[int, int], degree: int) -> "PoincareSeries":
        coefficients = [0] * (degree + 1)
        for exponent, value in terms.items():
            if 0 <= exponent <= degree:
                coefficients[exponent] += value
        return cls(tuple(coefficients))

    @classmethod
    def geometric(cls, step: int, degree: int) -> "PoincareSeries":
        """1 / (1 - t^step)."""
        if step <= 0:
            raise ValueError(f"geometric series needs a positive step, got {step}")
        return cls(tuple(1 if k % step == 0 else 0 for k in range(degree + 1)))

    @classmethod
    def sphere(cls, n: int, degree: int) -> "PoincareSeries":
        """H_*(S^n): 1 + t^n."""
        return cls.one(degree) + cls.monomial(n, degree)

    @classmethod
    def loop_sphere(cls, n: int, degree: int) -> "PoincareSeries":
        """H_*(ΩS^n) = 1 / (1 - t^{n-1}), n >= 2."""
        if n < 2:
            raise ValueError(f"ΩS^n needs n >= 2, got {n}")
        return cls.geometric(n - 1, degree)

    # ── arithmetic ──────────────────────────────────────────────────────────

    def _aligned(self, other: "PoincareSeries") -> int:
        return min(self.degree, other.degree)

    def __add__(self, other: "PoincareSeries") -> "PoincareSeries":
        d = self._aligned(other)
        return PoincareSeries(tuple(a + b for a, b in zip(self.coefficients[: d + 1], other.coefficients[: d + 1])))

    def __sub__(self, other: "PoincareSeries") -> "PoincareSeries":
        d = self._aligned(other)
        return PoincareSeries(tuple(a - b for a, b in zip(self.coefficients[: d + 1], other.coefficients[: d + 1])))

    def __mul__(self, other: "PoincareSeries") -> "PoincareSeries":
        d = self._aligned(other)
        out = [0] * (d + 1)
        for i, a in enumerate(self.coefficients[: d + 1]):
            if a:
                for j in range(d + 1 - i):
                    out[i + j] += a * other.coefficients[j]
        return PoincareSeries(tuple(out))

    def scale(self, k: int) -> "PoincareSeries":
        return PoincareSeries(tuple(k * a for a in self.coefficients))

    def inverse(self) -> "PoincareSeries":
        """Multiplicative inverse; the constant term must be ±1."""
        c0 = self.coefficients[0]
        if c0 not in (1, -1):
            raise ValueError(f"series with constant term {c0} is not invertible over the integers")
        out = [0] * (self.degree + 1)
        out[0] = c0
        for k in range(1, self.degree + 1):
            acc = sum(self.coefficients[i] * out[k - i] for i in range(1, k + 1))
            out[k] = -acc * c0
        return PoincareSeries(tuple(out))

    def truncate(self, degree: int) -> "PoincareSeries":
        if degree > self.degree:
            raise ValueError(f"cannot extend a series known to degree {self.degree} up to {degree}")
        return PoincareSeries(self.coefficients[: degree + 1])

    @staticmethod
    def product(factors: Iterable["PoincareSeries"], degree: int) -> "PoincareSeries":
        result = PoincareSeries.one(degree)
        for factor in factors:
            result = result * factor
        return result

    # ── views ───────────────────────────────────────────────────────────────

    def terms(self) -> Dict[int, int]:
        """Non-zero coefficients by exponent."""
        return {k: c for k, c in enumerate(self.coefficients) if c}

    def differences(self, other: "PoincareSeries") -> List[Tuple[int, int, int]]:
        """(exponent, self, other) for every exponent where the two differ."""
        d = self._aligned(other)
        return [
            (k, a, b)
            for k, (a, b) in enumerate(zip(self.coefficients[: d + 1], other.coefficients[: d + 1]))
            if a != b
        ]

    def __str__(self) -> str:
        parts = []
        for k, c in self.terms().items():
            if k == 0:
                parts.append(str(c))
            else:
                power = "t" if k == 1 else f"t^{k}"
                parts.append(power if c == 1 else f"{c}{power}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O(t^{self.degree + 1})"
