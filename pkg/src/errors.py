"""
Exception hierarchy for polyflag.

The CLI maps these onto exit codes:
    MathematicalRejection / GhostVertexError  -> 1
    input, parse and guard errors            -> 2
    OracleInconsistencyError                 -> 3
"""

from typing import Any, Optional, Sequence


class PolyflagError(Exception):
    """Base class for all polyflag errors."""


class ComplexFormatError(PolyflagError):
    """A complex file could not be parsed."""

    def __init__(self, message: str, line_number: Optional[int] = None, source: Optional[str] = None):
        self.line_number = line_number
        self.source = source
        where = ""
        if source:
            where += f"{source}"
        if line_number is not None:
            where += f"{':' if where else 'line '}{line_number}"
        super().__init__(f"{where}: {message}" if where else message)


class VertexRangeError(PolyflagError, ValueError):
    """A vertex index lies outside the ground set."""


class EnumerationGuardError(PolyflagError):
    """The ground set exceeds the configured enumeration guard."""

    def __init__(self, m: int, limit: int, what: str = "core operations"):
        self.m = m
        self.limit = limit
        super().__init__(
            f"ground set of size {m} exceeds the {what} guard of {limit} vertices "
            f"(raise it with --max-vertices or POLYFLAG_MAX_VERTICES)"
        )


class GroundSetMismatchError(PolyflagError, ValueError):
    """Two complexes that must share a ground set do not."""


class GhostVertexError(PolyflagError):
    """The operation needs a complex on the vertex set [m] (no ghost vertices)."""

    def __init__(self, ghosts: Sequence[int]):
        self.ghosts = tuple(ghosts)
        super().__init__(f"complex has ghost vertices {list(self.ghosts)}")


class MathematicalRejection(PolyflagError):
    """Well-formed input that is not flag or not chordal; carries the witness."""

    def __init__(self, message: str, certificate: Any = None):
        self.certificate = certificate
        super().__init__(message)


class NotFlagError(MathematicalRejection):
    """The complex has a missing face with three or more vertices."""

    def __init__(self, witness: Sequence[int]):
        self.witness = tuple(witness)
        super().__init__(f"complex is not flag: missing face {list(self.witness)}", certificate=self.witness)


class NotChordalError(MathematicalRejection):
    """The 1-skeleton contains a chordless cycle of length at least four."""

    def __init__(self, certificate):
        super().__init__(
            f"1-skeleton is not chordal: chordless cycle {list(certificate.cycle)}; "
            f"the polyhedral product is not a co-H-space",
            certificate=certificate,
        )


class OracleInconsistencyError(PolyflagError):
    """An internal cross-check failed (d∘d, Euler characteristic, series identity...)."""


class InvalidOrderingError(PolyflagError, ValueError):
    """An elimination ordering is not a permutation of the graph's vertices."""
