from src.homology.betti import (
    BettiTable,
    betti_polyhedral,
    betti_zk,
    is_cone,
    reduced_betti,
    reduced_betti_table,
)
from src.homology.chains import BoundaryMatrix, boundary_matrices, check_boundary_squared
from src.homology.verification import HomologyWitness, VerificationReport, verify_decomposition

__all__ = [
    "BettiTable",
    "BoundaryMatrix",
    "HomologyWitness",
    "VerificationReport",
    "betti_polyhedral",
    "betti_zk",
    "boundary_matrices",
    "check_boundary_squared",
    "is_cone",
    "reduced_betti",
    "reduced_betti_table",
    "verify_decomposition",
]
