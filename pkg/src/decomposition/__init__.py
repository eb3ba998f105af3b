from src.decomposition.elimination import AttachmentStep, clique_attachment_sequence, decompose_by_elimination
from src.decomposition.models import DecompositionStats, SphereAssignment, WedgeDecomposition, WedgeSummand
from src.decomposition.wedge import decompose, poincare_polynomial, porter_decomposition, require_decomposable

__all__ = [
    "AttachmentStep",
    "DecompositionStats",
    "SphereAssignment",
    "WedgeDecomposition",
    "WedgeSummand",
    "clique_attachment_sequence",
    "decompose",
    "decompose_by_elimination",
    "poincare_polynomial",
    "porter_decomposition",
    "require_decomposable",
]
