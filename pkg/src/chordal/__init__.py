from src.chordal.brute_force import find_chordless_cycle_brute_force
from src.chordal.certificates import (
    ChordalityCertificate,
    ChordlessCycleCertificate,
    is_chordal,
    normalize_cycle,
    wedge_retraction_deloops,
)
from src.chordal.ordering import EliminationOrdering, lex_bfs, peo_violations, verify_peo

__all__ = [
    "ChordalityCertificate",
    "ChordlessCycleCertificate",
    "EliminationOrdering",
    "find_chordless_cycle_brute_force",
    "is_chordal",
    "lex_bfs",
    "normalize_cycle",
    "peo_violations",
    "verify_peo",
    "wedge_retraction_deloops",
]
