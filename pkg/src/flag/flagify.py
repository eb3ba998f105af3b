"""
Flagification: the smallest flag complex on the same ground set containing K.

K^f is the clique complex of the 1-skeleton of K. Ghost vertices of K stay
ghost vertices of K^f.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import structlog

from src.chordal.certificates import ChordlessCycleCertificate, is_chordal
from src.complex.builders import clique_masks
from src.complex.faces import FaceSet, face_sort_key
from src.complex.operations import is_flag, skeleton_graph
from src.complex.simplicial import SimplicialComplex
from src.errors import GroundSetMismatchError

logger = structlog.get_logger(__name__)


@dataclass
class FlagificationResult:
    """Result of flagify(K)."""
    source: SimplicialComplex
    flag_complex: SimplicialComplex
    added_faces: List[FaceSet] = field(default_factory=list)

    @property
    def changed(self) -> bool:
        return bool(self.added_faces)


def flag_closure(K: SimplicialComplex) -> SimplicialComplex:
    return SimplicialComplex(K.labels, frozenset(clique_masks(K.adjacency, K.vertex_mask)))


def flagify(K: SimplicialComplex) -> FlagificationResult:
    flag_complex = flag_closure(K)
    added = sorted(flag_complex.faces - K.faces, key=face_sort_key)
    result = FlagificationResult(
        source=K,
        flag_complex=flag_complex,
        added_faces=[K.face_labels(f) for f in added],
    )
    logger.info("flagify_completed", m=K.m, faces=len(K), added=len(added))
    return result


def is_minimal_flag_extension(K: SimplicialComplex, F: SimplicialComplex) -> bool:
    """
    True iff F is flag, contains K, and lies in every flag complex containing K.

    Raises:
        GroundSetMismatchError: K and F live on different ground sets
    """
    if K.labels != F.labels:
        raise GroundSetMismatchError(
            f"ground sets differ: {list(K.labels)} vs {list(F.labels)}"
        )
    if not is_flag(F) or not K.faces <= F.faces:
        return False
    return F.faces == flag_closure(K).faces


@dataclass
class DeloopingCertificate:
    """
    Evidence about whether (CY,Y)^K -> (CY,Y)^{K^f} has a right homotopy
    inverse after looping.

    status is "deloops" with reason "identity" when K is already flag (the
    map is the identity), "deloops" with reason "chordal" when the 1-skeleton
    is chordal, and "undetermined" otherwise. The chordal criterion is
    sufficient only, so a non-flag K with a chordless cycle stays open.
    """
    status: str
    reason: str
    ordering: Optional[Tuple[int, ...]] = None
    cycle: Optional[Tuple[int, ...]] = None


REASON_IDENTITY = "identity"
REASON_CHORDAL = "chordal"
REASON_CHORDLESS_CYCLE = "chordless_cycle"


def delooping_certificate(K: SimplicialComplex) -> DeloopingCertificate:
    certificate = is_chordal(skeleton_graph(K))
    if isinstance(certificate, ChordlessCycleCertificate):
        ordering, cycle = None, certificate.cycle
    else:
        ordering, cycle = certificate.order, None

    if not flagify(K).changed:
        return DeloopingCertificate(status="deloops", reason=REASON_IDENTITY, ordering=ordering, cycle=cycle)
    if cycle is not None:
        return DeloopingCertificate(status="undetermined", reason=REASON_CHORDLESS_CYCLE, cycle=cycle)
    return DeloopingCertificate(status="deloops", reason=REASON_CHORDAL, ordering=ordering)
