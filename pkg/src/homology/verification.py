"""
Cross-check of the wedge decomposition against the Betti oracle.

For flag K the two sides of the equivalence are tested at the additive level:
chordal 1-skeleton <=> every full subcomplex has vanishing H̃^{>=1}.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import structlog

from src.chordal.certificates import ChordlessCycleCertificate, is_chordal
from src.complex.operations import flag_witness, full_subcomplex, skeleton_graph
from src.complex.simplicial import SimplicialComplex
from src.decomposition.models import SphereAssignment, WedgeDecomposition
from src.decomposition.wedge import decompose, poincare_polynomial
from src.errors import NotFlagError, OracleInconsistencyError
from src.homology.betti import (
    BettiTable,
    full_subcomplex_tables,
    reduced_betti,
    require_oracle_input,
)

logger = structlog.get_logger(__name__)

STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_NOT_CO_H = "not_co_h"


@dataclass
class HomologyWitness:
    """A full subcomplex with non-zero reduced homology in degree >= 1."""
    omega: Tuple[int, ...]
    degree: int
    rank: int


@dataclass
class VerificationReport:
    status: str  # "pass", "fail", "not_co_h"
    chordal: bool
    betti: BettiTable
    wedge_betti: Optional[BettiTable] = None
    decomposition: Optional[WedgeDecomposition] = None
    certificate: Optional[ChordlessCycleCertificate] = None
    witness: Optional[HomologyWitness] = None
    witness_betti_degree: Optional[int] = None
    higher_homology: List[HomologyWitness] = field(default_factory=list)
    mismatches: List[Tuple[int, int, int]] = field(default_factory=list)  # (degree, oracle, wedge)
    message: str = ""

    @property
    def passed(self) -> bool:
        return self.status == STATUS_PASS


def verify_decomposition(K: SimplicialComplex, max_vertices: Optional[int] = None) -> VerificationReport:
    """
    Raises:
        NotFlagError: K is not flag
        GhostVertexError: K has ghost vertices
        OracleInconsistencyError: K is not chordal yet the chordless cycle carries no H̃¹
    """
    witness_face = flag_witness(K)
    if witness_face is not None:
        raise NotFlagError(witness_face)
    require_oracle_input(K, max_vertices)

    dims = SphereAssignment.moment_angle(K.m)
    totals = {}
    higher: List[HomologyWitness] = []
    for mask, table in full_subcomplex_tables(K):
        for degree, rank in table.ranks.items():
            j = degree + mask.bit_count() + 1
            totals[j] = totals.get(j, 0) + rank
            if degree >= 1:
                higher.append(HomologyWitness(K.face_labels(mask), degree, rank))
    betti = BettiTable(totals)

    certificate = is_chordal(skeleton_graph(K))
    if isinstance(certificate, ChordlessCycleCertificate):
        omega = tuple(sorted(certificate.cycle))
        rank = reduced_betti(full_subcomplex(K, omega), 1)
        if rank < 1:
            logger.error("cycle_without_homology", cycle=list(certificate.cycle))
            raise OracleInconsistencyError(
                f"chordless cycle {list(certificate.cycle)} spans a full subcomplex with trivial H̃¹"
            )
        witness = HomologyWitness(omega, 1, rank)
        report = VerificationReport(
            status=STATUS_NOT_CO_H,
            chordal=False,
            betti=betti,
            certificate=certificate,
            witness=witness,
            witness_betti_degree=len(omega) + 2,
            higher_homology=higher,
            message=f"not a co-H-space: H̃¹ of K_{list(omega)} has rank {rank}",
        )
        logger.info("verification_completed", status=report.status, m=K.m, cycle=list(certificate.cycle))
        return report

    decomposition = decompose(K, dims)
    wedge_betti = BettiTable(poincare_polynomial(decomposition).terms())
    degrees = sorted(set(betti.ranks) | set(wedge_betti.ranks))
    mismatches = [(d, betti[d], wedge_betti[d]) for d in degrees if betti[d] != wedge_betti[d]]

    failed = bool(mismatches or higher)
    report = VerificationReport(
        status=STATUS_FAIL if failed else STATUS_PASS,
        chordal=True,
        betti=betti,
        wedge_betti=wedge_betti,
        decomposition=decomposition,
        higher_homology=higher,
        mismatches=mismatches,
        message="wedge decomposition disagrees with the Betti oracle" if failed
        else "wedge decomposition matches the Betti oracle",
    )
    log = logger.error if failed else logger.info
    log("verification_completed", status=report.status, m=K.m, mismatches=len(mismatches), higher=len(higher))
    return report
