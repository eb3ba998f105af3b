"""Domain results -> report payloads."""

from typing import List, Optional, Sequence

from src.chordal.certificates import ChordalityCertificate, ChordlessCycleCertificate, is_chordal
from src.complex.io import to_document
from src.complex.operations import connected_component_count, flag_witness, missing_faces, skeleton_graph
from src.complex.simplicial import SimplicialComplex
from src.decomposition.models import WedgeDecomposition
from src.decomposition.wedge import poincare_polynomial
from src.errors import ComplexFormatError, NotChordalError, NotFlagError
from src.flag.flagify import DeloopingCertificate, FlagificationResult
from src.homology.betti import BettiTable
from src.homology.verification import VerificationReport
from src.loopspace.factors import HMFactor, SeriesCheck, factor_counts
from src.loopspace.lyndon import format_bracket, lyndon_bracket
from src.loopspace.moment_angle import LoopSpaceDecomposition
from src.reports.models import (
    BettiEntry,
    BettiPayload,
    ChordalPayload,
    DecompositionPayload,
    ErrorPayload,
    FactorCount,
    FactorModel,
    FlagifyPayload,
    HiltonMilnorPayload,
    HomologyWitnessModel,
    InfoPayload,
    InputDigest,
    LoopspacePayload,
    SeriesCheckModel,
    SeriesTerm,
    SphereCount,
    SummandModel,
    VerifyPayload,
    WedgeLetterModel,
)


def input_digest(K: SimplicialComplex, path: Optional[str] = None) -> InputDigest:
    flag = flag_witness(K) is None
    chordal = not isinstance(is_chordal(skeleton_graph(K)), ChordlessCycleCertificate)
    return InputDigest(
        path=path,
        m=K.m,
        labels=list(K.labels),
        face_count=len(K),
        facet_count=len(K.facet_masks),
        dimension=K.dimension,
        ghost_vertices=list(K.ghost_vertices),
        flag=flag,
        chordal=chordal,
    )


def info_payload(K: SimplicialComplex) -> InfoPayload:
    witness = flag_witness(K)
    return InfoPayload(
        f_vector=list(K.f_vector()),
        facets=[list(f) for f in K.facets() if f],
        missing_faces=[list(f) for f in missing_faces(K)],
        connected_components=connected_component_count(K),
        flag_witness=list(witness) if witness is not None else None,
    )


def flagify_payload(
    result: FlagificationResult, delooping: DeloopingCertificate, output_path: Optional[str] = None
) -> FlagifyPayload:
    return FlagifyPayload(
        added_faces=[list(f) for f in result.added_faces],
        flag_complex=to_document(result.flag_complex),
        changed=result.changed,
        output_path=output_path,
        delooping=delooping.status,
        delooping_reason=delooping.reason,
    )


def chordal_payload(certificate: ChordalityCertificate) -> ChordalPayload:
    if isinstance(certificate, ChordlessCycleCertificate):
        return ChordalPayload(chordal=False, cycle=list(certificate.cycle))
    return ChordalPayload(chordal=True, ordering=list(certificate.order))


def decomposition_payload(decomposition: WedgeDecomposition) -> DecompositionPayload:
    poincare: List[SeriesTerm] = []
    if decomposition.dims is not None:
        series = poincare_polynomial(decomposition)
        poincare = [SeriesTerm(exponent=k, coefficient=c) for k, c in series.terms().items()]
    stats = decomposition.stats
    return DecompositionPayload(
        mode=decomposition.mode,
        dims=list(decomposition.dims.dims) if decomposition.dims is not None else None,
        summands=[
            SummandModel(omega=list(s.omega), multiplicity=s.multiplicity, name=s.name, sphere_dim=s.sphere_dim)
            for s in decomposition.summands
        ],
        spheres=[SphereCount(dim=d, count=c) for d, c in decomposition.sphere_counts().items()],
        poincare=poincare,
        assumptions=list(decomposition.assumptions),
        subsets_scanned=stats.subsets_scanned if stats else 0,
        zero_multiplicity=stats.zero_multiplicity if stats else 0,
    )


def betti_entries(table: BettiTable) -> List[BettiEntry]:
    return [BettiEntry(degree=d, rank=r) for d, r in table.ranks.items()]


def betti_payload(table: BettiTable, dims: Sequence[int], max_degree: Optional[int] = None) -> BettiPayload:
    if max_degree is not None:
        table = table.truncated(max_degree)
    return BettiPayload(dims=list(dims), ranks=betti_entries(table), max_degree=max_degree)


def verify_payload(report: VerificationReport) -> VerifyPayload:
    witness = report.witness
    return VerifyPayload(
        status=report.status,
        chordal=report.chordal,
        betti=betti_entries(report.betti),
        wedge_betti=betti_entries(report.wedge_betti) if report.wedge_betti is not None else None,
        cycle=list(report.certificate.cycle) if report.certificate is not None else None,
        witness=HomologyWitnessModel(omega=list(witness.omega), degree=witness.degree, rank=witness.rank)
        if witness is not None else None,
        witness_betti_degree=report.witness_betti_degree,
        witness_betti_rank=report.betti[report.witness_betti_degree] if report.witness_betti_degree else None,
        mismatches=[list(m) for m in report.mismatches],
        message=report.message,
    )


def factor_model(factor: HMFactor) -> FactorModel:
    element = factor.basis_element
    return FactorModel(
        word=list(element.word),
        multidegree=list(element.multidegree),
        bracket=format_bracket(lyndon_bracket(element.word)),
        sphere_dim=factor.sphere_dim,
        kind=factor.kind,
        annotation=factor.annotation,
    )


def factor_count_models(factors: Sequence[HMFactor]) -> List[FactorCount]:
    return [FactorCount(kind=k, sphere_dim=d, count=c) for (k, d), c in factor_counts(factors).items()]


def hilton_milnor_payload(
    dims: Sequence[int],
    max_dim: int,
    factors: Sequence[HMFactor],
    split_hopf: bool = False,
    check: Optional[SeriesCheck] = None,
) -> HiltonMilnorPayload:
    return HiltonMilnorPayload(
        dims=list(dims),
        max_dim=max_dim,
        split_hopf=split_hopf,
        factors=[factor_model(f) for f in factors],
        counts=factor_count_models(factors),
        series_check=SeriesCheckModel(
            passed=check.passed,
            degree=check.degree,
            coefficients=list(check.product.coefficients),
            residual=[list(r) for r in check.residual],
        ) if check is not None else None,
    )


def loopspace_payload(result: LoopSpaceDecomposition) -> LoopspacePayload:
    return LoopspacePayload(
        max_dim=result.max_dim,
        split_hopf=result.split_hopf,
        letters=[
            WedgeLetterModel(index=l.index, summand=l.summand, copy_number=l.copy, sphere_dim=l.sphere_dim)
            for l in result.letters
        ],
        factors=[factor_model(f) for f in result.factors],
        counts=factor_count_models(result.factors),
        circle_factors=result.circle_factors,
        series=list(result.series.coefficients) if result.series is not None else [],
    )


def error_payload(error: Exception) -> ErrorPayload:
    certificate = None
    if isinstance(error, NotFlagError):
        certificate = list(error.witness)
    elif isinstance(error, NotChordalError):
        certificate = list(error.certificate.cycle)
    return ErrorPayload(
        error_type=type(error).__name__,
        message=str(error),
        certificate=certificate,
        line_number=error.line_number if isinstance(error, ComplexFormatError) else None,
    )
