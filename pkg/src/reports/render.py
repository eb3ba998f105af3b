"""Human-readable rendering of reports. Uses only what the structured report holds."""

from typing import List

from src.reports.models import (
    BettiEntry,
    BettiPayload,
    ChordalPayload,
    DecompositionPayload,
    ErrorPayload,
    FactorCount,
    FlagifyPayload,
    HiltonMilnorPayload,
    InfoPayload,
    LoopspacePayload,
    Report,
    VerifyPayload,
)


def _face(face) -> str:
    return "{" + ",".join(map(str, face)) + "}"


def _betti_line(entries: List[BettiEntry]) -> str:
    return ", ".join(f"b{e.degree}={e.rank}" for e in entries) or "(all zero)"


def _counts(counts: List[FactorCount]) -> List[str]:
    lines = []
    for c in counts:
        name = f"S^{c.sphere_dim}" if c.kind == "sphere" else f"ΩS^{c.sphere_dim}"
        lines.append(f"  {name} × {c.count}")
    return lines


def _info(p: InfoPayload) -> List[str]:
    lines = [
        f"f-vector: {p.f_vector}",
        f"facets: {' '.join(_face(f) for f in p.facets) or '(none)'}",
        f"missing faces: {' '.join(_face(f) for f in p.missing_faces) or '(none)'}",
        f"connected components: {p.connected_components}",
    ]
    if p.flag_witness:
        lines.append(f"not flag: missing face {_face(p.flag_witness)}")
    return lines


def _flagify(p: FlagifyPayload) -> List[str]:
    lines = [f"added faces: {' '.join(_face(f) for f in p.added_faces) or '(none, already flag)'}"]
    lines.append(f"flag complex facets: {' '.join(_face(f) for f in p.flag_complex.facets) or '(none)'}")
    if p.delooping:
        reason = f" ({p.delooping_reason})" if p.delooping_reason else ""
        lines.append(f"flagification map after looping: {p.delooping}{reason}")
    if p.output_path:
        lines.append(f"written to {p.output_path}")
    return lines


def _chordal(p: ChordalPayload) -> List[str]:
    if p.chordal:
        return ["chordal: yes", f"perfect elimination ordering: {tuple(p.ordering)}"]
    return ["chordal: no", f"chordless cycle: {tuple(p.cycle)}"]


def _decomposition(p: DecompositionPayload) -> List[str]:
    lines = [f"mode: {p.mode}" + (f" (n = {','.join(map(str, p.dims))})" if p.dims else "")]
    if not p.summands:
        lines.append("contractible: no summands")
    for s in p.summands:
        sphere = f"  S^{s.sphere_dim}" if s.sphere_dim is not None else ""
        lines.append(f"  {s.name} × {s.multiplicity}{sphere}")
    if p.spheres:
        lines.append("spheres: " + ", ".join(f"S^{c.dim}×{c.count}" for c in p.spheres))
    if p.poincare:
        lines.append("Poincaré polynomial: " + " + ".join(
            str(t.coefficient) if t.exponent == 0 else f"{t.coefficient}t^{t.exponent}" for t in p.poincare
        ))
    for assumption in p.assumptions:
        lines.append(f"assumes: {assumption}")
    lines.append(f"subsets scanned: {p.subsets_scanned} ({p.zero_multiplicity} with c = 0)")
    return lines


def _betti(p: BettiPayload) -> List[str]:
    return [f"n = {','.join(map(str, p.dims))}", f"Betti numbers: {_betti_line(p.ranks)}"]


def _verify(p: VerifyPayload) -> List[str]:
    lines = [f"status: {p.status.upper()}", f"chordal: {'yes' if p.chordal else 'no'}",
             f"Betti oracle: {_betti_line(p.betti)}"]
    if p.wedge_betti is not None:
        lines.append(f"wedge:        {_betti_line(p.wedge_betti)}")
    if p.cycle:
        lines.append(f"chordless cycle: {tuple(p.cycle)}")
    if p.witness:
        lines.append(f"H̃^{p.witness.degree}(K_{_face(p.witness.omega)}) has rank {p.witness.rank}")
    if p.witness_betti_degree is not None:
        lines.append(f"Betti witness: b{p.witness_betti_degree}={p.witness_betti_rank}")
    for degree, oracle, wedge in p.mismatches:
        lines.append(f"mismatch in degree {degree}: oracle {oracle}, wedge {wedge}")
    lines.append(p.message)
    return lines


def _hilton_milnor(p: HiltonMilnorPayload) -> List[str]:
    lines = [f"Ω(∨ S^n), n = {','.join(map(str, p.dims))}, up to dimension {p.max_dim}"
             + (" (Hopf split)" if p.split_hopf else "")]
    lines.extend(_counts(p.counts))
    for f in p.factors:
        name = f"S^{f.sphere_dim}" if f.kind == "sphere" else f"ΩS^{f.sphere_dim}"
        lines.append(f"    {f.bracket:<24} {name:<8} {f.annotation}")
    if p.series_check is not None:
        verdict = "passed" if p.series_check.passed else "FAILED"
        lines.append(f"series identity to degree {p.series_check.degree}: {verdict}")
    return lines


def _loopspace(p: LoopspacePayload) -> List[str]:
    lines = [f"ΩZ_K up to dimension {p.max_dim}" + (" (Hopf split)" if p.split_hopf else "")]
    lines.append("wedge letters: " + (", ".join(f"x{l.index}=S^{l.sphere_dim}" for l in p.letters) or "(none)"))
    lines.extend(_counts(p.counts) or ["  (contractible)"])
    lines.append(f"ΩDJ(K) ≃ (S^1)^{p.circle_factors} × ΩZ_K")
    return lines


def _error(p: ErrorPayload) -> List[str]:
    lines = [f"❌ {p.error_type}: {p.message}"]
    if p.certificate:
        lines.append(f"certificate: {tuple(p.certificate)}")
    return lines


RENDERERS = {
    "info": _info,
    "flagify": _flagify,
    "chordal": _chordal,
    "decomposition": _decomposition,
    "betti": _betti,
    "verify": _verify,
    "hilton-milnor": _hilton_milnor,
    "loopspace": _loopspace,
    "error": _error,
}


def render_report(report: Report) -> str:
    lines = []
    if report.input is not None:
        digest = report.input
        where = f"{digest.path}: " if digest.path else ""
        lines.append(
            f"{where}m={digest.m}, {digest.face_count} faces, flag={'yes' if digest.flag else 'no'}, "
            f"chordal={'yes' if digest.chordal else 'no'}"
        )
        if digest.ghost_vertices:
            lines.append(f"ghost vertices: {digest.ghost_vertices}")
    lines.extend(RENDERERS[report.result.kind](report.result))
    return "\n".join(lines) + "\n"
