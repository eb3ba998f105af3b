"""
Subcommand handlers.

Each handler takes the parsed arguments and returns a CommandResult; errors
propagate as PolyflagError subclasses and are mapped to exit codes by
src.cli.main.
"""

from dataclasses import dataclass
from typing import List, Optional

import structlog

from src.chordal.certificates import is_chordal
from src.complex.io import load_complex, save_complex
from src.complex.operations import skeleton_graph
from src.complex.simplicial import SimplicialComplex
from src.config import Config
from src.decomposition.elimination import decompose_by_elimination
from src.decomposition.models import SphereAssignment
from src.decomposition.wedge import decompose
from src.errors import OracleInconsistencyError
from src.flag.flagify import delooping_certificate, flagify
from src.homology.betti import betti_polyhedral
from src.homology.verification import STATUS_FAIL, STATUS_NOT_CO_H, verify_decomposition
from src.loopspace.factors import hm_factors, series_identity_check, split_hopf
from src.loopspace.moment_angle import loop_zk_factors
from src.reports import payloads
from src.reports.models import InputDigest, Payload

logger = structlog.get_logger(__name__)

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


@dataclass
class CommandResult:
    payload: Payload
    digest: Optional[InputDigest] = None
    exit_code: int = EXIT_OK


@dataclass
class Context:
    config: Config
    max_vertices: Optional[int] = None  # --max-vertices override for every guard
    digest: Optional[InputDigest] = None

    @property
    def core_guard(self) -> int:
        return self.max_vertices if self.max_vertices is not None else self.config.max_vertices

    @property
    def oracle_guard(self) -> int:
        return self.max_vertices if self.max_vertices is not None else self.config.oracle_max_vertices


def _load(args, ctx: Context) -> SimplicialComplex:
    K = load_complex(args.file, max_vertices=ctx.core_guard)
    ctx.digest = payloads.input_digest(K, args.file)
    return K


def parse_dims(text: str, m: Optional[int] = None) -> SphereAssignment:
    dims = SphereAssignment.from_string(text)
    if m is not None and len(dims) != m:
        raise ValueError(f"--spheres needs {m} entries (one per vertex), got {len(dims)}")
    return dims


def parse_pairs(tokens: List[str], m: int) -> Optional[SphereAssignment]:
    """--pairs moment-angle | spheres n1,...,nm | symbolic"""
    mode = tokens[0]
    if mode == "moment-angle" and len(tokens) == 1:
        return SphereAssignment.moment_angle(m)
    if mode == "symbolic" and len(tokens) == 1:
        return None
    if mode == "spheres" and len(tokens) == 2:
        return parse_dims(tokens[1], m)
    raise ValueError(f"--pairs expects 'moment-angle', 'symbolic' or 'spheres n1,...,nm', got {' '.join(tokens)!r}")


def cmd_info(args, ctx: Context) -> CommandResult:
    K = _load(args, ctx)
    return CommandResult(payloads.info_payload(K), ctx.digest)


def cmd_flagify(args, ctx: Context) -> CommandResult:
    K = _load(args, ctx)
    result = flagify(K)
    output_path = None
    if args.out:
        output_path = str(save_complex(result.flag_complex, args.out))
    payload = payloads.flagify_payload(result, delooping_certificate(K), output_path)
    return CommandResult(payload, ctx.digest)


def cmd_chordal(args, ctx: Context) -> CommandResult:
    K = _load(args, ctx)
    return CommandResult(payloads.chordal_payload(is_chordal(skeleton_graph(K))), ctx.digest)


def cmd_decompose(args, ctx: Context) -> CommandResult:
    K = _load(args, ctx)
    dims = parse_pairs(args.pairs, K.m)
    if args.method == "elimination":
        decomposition = decompose_by_elimination(K, dims)
    else:
        decomposition = decompose(K, dims)
    return CommandResult(payloads.decomposition_payload(decomposition), ctx.digest)


def cmd_betti(args, ctx: Context) -> CommandResult:
    K = _load(args, ctx)
    dims = parse_dims(args.spheres, K.m) if args.spheres else SphereAssignment.moment_angle(K.m)
    table = betti_polyhedral(K, dims, max_vertices=ctx.oracle_guard)
    return CommandResult(payloads.betti_payload(table, dims.dims, args.max_degree), ctx.digest)


def cmd_verify(args, ctx: Context) -> CommandResult:
    K = _load(args, ctx)
    report = verify_decomposition(K, max_vertices=ctx.oracle_guard)
    exit_code = EXIT_OK
    if report.status == STATUS_NOT_CO_H:
        exit_code = EXIT_REJECTED
    elif report.status == STATUS_FAIL:
        exit_code = EXIT_INTERNAL
    return CommandResult(payloads.verify_payload(report), ctx.digest, exit_code)


def cmd_hilton_milnor(args, ctx: Context) -> CommandResult:
    dims = parse_dims(args.spheres).dims
    max_dim = args.max_dim or ctx.config.default_max_dim
    factors = hm_factors(dims, max_dim)
    if args.split_hopf:
        factors = split_hopf(factors)

    check = None
    if args.check_series:
        check = series_identity_check(dims, max_dim, split=args.split_hopf)
        if not check.passed:
            raise OracleInconsistencyError(
                f"Hilton–Milnor series identity fails for n = {list(dims)}: {check.residual[:3]}"
            )
    payload = payloads.hilton_milnor_payload(dims, max_dim, factors, args.split_hopf, check)
    return CommandResult(payload)


def cmd_loopspace(args, ctx: Context) -> CommandResult:
    K = _load(args, ctx)
    max_dim = args.max_dim or ctx.config.default_max_dim
    result = loop_zk_factors(K, max_dim, split_hopf=args.split_hopf)
    return CommandResult(payloads.loopspace_payload(result), ctx.digest)


COMMANDS = {
    "info": cmd_info,
    "flagify": cmd_flagify,
    "chordal": cmd_chordal,
    "decompose": cmd_decompose,
    "betti": cmd_betti,
    "verify": cmd_verify,
    "hilton-milnor": cmd_hilton_milnor,
    "loopspace": cmd_loopspace,
}
