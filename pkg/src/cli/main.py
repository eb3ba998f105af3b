"""
polyflag command line.

Usage:
    python scripts/polyflag.py info data/corpus/pentagon.scx
    python scripts/polyflag.py decompose data/corpus/three_points.scx --pairs moment-angle
    python scripts/polyflag.py decompose data/corpus/path_3.scx --pairs spheres 3,2,4
    python scripts/polyflag.py verify data/corpus/pentagon.scx --json
    python scripts/polyflag.py hilton-milnor --spheres 2,3 --max-dim 10 --check-series
    python scripts/polyflag.py loopspace data/corpus/path_3.scx --max-dim 16 --split-hopf

Exit codes:
    0  success
    1  mathematical rejection (not flag, not chordal, ghost vertices); certificate printed
    2  I/O, parse or guard error
    3  internal oracle inconsistency
"""

import argparse
import sys
import time
from typing import List, Optional, Sequence, Tuple

import structlog

from src import __version__
from src.cli.commands import (
    COMMANDS,
    EXIT_INPUT,
    EXIT_INTERNAL,
    EXIT_REJECTED,
    CommandResult,
    Context,
)
from src.config import get_config
from src.errors import GhostVertexError, MathematicalRejection, OracleInconsistencyError, PolyflagError
from src.logging_config import bind_command_context, setup_logging
from src.reports import Report, render_report
from src.reports.payloads import error_payload

logger = structlog.get_logger(__name__)


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _global_options(suppress: bool) -> argparse.ArgumentParser:
    # On subparsers the defaults are SUPPRESS so a flag given before the subcommand survives.
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--max-vertices", type=positive_int, default=argparse.SUPPRESS if suppress else None,
                        help="Override both enumeration guards for this run")
    parent.add_argument("--log-level", default=argparse.SUPPRESS if suppress else None,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
                        help="Log level for stderr (default from POLYFLAG_LOG_LEVEL)")
    parent.add_argument("--json", action="store_true", default=argparse.SUPPRESS if suppress else False,
                        help="Print the structured report instead of the human summary")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyflag",
        description="Polyhedral products over flag complexes: flagification, chordality, "
                    "wedge decompositions, Betti numbers and loop-space factors.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=__doc__,
        parents=[_global_options(suppress=False)],
    )
    parser.add_argument("--version", action="version", version=f"polyflag {__version__}")
    common = [_global_options(suppress=True)]
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("info", parents=common, help="Face counts, facets and missing faces")
    p.add_argument("file")

    p = sub.add_parser("flagify", parents=common, help="Minimal flag complex containing K")
    p.add_argument("file")
    p.add_argument("--out", help="Write the flag complex here (.scx or .json)")

    p = sub.add_parser("chordal", parents=common, help="Elimination ordering or chordless cycle of K's 1-skeleton")
    p.add_argument("file")

    p = sub.add_parser("decompose", parents=common, help="Wedge decomposition of (CY,Y)^K")
    p.add_argument("file")
    p.add_argument("--pairs", nargs="+", default=["moment-angle"], metavar="MODE",
                   help="moment-angle | spheres n1,...,nm | symbolic")
    p.add_argument("--method", choices=["scan", "elimination"], default="scan",
                   help="Subset scan or inductive elimination-order construction")

    p = sub.add_parser("betti", parents=common, help="Betti numbers of the polyhedral product")
    p.add_argument("file")
    p.add_argument("--max-degree", type=int, help="Drop degrees above D")
    p.add_argument("--spheres", help="Pairs (D^n, S^(n-1)) as n1,...,nm (default: moment-angle)")

    p = sub.add_parser("verify", parents=common, help="Cross-check the wedge decomposition against homology")
    p.add_argument("file")

    p = sub.add_parser("hilton-milnor", parents=common, help="Loop-space factors of a wedge of spheres")
    p.add_argument("--spheres", required=True, help="Sphere dimensions n1,...,nm")
    p.add_argument("--max-dim", type=int, help="Largest factor sphere dimension (default from POLYFLAG_MAX_DIM)")
    p.add_argument("--split-hopf", action="store_true", help="Split ΩS^n for n in {2,4,8}")
    p.add_argument("--check-series", action="store_true", help="Verify the Poincaré series identity")

    p = sub.add_parser("loopspace", parents=common, help="Loop-space factors of the moment-angle complex")
    p.add_argument("file")
    p.add_argument("--max-dim", type=int, help="Largest factor sphere dimension (default from POLYFLAG_MAX_DIM)")
    p.add_argument("--split-hopf", action="store_true", help="Split ΩS^n for n in {2,4,8}")

    return parser


def _exit_code_for(error: Exception) -> int:
    if isinstance(error, (MathematicalRejection, GhostVertexError)):
        return EXIT_REJECTED
    if isinstance(error, OracleInconsistencyError):
        return EXIT_INTERNAL
    return EXIT_INPUT


def execute(argv: Optional[Sequence[str]] = None) -> Tuple[int, Report]:
    """
    Parse argv, run the subcommand and build its report.

    Argument errors raise SystemExit (argparse's own behaviour); every other
    failure becomes an error report with the matching exit code.
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    config = get_config()
    ctx = Context(config=config, max_vertices=args.max_vertices)
    bind_command_context(args.command, path=getattr(args, "file", None), max_vertices=args.max_vertices)

    start = time.perf_counter()
    try:
        result: CommandResult = COMMANDS[args.command](args, ctx)
        payload, digest, exit_code = result.payload, result.digest, result.exit_code
    except (PolyflagError, ValueError, OSError) as e:
        exit_code = _exit_code_for(e)
        digest = ctx.digest
        logger.warning("command_failed", error=str(e), error_type=type(e).__name__, exit_code=exit_code)
        payload = error_payload(e)
    elapsed = time.perf_counter() - start

    run_config = config.get_logging_config()
    if args.max_vertices is not None:
        run_config["config_max_vertices_override"] = args.max_vertices

    report = Report(
        command=argv,
        tool_version=__version__,
        exit_code=exit_code,
        input=digest,
        result=payload,
        timing_seconds=elapsed,
        config=run_config,
    )
    logger.info("command_completed", exit_code=exit_code, duration_seconds=round(elapsed, 4))
    return exit_code, report


def run(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    config = get_config()
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    setup_logging(log_level=args.log_level or config.log_level, log_file=config.log_file or None)

    exit_code, report = execute(argv)
    if args.json:
        print(report.model_dump_json(indent=2))
    else:
        print(render_report(report), end="")
    return exit_code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
