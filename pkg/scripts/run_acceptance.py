#!/usr/bin/env python3
"""
Acceptance sweep - run every acceptance check with progress bars.

Usage:
    # Full sweep with the configured seed
    python scripts/run_acceptance.py

    # Reproduce a run
    python scripts/run_acceptance.py --seed 7

    # Smaller samples (smoke test)
    python scripts/run_acceptance.py --quick

    # Only some checks
    python scripts/run_acceptance.py --only pentagon hilton-milnor
"""

import argparse
import random
import sys
import time
from itertools import product
from pathlib import Path
from typing import Callable, Dict, List, Tuple

# Add project root to Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import structlog
from tqdm import tqdm

from src.chordal import EliminationOrdering, find_chordless_cycle_brute_force, is_chordal, verify_peo
from src.cli import execute
from src.complex import (
    clique_complex,
    cycle,
    delete,
    discrete,
    full_subcomplex,
    is_flag,
    join,
    link,
    path,
    point,
    simplex,
    simplex_boundary,
    skeleton_graph,
    star,
)
from src.config import get_config
from src.decomposition import SphereAssignment, poincare_polynomial, porter_decomposition
from src.flag import flagify, is_minimal_flag_extension
from src.homology import BettiTable, betti_zk, verify_decomposition
from src.homology.verification import STATUS_NOT_CO_H, STATUS_PASS
from src.logging_config import setup_logging
from src.loopspace import loop_zk_factors, lyndon_words, series_identity_check, witt_count
from src.sampling import (
    all_complexes,
    all_flag_complexes,
    random_chordal_graph,
    random_complex,
    random_flag_complex,
    random_graph,
    small_graphs,
)
from src.series import PoincareSeries

logger = structlog.get_logger(__name__)

CheckResult = Tuple[bool, str]


def print_banner():
    print()
    print("=" * 70)
    print("🧪 POLYFLAG ACCEPTANCE SWEEP")
    print("=" * 70)
    print()


def check_pentagon(rng: random.Random, quick: bool) -> CheckResult:
    table = betti_zk(cycle(5))
    expected = {0: 1, 3: 5, 4: 5, 7: 1}
    return table == expected, f"betti = {table.ranks}"


def check_discrete(rng: random.Random, quick: bool) -> CheckResult:
    for m in tqdm(range(2, 8), desc="disjoint points", leave=False):
        dims = SphereAssignment.moment_angle(m)
        dec = porter_decomposition(m, dims)
        if betti_zk(discrete(m)) != BettiTable(poincare_polynomial(dec).terms()):
            return False, f"betti mismatch at m={m}"
    return True, "m = 2..7"


def check_oracle_sweep(rng: random.Random, quick: bool) -> CheckResult:
    complexes = [clique_complex(g) for g in small_graphs(max_nodes=6)]
    complexes = [K for K in complexes if isinstance(is_chordal(skeleton_graph(K)), EliminationOrdering)]
    samples = 50 if quick else 500
    complexes += [
        clique_complex(random_chordal_graph(rng.randint(7, 9), p=rng.random(), seed=rng)) for _ in range(samples)
    ]
    for K in tqdm(complexes, desc="oracle equivalence", leave=False):
        report = verify_decomposition(K)
        if report.status != STATUS_PASS:
            return False, f"{K}: {report.message}"
    return True, f"{len(complexes)} chordal flag complexes"


def check_cycles(rng: random.Random, quick: bool) -> CheckResult:
    for m in range(4, 9):
        report = verify_decomposition(cycle(m))
        if report.status != STATUS_NOT_CO_H or report.witness is None or report.witness.rank < 1:
            return False, f"cycle {m}: {report.status}"
    return True, "cycles 4..8 rejected with certificates"


def check_flagification(rng: random.Random, quick: bool) -> CheckResult:
    for m in range(3, 7):
        if flagify(simplex_boundary(m)).flag_complex != simplex(m):
            return False, f"boundary of the {m - 1}-simplex"
    samples = 100 if quick else 1000
    for _ in tqdm(range(samples), desc="idempotence", leave=False):
        F = flagify(random_complex(rng.randint(1, 8), seed=rng)).flag_complex
        if flagify(F).flag_complex != F:
            return False, f"not idempotent on {F}"
    largest = 4 if quick else 5
    checked = 0
    for m in range(1, largest + 1):
        candidates = [C.faces for C in all_flag_complexes(m)]
        for K in tqdm(list(all_complexes(m)), desc=f"minimality m={m}", leave=False):
            F = flagify(K).flag_complex
            if not is_minimal_flag_extension(K, F):
                return False, f"not minimal on {K}"
            if any(K.faces <= C and not F.faces <= C for C in candidates):
                return False, f"a smaller flag complex contains {K}"
            checked += 1
    return True, f"{samples} idempotence, minimality on all {checked} complexes with m <= {largest}"


def check_flag_lemmas(rng: random.Random, quick: bool) -> CheckResult:
    samples = 100 if quick else 1000
    for _ in tqdm(range(samples), desc="flag lemmas", leave=False):
        K = random_flag_complex(rng.randint(1, 8), p=rng.random(), seed=rng)
        for v in K.vertices:
            lk, st, dl = link(K, v), star(K, v), delete(K, v)
            if not (is_flag(lk) and is_flag(st) and is_flag(dl)):
                return False, f"{K}: link/star/deletion at {v} not flag"
            if lk.face_sets() != full_subcomplex(dl, lk.vertices).face_sets():
                return False, f"{K}: link at {v} is not full in the deletion"
            if st.face_sets() != join(point(v), lk).face_sets():
                return False, f"{K}: star at {v} is not the cone on the link"
            if st.face_sets() | dl.face_sets() != K.face_sets() or st.face_sets() & dl.face_sets() != lk.face_sets():
                return False, f"{K}: pushout identity fails at {v}"
    return True, f"{samples} random flag complexes"


def check_chordality(rng: random.Random, quick: bool) -> CheckResult:
    graphs = list(small_graphs(max_nodes=6))
    samples = 1000 if quick else 10_000
    graphs += [random_graph(rng.randint(7, 8), p=rng.random(), seed=rng) for _ in range(samples)]
    for graph in tqdm(graphs, desc="chordality", leave=False):
        certificate = is_chordal(graph)
        brute = find_chordless_cycle_brute_force(graph)
        if isinstance(certificate, EliminationOrdering):
            if brute is not None or not verify_peo(graph, certificate):
                return False, f"{graph}: ordering returned, brute force found {brute}"
        elif brute is None or not certificate.is_valid_for(graph):
            return False, f"{graph}: cycle {certificate.cycle} returned, brute force found {brute}"
    return True, f"{len(graphs)} graphs"


def check_hilton_milnor(rng: random.Random, quick: bool) -> CheckResult:
    for m in range(1, 5):
        counts: Dict[tuple, int] = {}
        for element in lyndon_words(m, 12):
            counts[element.multidegree] = counts.get(element.multidegree, 0) + 1
        for alpha in product(range(13), repeat=m):
            if 0 < sum(alpha) <= 12 and counts.get(alpha, 0) != witt_count(m, alpha):
                return False, f"Witt count mismatch at {alpha}"
    for dims in [(2, 2), (2, 3), (3, 3), (2, 3, 4)]:
        if not series_identity_check(dims, 16).passed:
            return False, f"series identity fails for {dims}"
    result = loop_zk_factors(path(3), 17)
    if [(f.kind, f.sphere_dim) for f in result.factors] != [("loop_sphere", 3)]:
        return False, "loop space of the 3-path"
    if result.series != PoincareSeries.geometric(2, 16):
        return False, "loop series of the 3-path"
    return True, "Witt counts, series identities, ΩZ_K of the 3-path"


def check_cli_examples(rng: random.Random, quick: bool) -> CheckResult:
    corpus = project_root / "data" / "corpus"
    code, report = execute(["decompose", str(corpus / "three_points.scx"), "--pairs", "moment-angle"])
    if code != 0 or {c.dim: c.count for c in report.result.spheres} != {3: 3, 4: 2}:
        return False, "decompose three_points"
    code, report = execute(["verify", str(corpus / "pentagon.scx")])
    if code != 1 or report.result.cycle != [1, 2, 3, 4, 5] or report.result.witness_betti_degree != 7:
        return False, "verify pentagon"
    code, report = execute(["flagify", str(corpus / "boundary_tetra.scx")])
    if code != 0 or report.result.added_faces != [[1, 2, 3, 4]]:
        return False, "flagify boundary_tetra"
    return True, "decompose, verify, flagify examples"


CHECKS: Dict[str, Callable[[random.Random, bool], CheckResult]] = {
    "pentagon": check_pentagon,
    "disjoint-points": check_discrete,
    "oracle-equivalence": check_oracle_sweep,
    "cycles": check_cycles,
    "flagification": check_flagification,
    "flag-lemmas": check_flag_lemmas,
    "chordality": check_chordality,
    "hilton-milnor": check_hilton_milnor,
    "cli-examples": check_cli_examples,
}


def main():
    parser = argparse.ArgumentParser(
        description="Run the polyflag acceptance checks",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=__doc__,
    )
    parser.add_argument("--seed", type=int, help="Random seed (default: POLYFLAG_SEED)")
    parser.add_argument("--quick", action="store_true", help="Smaller random samples")
    parser.add_argument("--only", nargs="+", choices=sorted(CHECKS), help="Run only these checks")
    parser.add_argument("--log-level", default="WARNING", help="Log level (default: WARNING)")
    args = parser.parse_args()

    config = get_config()
    setup_logging(log_level=args.log_level, log_file=config.log_file or None)
    seed = args.seed if args.seed is not None else config.random_seed

    print_banner()
    print(f"🎲 Seed: {seed}{' (quick)' if args.quick else ''}")
    print()

    failures: List[str] = []
    for name in args.only or list(CHECKS):
        rng = random.Random(f"{seed}:{name}")
        start = time.time()
        try:
            passed, detail = CHECKS[name](rng, args.quick)
        except Exception as e:
            logger.error("acceptance_check_crashed", check=name, error=str(e), error_type=type(e).__name__)
            passed, detail = False, f"{type(e).__name__}: {e}"
        elapsed = time.time() - start
        print(f"{'✅' if passed else '❌'} {name:<20} {elapsed:7.1f}s  {detail}")
        if not passed:
            failures.append(name)

    print()
    print("-" * 70)
    if failures:
        print(f"❌ {len(failures)} check(s) failed: {', '.join(failures)}")
        sys.exit(1)
    print("✅ All acceptance checks passed")


if __name__ == "__main__":
    main()
