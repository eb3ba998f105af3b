import logging
import sys

import pytest

from src.cli import build_parser, execute, run
from src.cli.commands import Context
from src.complex import load_complex, simplex
from src.config import Config
from src.reports import Report, render_report


@pytest.fixture(autouse=True)
def restore_logging():
    yield
    # run() points the root handler at the captured stderr of the current test
    logging.basicConfig(format="%(message)s", handlers=[logging.StreamHandler(sys.__stderr__)], force=True)


def test_decompose_three_points(corpus_path, capsys):
    code = run(["decompose", corpus_path("three_points"), "--pairs", "moment-angle"])
    out = capsys.readouterr().out
    assert code == 0
    assert "spheres: S^3×3, S^4×2" in out
    assert "S(Y_1^Y_2^Y_3) × 2  S^4" in out


def test_decompose_spheres_and_symbolic(corpus_path):
    code, report = execute(["decompose", corpus_path("path_3"), "--pairs", "spheres", "3,2,4"])
    assert code == 0
    assert report.result.mode == "spheres"
    assert [(c.dim, c.count) for c in report.result.spheres] == [(6, 1)]

    code, report = execute(["decompose", corpus_path("path_3"), "--pairs", "symbolic", "--method", "elimination"])
    assert code == 0
    assert report.result.mode == "symbolic"
    assert report.result.assumptions


def test_decompose_bad_pairs(corpus_path):
    code, report = execute(["decompose", corpus_path("path_3"), "--pairs", "spheres", "2,2"])
    assert code == 2
    assert report.result.kind == "error"
    code, _ = execute(["decompose", corpus_path("path_3"), "--pairs", "cones"])
    assert code == 2


def test_decompose_rejects_pentagon_with_certificate(corpus_path):
    code, report = execute(["decompose", corpus_path("pentagon")])
    assert code == 1
    assert report.result.error_type == "NotChordalError"
    assert report.result.certificate == [1, 2, 3, 4, 5]
    assert report.input.m == 5 and report.input.flag and not report.input.chordal


def test_verify_pentagon(corpus_path, capsys):
    code = run(["verify", corpus_path("pentagon")])
    out = capsys.readouterr().out
    assert code == 1
    assert "chordless cycle: (1, 2, 3, 4, 5)" in out
    assert "Betti witness: b7=1" in out


def test_verify_tree_passes(corpus_path):
    code, report = execute(["verify", corpus_path("tree")])
    assert code == 0
    assert report.result.status == "pass"


def test_flagify_writes_output(corpus_path, tmp_path, capsys):
    target = tmp_path / "flag.scx"
    code = run(["flagify", corpus_path("boundary_tetra"), "--out", str(target)])
    out = capsys.readouterr().out
    assert code == 0
    assert "added faces: {1,2,3,4}" in out
    assert "flagification map after looping: deloops (chordal)" in out
    assert load_complex(target) == simplex(4)


def test_flagify_of_flag_complex_is_identity(corpus_path):
    code, report = execute(["flagify", corpus_path("pentagon")])
    assert code == 0
    assert not report.result.changed
    assert (report.result.delooping, report.result.delooping_reason) == ("deloops", "identity")


def test_betti_and_max_degree(corpus_path):
    code, report = execute(["betti", corpus_path("pentagon")])
    assert code == 0
    assert {e.degree: e.rank for e in report.result.ranks} == {0: 1, 3: 5, 4: 5, 7: 1}
    code, report = execute(["betti", corpus_path("pentagon"), "--max-degree", "4"])
    assert {e.degree: e.rank for e in report.result.ranks} == {0: 1, 3: 5, 4: 5}


def test_chordal_and_info(corpus_path):
    code, report = execute(["chordal", corpus_path("octahedron")])
    assert code == 0
    assert report.result.cycle == [3, 5, 4, 6]
    code, report = execute(["info", corpus_path("triangle_boundary")])
    assert code == 0
    assert report.result.flag_witness == [1, 2, 3]
    assert report.result.f_vector == [1, 3, 3]


def test_hilton_milnor(capsys):
    code = run(["hilton-milnor", "--spheres", "2,2", "--max-dim", "4", "--check-series"])
    out = capsys.readouterr().out
    assert code == 0
    assert "ΩS^2 × 2" in out
    assert "ΩS^4 × 2" in out
    assert "series identity to degree 4: passed" in out
    code, _ = execute(["hilton-milnor", "--spheres", "2,5", "--max-dim", "3"])
    assert code == 2


def test_loopspace(corpus_path):
    code, report = execute(["loopspace", corpus_path("path_3"), "--max-dim", "16"])
    assert code == 0
    assert [(c.kind, c.sphere_dim, c.count) for c in report.result.counts] == [("loop_sphere", 3, 1)]
    assert report.result.circle_factors == 3
    code, _ = execute(["loopspace", corpus_path("cycle_4"), "--max-dim", "8"])
    assert code == 1


def test_input_errors_exit_two(corpus_path, tmp_path):
    code, report = execute(["info", str(tmp_path / "absent.scx")])
    assert code == 2
    bad = tmp_path / "bad.scx"
    bad.write_text("vertices 3\nfacet 1 7\n", encoding="utf-8")
    code, report = execute(["info", str(bad)])
    assert code == 2
    assert report.result.line_number == 2
    assert "bad.scx:2" in report.result.message


def test_undecodable_input_exits_two(tmp_path):
    bad = tmp_path / "binary.scx"
    bad.write_bytes(b"\xff\xfe\x00v\x00")
    code, report = execute(["info", str(bad)])
    assert code == 2
    assert report.result.error_type == "ComplexFormatError"
    assert "binary.scx" in report.result.message


def test_max_vertices_overrides_guards(corpus_path):
    code, report = execute(["info", corpus_path("pentagon"), "--max-vertices", "4"])
    assert code == 2
    assert report.result.error_type == "EnumerationGuardError"
    code, _ = execute(["--max-vertices", "4", "betti", corpus_path("cycle_4")])
    assert code == 0


@pytest.mark.parametrize("value", ["0", "-3", "many"])
def test_max_vertices_must_be_positive(corpus_path, value, capsys):
    assert run(["info", corpus_path("pentagon"), "--max-vertices", value]) == 2
    assert "--max-vertices" in capsys.readouterr().err
    with pytest.raises(SystemExit):
        execute(["--max-vertices", value, "info", corpus_path("pentagon")])


def test_explicit_max_vertices_is_not_replaced_by_config():
    config = Config(max_vertices=12, oracle_max_vertices=6)
    assert (Context(config=config).core_guard, Context(config=config).oracle_guard) == (12, 6)
    ctx = Context(config=config, max_vertices=1)
    assert (ctx.core_guard, ctx.oracle_guard) == (1, 1)


def test_ghost_vertices_are_rejected(corpus_path):
    code, report = execute(["decompose", corpus_path("relabelled_path")])
    assert code == 1
    assert report.result.error_type == "GhostVertexError"


def test_argument_errors():
    assert run(["nonsense"]) == 2
    assert run([]) == 2
    with pytest.raises(SystemExit):
        build_parser().parse_args(["betti"])


def test_json_output_round_trips(corpus_path, capsys):
    code = run(["--json", "decompose", corpus_path("four_points")])
    out = capsys.readouterr().out
    report = Report.model_validate_json(out)
    assert code == report.exit_code == 0
    assert report.model_dump() == Report.model_validate_json(report.model_dump_json()).model_dump()
    assert {c.dim: c.count for c in report.result.spheres} == {3: 6, 4: 8, 5: 3}
    assert report.config["config_max_vertices"] >= 4


def test_human_and_json_carry_the_same_data(corpus_path, capsys):
    argv = ["verify", corpus_path("pentagon")]
    run(argv + ["--json"])
    report = Report.model_validate_json(capsys.readouterr().out)
    run(argv)
    human = capsys.readouterr().out
    assert human == render_report(report)
