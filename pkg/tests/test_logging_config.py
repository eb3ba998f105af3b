import json
import logging
import sys

import pytest
import structlog

from src.cli import execute
from src.logging_config import bind_command_context, setup_logging


@pytest.fixture(autouse=True)
def clean_context():
    structlog.contextvars.clear_contextvars()
    yield
    structlog.contextvars.clear_contextvars()
    setup_logging(log_level="WARNING")
    logging.basicConfig(format="%(message)s", handlers=[logging.StreamHandler(sys.__stderr__)], force=True)


def test_bind_command_context_replaces_previous_run():
    bind_command_context("verify", path="pentagon.scx", max_vertices=None)
    assert structlog.contextvars.get_contextvars() == {"command": "verify", "path": "pentagon.scx"}
    assert bind_command_context("hilton-milnor") == {"command": "hilton-milnor"}


def test_bound_context_is_merged_into_events():
    bind_command_context("betti", path="tree.scx")
    event = structlog.contextvars.merge_contextvars(None, "info", {"event": "betti_computed"})
    assert event == {"event": "betti_computed", "command": "betti", "path": "tree.scx"}


def test_log_lines_carry_the_command(tmp_path):
    log_file = tmp_path / "logs" / "run.log"
    setup_logging(log_level="INFO", log_file=str(log_file))
    assert structlog.get_config()["processors"][0] is structlog.contextvars.merge_contextvars

    bind_command_context("info", path="pentagon.scx")
    structlog.get_logger("polyflag.tests").info("complex_loaded", m=5)

    entries = [json.loads(line) for line in log_file.read_text(encoding="utf-8").splitlines()]
    entry = next(e for e in entries if e["event"] == "complex_loaded")
    assert (entry["command"], entry["path"], entry["m"]) == ("info", "pentagon.scx", 5)
    assert entry["level"] == "info"


def test_execute_binds_the_running_command(corpus_path):
    execute(["info", corpus_path("pentagon")])
    assert structlog.contextvars.get_contextvars() == {"command": "info", "path": corpus_path("pentagon")}

    execute(["--max-vertices", "9", "betti", corpus_path("cycle_4")])
    assert structlog.contextvars.get_contextvars() == {
        "command": "betti",
        "path": corpus_path("cycle_4"),
        "max_vertices": 9,
    }

    execute(["hilton-milnor", "--spheres", "2,2", "--max-dim", "4"])
    assert structlog.contextvars.get_contextvars() == {"command": "hilton-milnor"}
