import pytest

from src.config import Config, get_config


def test_defaults_validate():
    config = get_config()
    assert config.oracle_max_vertices <= config.max_vertices


@pytest.mark.parametrize(
    "overrides",
    [
        {"max_vertices": 0},
        {"max_vertices": 31},
        {"max_vertices": 8, "oracle_max_vertices": 9},
        {"log_level": "LOUD"},
        {"default_max_dim": 0},
    ],
)
def test_validate_rejects(overrides):
    with pytest.raises(ValueError, match="Config errors"):
        Config(**overrides).validate()


def test_all_problems_reported_together():
    with pytest.raises(ValueError) as excinfo:
        Config(max_vertices=0, log_level="LOUD", default_max_dim=0).validate()
    message = str(excinfo.value)
    assert "POLYFLAG_MAX_VERTICES" in message
    assert "POLYFLAG_LOG_LEVEL" in message
    assert "POLYFLAG_MAX_DIM" in message


def test_logging_config_keys():
    snapshot = Config(max_vertices=12, oracle_max_vertices=6).get_logging_config()
    assert snapshot["config_max_vertices"] == 12
    assert snapshot["config_oracle_max_vertices"] == 6
    assert set(snapshot) == {
        "config_max_vertices",
        "config_oracle_max_vertices",
        "config_random_seed",
        "config_default_max_dim",
        "config_cone_shortcut",
    }


def test_display(capsys):
    Config(max_vertices=12, oracle_max_vertices=6).display()
    out = capsys.readouterr().out
    assert "Max vertices (core): 12" in out
    assert "Max vertices (oracle): 6" in out
