import cmath

import pytest

from vertexff.config import (
    ConfigError,
    get_complexes,
    get_floats,
    get_int,
    load_config,
    load_defaults,
    parse_complex,
)


def test_defaults_load():
    cfg = load_defaults()
    assert get_int(cfg, "max_degree") == 8
    assert get_floats(cfg, "nu") == [0.17, 0.5, 0.83]
    assert len(get_complexes(cfg, "omega")) == 2


def test_parse_complex():
    assert parse_complex("1+2j") == 1 + 2j
    assert parse_complex(" 0.5 - 1j ") == 0.5 - 1j
    assert abs(parse_complex("2@0.3") - cmath.rect(2, 0.3)) < 1e-15
    with pytest.raises(ConfigError):
        parse_complex("one")


def test_file_and_override_layering(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text("max-degree = 5\ncutoff = 3\n")
    cfg = load_config(str(path), {"cutoff": 1, "grid": None})
    assert cfg["max_degree"] == "5"
    assert cfg["cutoff"] == "1"
    assert cfg["grid"] == load_defaults()["grid"]


def test_unknown_key(tmp_path):
    path = tmp_path / "bad.cfg"
    path.write_text("no_such_key = 1\n")
    with pytest.raises(ConfigError):
        load_config(str(path))


def test_missing_file():
    with pytest.raises(ConfigError):
        load_config("/nonexistent/run.cfg")


def test_malformed_lists():
    cfg = dict(load_defaults(), nu="0.1, x")
    with pytest.raises(ConfigError):
        get_floats(cfg, "nu")
    cfg["omega"] = "1@"
    with pytest.raises(ConfigError):
        get_complexes(cfg, "omega")
