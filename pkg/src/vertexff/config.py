"""Flat key = value configuration shared by the CLI and the test suites."""
from __future__ import annotations

import cmath
import configparser
from importlib import resources
from typing import Dict, List, Optional

_SECTION = "vertexff"


class ConfigError(ValueError):
    pass


def _read_flat(text: str) -> Dict[str, str]:
    parser = configparser.ConfigParser(inline_comment_prefixes=("#",))
    parser.optionxform = str
    try:
        parser.read_string(f"[{_SECTION}]\n" + text)
    except configparser.Error as exc:
        raise ConfigError(str(exc)) from exc
    return {k.replace("-", "_"): v for k, v in parser[_SECTION].items()}


def load_defaults() -> Dict[str, str]:
    text = resources.files("vertexff").joinpath("defaults.cfg").read_text()
    return _read_flat(text)


def load_config(path: Optional[str] = None, overrides: Optional[Dict[str, str]] = None) -> Dict[str, str]:
    """Defaults, then the optional file, then explicit overrides."""
    cfg = load_defaults()
    if path is not None:
        try:
            with open(path) as fh:
                extra = _read_flat(fh.read())
        except OSError as exc:
            raise ConfigError(f"cannot read config file: {exc}") from exc
        unknown = set(extra) - set(cfg)
        if unknown:
            raise ConfigError(f"unknown keys: {sorted(unknown)}")
        cfg.update(extra)
    for k, v in (overrides or {}).items():
        if v is not None:
            cfg[k] = str(v)
    return cfg


def parse_complex(text: str) -> complex:
    text = text.strip()
    try:
        if "@" in text:
            mod, arg = text.split("@")
            return cmath.rect(float(mod), float(arg))
        return complex(text.replace(" ", ""))
    except ValueError as exc:
        raise ConfigError(f"not a complex number: {text!r}") from exc


def get_float(cfg, key: str) -> float:
    try:
        return float(cfg[key])
    except (KeyError, ValueError) as exc:
        raise ConfigError(f"bad or missing float {key!r}") from exc


def get_int(cfg, key: str) -> int:
    try:
        return int(cfg[key])
    except (KeyError, ValueError) as exc:
        raise ConfigError(f"bad or missing integer {key!r}") from exc


def get_floats(cfg, key: str) -> List[float]:
    try:
        return [float(x) for x in cfg[key].split(",") if x.strip()]
    except (KeyError, ValueError) as exc:
        raise ConfigError(f"bad or missing list {key!r}") from exc


def get_ints(cfg, key: str) -> List[int]:
    try:
        return [int(x) for x in cfg[key].split(",") if x.strip()]
    except (KeyError, ValueError) as exc:
        raise ConfigError(f"bad or missing list {key!r}") from exc


def get_complexes(cfg, key: str) -> List[complex]:
    if key not in cfg:
        raise ConfigError(f"missing key {key!r}")
    return [parse_complex(x) for x in cfg[key].split(",") if x.strip()]
