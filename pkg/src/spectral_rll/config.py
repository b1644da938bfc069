"""Codebook profile configuration: JSON files and inline ``--ring`` specs."""

from __future__ import annotations

import json
import re
from importlib import resources
from pathlib import Path
from typing import Any

from .codec import CodebookProfile
from .constraints import Ring, RingSet, RunLengthConstraints

BUILTIN_PROFILES = ("table1", "table2")


class ConfigError(ValueError):
    pass


def _int_field(data: dict, name: str, where: str) -> int:
    if name not in data:
        raise ConfigError(f"{where}: missing field '{name}'")
    value = data[name]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{where}: field '{name}' must be an integer, got {value!r}")
    return value


def _num_field(data: dict, name: str, where: str, default: float | None = None) -> float:
    if name not in data:
        if default is None:
            raise ConfigError(f"{where}: missing field '{name}'")
        return default
    value = data[name]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{where}: field '{name}' must be a number, got {value!r}")
    return float(value)


def parse_ring_entry(entry: Any, n: int, where: str) -> tuple[int, Ring]:
    if not isinstance(entry, dict):
        raise ConfigError(f"{where}: ring entry must be an object")
    m = _int_field(entry, "m", where)
    if not 0 <= m < n:
        raise ConfigError(f"{where}: field 'm'={m} outside [0, {n - 1}]")
    center = complex(_num_field(entry, "center_re", where, 0.0), _num_field(entry, "center_im", where, 0.0))
    rho1 = _num_field(entry, "rho1", where)
    rho2 = _num_field(entry, "rho2", where)
    if not 0 <= rho1 <= rho2:
        raise ConfigError(f"{where}: radii must satisfy 0 <= rho1 <= rho2, got rho1={rho1}, rho2={rho2}")
    return m, Ring(center, rho1, rho2)


_RING_KEYS = {"m", "c", "r1", "r2"}


def parse_ring_spec(spec: str, n: int) -> tuple[int, Ring]:
    """Parse ``m=1,c=-2.93+1.87i,r1=1.5,r2=2.25``."""
    where = f"--ring {spec!r}"
    fields = {}
    for part in spec.split(","):
        key, sep, value = part.partition("=")
        key = key.strip()
        if not sep or key not in _RING_KEYS:
            raise ConfigError(f"{where}: expected key=value with keys m, c, r1, r2; got {part!r}")
        fields[key] = value.strip()
    for key in ("m", "r1", "r2"):
        if key not in fields:
            raise ConfigError(f"{where}: missing '{key}'")
    try:
        m = int(fields["m"])
        center = parse_complex(fields.get("c", "0"))
        rho1, rho2 = float(fields["r1"]), float(fields["r2"])
    except ValueError as exc:
        raise ConfigError(f"{where}: {exc}") from None
    if not 0 <= m < n:
        raise ConfigError(f"{where}: m={m} outside [0, {n - 1}]")
    if not 0 <= rho1 <= rho2:
        raise ConfigError(f"{where}: radii must satisfy 0 <= r1 <= r2")
    return m, Ring(center, rho1, rho2)


def parse_complex(text: str) -> complex:
    text = text.strip().replace(" ", "")
    if text.startswith("(") and text.endswith(")"):
        re_im = text[1:-1].split(",")
        if len(re_im) == 2:
            return complex(float(re_im[0]), float(re_im[1]))
    text = re.sub(r"[iI]$", "j", text)
    try:
        return complex(text)
    except ValueError:
        raise ValueError(f"cannot parse complex number {text!r}") from None


def load_config(source: str | Path) -> dict:
    """Read a profile JSON file, or a packaged fixture by name (``table1``/``table2``)."""
    path = Path(source)
    if not path.exists() and str(source) in BUILTIN_PROFILES:
        text = resources.files("spectral_rll").joinpath(f"profiles/{source}.json").read_text()
        where = f"<builtin {source}>"
    else:
        try:
            text = path.read_text()
        except OSError as exc:
            raise ConfigError(f"{source}: {exc.strerror}") from None
        where = str(source)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{where}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise ConfigError(f"{where}: top level must be an object")
    data.setdefault("_source", where)
    return data


def build_profile(
    data: dict | None = None,
    overrides: dict[str, int | None] | None = None,
    ring_specs: list[str] | None = None,
) -> CodebookProfile:
    data = dict(data or {})
    where = data.pop("_source", "profile")
    for key, value in (overrides or {}).items():
        if value is not None:
            data[key] = value
    n = _int_field(data, "n", where)
    if n < 1:
        raise ConfigError(f"{where}: field 'n' must be >= 1")
    params = {name: _int_field(data, name, where) for name in ("d", "k", "l", "r")}
    try:
        constraints = RunLengthConstraints(**params)
    except ValueError as exc:
        raise ConfigError(f"{where}: {exc}") from None
    rings: dict[int, Ring] = {}
    entries = data.get("rings", [])
    if not isinstance(entries, list):
        raise ConfigError(f"{where}: field 'rings' must be a list")
    parsed = [parse_ring_entry(e, n, f"{where}: rings[{i}]") for i, e in enumerate(entries)]
    parsed += [parse_ring_spec(spec, n) for spec in ring_specs or []]
    for m, ring in parsed:
        if m in rings:
            raise ConfigError(f"{where}: duplicate ring entry for m={m}")
        rings[m] = ring
    return CodebookProfile(n, constraints, RingSet.from_mapping(n, rings))


def profile_to_dict(profile: CodebookProfile) -> dict:
    c = profile.constraints
    return {
        "n": profile.n,
        "d": c.d,
        "k": c.k,
        "l": c.l,
        "r": c.r,
        "rings": [
            {"m": m, "center_re": ring.center.real, "center_im": ring.center.imag, "rho1": ring.inner, "rho2": ring.outer}
            for m, ring in profile.rings.constrained()
        ],
    }
