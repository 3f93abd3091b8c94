"""Unit-tagged quantity parsing.

Config values are strings like "0.5 ps^2/km" or "0.1 1/(W m)".  Quantities
are converted to the canonical system (time ps, distance m, power W) and
checked dimensionally against the expectation of the receiving field.
"""

from __future__ import annotations

import re

# atom -> (dimension vector (time, length, power), scale to ps/m/W)
_ATOMS = {
    "s": ((1, 0, 0), 1e12),
    "ms": ((1, 0, 0), 1e9),
    "us": ((1, 0, 0), 1e6),
    "ns": ((1, 0, 0), 1e3),
    "ps": ((1, 0, 0), 1.0),
    "fs": ((1, 0, 0), 1e-3),
    "km": ((0, 1, 0), 1e3),
    "m": ((0, 1, 0), 1.0),
    "cm": ((0, 1, 0), 1e-2),
    "mm": ((0, 1, 0), 1e-3),
    "um": ((0, 1, 0), 1e-6),
    "nm": ((0, 1, 0), 1e-9),
    "kW": ((0, 0, 1), 1e3),
    "W": ((0, 0, 1), 1.0),
    "mW": ((0, 0, 1), 1e-3),
    "uW": ((0, 0, 1), 1e-6),
    "rad": ((0, 0, 0), 1.0),
    "1": ((0, 0, 0), 1.0),
}

DIMENSIONLESS = (0, 0, 0)
TIME = (1, 0, 0)
LENGTH = (0, 1, 0)
POWER = (0, 0, 1)
PER_LENGTH = (0, -1, 0)
TIME2_PER_LENGTH = (2, -1, 0)
TIME3_PER_LENGTH = (3, -1, 0)
PER_POWER_LENGTH = (0, -1, -1)
TIME_PER_LENGTH = (1, -1, 0)


class UnitError(ValueError):
    pass


def _parse_atom(token: str, sign: int, dims: list, scale: list) -> None:
    m = re.fullmatch(r"([A-Za-z]+|1)(?:\^(-?\d+))?", token)
    if not m:
        raise UnitError(f"cannot parse unit token {token!r}")
    name, exp = m.group(1), int(m.group(2) or 1)
    if name not in _ATOMS:
        raise UnitError(f"unknown unit {name!r}")
    d, s = _ATOMS[name]
    e = sign * exp
    for i in range(3):
        dims[i] += d[i] * e
    scale[0] *= s**e


def parse_unit(unit: str) -> tuple[float, tuple[int, int, int]]:
    """Return (scale to canonical units, dimension vector) for a unit string."""
    u = unit.strip().replace("·", " ").replace("*", " ")
    if not u:
        return 1.0, DIMENSIONLESS
    dims = [0, 0, 0]
    scale = [1.0]
    # split into /-separated groups; the first is the numerator
    parts = re.split(r"/", u)
    for i, part in enumerate(parts):
        part = part.strip()
        if part.startswith("(") and part.endswith(")"):
            part = part[1:-1]
        if not part:
            raise UnitError(f"malformed unit {unit!r}")
        sign = 1 if i == 0 else -1
        for token in part.split():
            _parse_atom(token, sign, dims, scale)
    return scale[0], tuple(dims)


def parse_quantity(text, expected_dims: tuple[int, int, int], field: str) -> float:
    """Parse '<number> <unit>' and convert to canonical units.

    Plain numbers are accepted only for dimensionless fields.
    """
    if isinstance(text, (int, float)) and not isinstance(text, bool):
        if expected_dims != DIMENSIONLESS:
            raise UnitError(f"{field}: unit is mandatory (got bare number {text!r})")
        return float(text)
    if not isinstance(text, str):
        raise UnitError(f"{field}: expected a quantity string, got {text!r}")
    m = re.match(r"\s*([-+0-9.eE]+)\s*(.*)$", text)
    if not m:
        raise UnitError(f"{field}: cannot parse quantity {text!r}")
    try:
        value = float(m.group(1))
    except ValueError:
        raise UnitError(f"{field}: bad number in {text!r}") from None
    scale, dims = parse_unit(m.group(2))
    if dims != expected_dims:
        raise UnitError(
            f"{field}: unit {m.group(2)!r} has dimensions {dims}, "
            f"expected {expected_dims}"
        )
    return value * scale
