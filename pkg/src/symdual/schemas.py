"""JSON input formats.

Rationals are written as strings ``"p/q"`` (plain integers are accepted too).
Parse failures raise :class:`SchemaError`; genericity and precondition
failures surface later as the library's own exceptions.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .arrangement.polarized import PolarizedArrangement
from .exactlin import RatMatrix, to_fraction
from .kgroup import FixedPointPackage
from .typea import Composition


class SchemaError(ValueError):
    pass


def load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _require(data: Any, key: str, kind: type | tuple) -> Any:
    if not isinstance(data, dict) or key not in data:
        raise SchemaError(f"missing key {key!r}")
    value = data[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise SchemaError(f"{key!r} has the wrong type")
    return value


def _int(x: Any, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise SchemaError(f"{what} must be an integer")
    return x


def _rational(x: Any, what: str) -> Fraction:
    if isinstance(x, float):
        raise SchemaError(f"{what}: write rationals as strings, not floats")
    try:
        return to_fraction(x)
    except (TypeError, ValueError, ZeroDivisionError):
        raise SchemaError(f"{what}: cannot read {x!r} as a rational") from None


def arrangement_from_json(data: Any, check: bool = True) -> PolarizedArrangement:
    d = _int(_require(data, "d", int), "d")
    normals = _require(data, "normals", list)
    constants = _require(data, "constants", list)
    objective = _require(data, "objective", list)
    if len(normals) != d:
        raise SchemaError(f"normals must have d={d} rows")
    n = len(constants)
    rows = []
    for row in normals:
        if not isinstance(row, list) or len(row) != n:
            raise SchemaError(f"each normals row must have {n} entries")
        rows.append([_int(x, "normal entry") for x in row])
    if len(objective) != d:
        raise SchemaError(f"objective must have d={d} entries")
    return PolarizedArrangement(
        RatMatrix(rows, ncols=n),
        [_rational(x, "constant") for x in constants],
        [_rational(x, "objective") for x in objective],
        check=check,
    )


def _frac_str(x: Fraction) -> str:
    return str(x)


def arrangement_to_json(arr: PolarizedArrangement) -> dict:
    return {
        "d": arr.d,
        "normals": [[int(x) for x in row] for row in arr.normals.rows()],
        "constants": [_frac_str(x) for x in arr.constants],
        "objective": [_frac_str(x) for x in arr.objective],
    }


def partition_from_json(data: Any) -> tuple[int, ...]:
    if not isinstance(data, list):
        raise SchemaError("a partition is a list of integers")
    return tuple(_int(x, "part") for x in data)


def composition_from_json(data: Any) -> Composition:
    """``{"offset": int, "parts": [int]}``; a bare list means offset 0."""
    if isinstance(data, list):
        return Composition.of(partition_from_json(data))
    offset = _int(_require(data, "offset", int), "offset")
    parts = _require(data, "parts", list)
    if any(_int(x, "part") < 0 for x in parts):
        raise SchemaError("composition parts must be nonnegative")
    return Composition(offset, tuple(parts))


def multipartition_from_json(data: Any) -> tuple[int, list[int], list[tuple[int, ...]]]:
    e = _int(_require(data, "e", int), "e")
    s = [_int(x, "charge") for x in _require(data, "s", list)]
    comps = [partition_from_json(c) for c in _require(data, "components", list)]
    if e < 1:
        raise SchemaError("e must be positive")
    return e, s, comps


def package_from_json(data: Any) -> FixedPointPackage:
    _int(_require(data, "d", int), "d")
    pts = _require(data, "points", list)
    for p in pts:
        if not isinstance(p, dict) or not isinstance(p.get("name"), str) or not isinstance(p.get("weights"), list):
            raise SchemaError("each point needs a string name and a weights list")
        for w in p["weights"]:
            _int(w, "weight")
    order = data.get("order", [])
    if not isinstance(order, list) or any(not isinstance(pr, list) or len(pr) != 2 for pr in order):
        raise SchemaError("order is a list of [smaller, larger] name pairs")
    names = {p["name"] for p in pts}
    for pr in order:
        if pr[0] not in names or pr[1] not in names:
            raise SchemaError(f"order mentions an unknown point in {pr}")
    leaf = data.get("leaf", {})
    if not isinstance(leaf, dict):
        raise SchemaError("leaf is an object mapping point names to labels")
    if leaf and set(leaf) != names:
        raise SchemaError("leaf must label every point")
    return FixedPointPackage.from_dict(data)
