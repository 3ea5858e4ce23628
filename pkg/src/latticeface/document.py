"""The polytope file format: JSON with exact coordinates.

A document is an object with ``ambient_dim`` and ``vertices``; every
coordinate is either a JSON integer or a string "p/q" with positive q.
Floats are rejected outright so no precision can be lost on the way in.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .polytope import Polytope
from .report import format_rational


def parse_coordinate(value: Any) -> Fraction:
    if isinstance(value, bool):
        raise ValueError(f"invalid coordinate {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            f = Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"invalid rational literal {value!r}") from exc
        return f
    if isinstance(value, float):
        raise ValueError(
            f"floating-point coordinate {value!r} rejected; write it as 'p/q'"
        )
    raise ValueError(f"invalid coordinate {value!r}")


def polytope_from_document(data: Any) -> Polytope:
    if not isinstance(data, dict):
        raise ValueError("document must be a JSON object")
    try:
        ambient_dim = data["ambient_dim"]
        vertices = data["vertices"]
    except KeyError as exc:
        raise ValueError(f"document is missing the {exc.args[0]!r} field") from exc
    if not isinstance(ambient_dim, int) or isinstance(ambient_dim, bool) or ambient_dim < 0:
        raise ValueError("ambient_dim must be a nonnegative integer")
    if not isinstance(vertices, list):
        raise ValueError("vertices must be a list of coordinate arrays")
    parsed = []
    for row in vertices:
        if not isinstance(row, list) or len(row) != ambient_dim:
            raise ValueError("every vertex must be an array of length ambient_dim")
        parsed.append(tuple(parse_coordinate(x) for x in row))
    return Polytope(ambient_dim, parsed)


def polytope_to_document(poly: Polytope) -> dict:
    return {
        "ambient_dim": poly.ambient_dim,
        "vertices": [[format_rational(x) for x in v] for v in poly.vertices],
    }


def load_polytope(path: str) -> Polytope:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: not valid JSON ({exc})") from exc
    return polytope_from_document(data)


def save_polytope(poly: Polytope, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(polytope_to_document(poly), fh, indent=2)
        fh.write("\n")
