"""Point-set files: JSON with exact fraction-string coordinates.

Schema::

    {
      "n": 9,
      "points": [["0/1", "1/2"], ...],   # n entries, "p/q" fraction strings
      "labels": ["a", "b", ...]          # optional, n entries of a|b|c
    }

Coordinates round-trip bit exactly: they are emitted as normalized "p/q"
strings and parsed back with ``fractions.Fraction``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .geometry import Point, PointSet


def format_fraction(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(str(text))


def point_set_to_dict(ps: PointSet) -> dict:
    out: dict = {
        "n": ps.n,
        "points": [[format_fraction(p.x), format_fraction(p.y)] for p in ps.points],
    }
    if ps.labels is not None:
        out["labels"] = list(ps.labels)
    return out


def point_set_from_dict(data: dict) -> PointSet:
    points = data["points"]
    if "n" in data and data["n"] != len(points):
        raise ValueError(f"declared n={data['n']} but {len(points)} points given")
    pts = tuple(Point(parse_fraction(x), parse_fraction(y)) for x, y in points)
    labels = data.get("labels")
    return PointSet(pts, tuple(labels) if labels is not None else None)


def save_point_set(ps: PointSet, path: str | Path) -> None:
    Path(path).write_text(json.dumps(point_set_to_dict(ps), indent=2) + "\n")


def load_point_set(path: str | Path) -> PointSet:
    return point_set_from_dict(json.loads(Path(path).read_text()))
