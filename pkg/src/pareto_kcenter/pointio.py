"""Point-file format: one point per line, two floats separated by
whitespace; '#' starts a comment; blank lines are ignored.

Coordinates are written with 17 significant digits, which round-trips
64-bit floats exactly.
"""

from __future__ import annotations

from typing import Iterable, TextIO

from .geom import Point, PointSet


class PointFileError(ValueError):
    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        super().__init__(message if line_no is None
                         else f"line {line_no}: {message}")


def fmt_coord(x: float) -> str:
    return format(x, ".17g")


def parse_points(stream: Iterable[str]) -> list[Point]:
    points = []
    for line_no, raw in enumerate(stream, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise PointFileError(f"expected two coordinates, got {len(parts)}",
                                 line_no)
        try:
            x, y = float(parts[0]), float(parts[1])
        except ValueError:
            raise PointFileError(f"bad number in {line!r}", line_no) from None
        try:
            points.append(Point(x, y))
        except ValueError as exc:
            raise PointFileError(str(exc), line_no) from None
    return points


def read_point_file(path: str) -> PointSet:
    with open(path, "r", encoding="utf-8") as fh:
        return PointSet(parse_points(fh))


def write_points(points: Iterable[Point], out: TextIO) -> None:
    for p in points:
        out.write(f"{fmt_coord(p.x)} {fmt_coord(p.y)}\n")


def write_point_file(points: Iterable[Point], path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        write_points(points, fh)
