"""Tree and coordinate text formats, CSV report rows and SVG output.

Tree file::

    5
    root 0        (optional)
    0 1
    1 2
    ...

The order in which a vertex's edges appear is its neighbour order, i.e. the
embedding that the order-respecting drawings keep.
"""

from __future__ import annotations

import csv
import io
from typing import Iterable, Optional

from .layout import Drawing, grid_dims
from .tree import Tree, TreeError

CSV_COLUMNS = (
    "n", "tree_id", "algo", "width_pts", "height_pts",
    "monotone", "planar", "bound_ok", "embedding_ok",
)


class FormatError(ValueError):
    pass


def _content_lines(text: str) -> list[str]:
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def _int(tok: str, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"expected an integer for {what}, got {tok!r}") from None


def parse_tree(text: str) -> tuple[Tree, Optional[int]]:
    """Parse a tree file; returns the tree and the root if one is given."""
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty tree file")
    n = _int(lines[0], "vertex count")
    if n < 1:
        raise FormatError("vertex count must be positive")
    rest = lines[1:]
    root = None
    if rest and rest[0].split()[0] == "root":
        parts = rest[0].split()
        if len(parts) != 2:
            raise FormatError(f"bad root line {rest[0]!r}")
        root = _int(parts[1], "root")
        rest = rest[1:]
    if len(rest) != n - 1:
        raise FormatError(f"expected {n - 1} edge lines, got {len(rest)}")
    edges = []
    for line in rest:
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"bad edge line {line!r}")
        edges.append((_int(parts[0], "vertex"), _int(parts[1], "vertex")))
    try:
        tree = Tree.from_edges(n, edges)
    except TreeError as e:
        raise FormatError(str(e)) from None
    if root is not None and not 0 <= root < n:
        raise FormatError(f"root {root} out of range")
    return tree, root


def format_tree(tree: Tree, root: Optional[int] = None) -> str:
    lines = [str(tree.n)]
    if root is not None:
        lines.append(f"root {root}")
    lines.extend(f"{u} {v}" for u, v in tree.edges())
    return "\n".join(lines) + "\n"


def format_coords(coords: Iterable[tuple[int, int]]) -> str:
    return "".join(f"{v} {x} {y}\n" for v, (x, y) in enumerate(coords))


def parse_coords(text: str, n: int) -> tuple[tuple[int, int], ...]:
    coords: dict[int, tuple[int, int]] = {}
    for line in _content_lines(text):
        parts = line.split()
        if len(parts) != 3:
            raise FormatError(f"bad coordinate line {line!r}")
        v, x, y = (_int(p, "coordinate") for p in parts)
        if not 0 <= v < n or v in coords:
            raise FormatError(f"vertex {v} out of range or repeated")
        coords[v] = (x, y)
    if len(coords) != n:
        raise FormatError(f"expected {n} coordinates, got {len(coords)}")
    if len(set(coords.values())) != n:
        raise FormatError("two vertices share a grid point")
    return tuple(coords[v] for v in range(n))


def _flag(value: Optional[bool]) -> str:
    return "na" if value is None else ("true" if value else "false")


def csv_rows(rows: Iterable[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for row in rows:
        w.writerow(
            _flag(row[c]) if isinstance(row[c], bool) or row[c] is None else row[c]
            for c in CSV_COLUMNS
        )
    return buf.getvalue()


# -- SVG ------------------------------------------------------------------------

UNIT = 16
MARGIN = 16


def drawing_svg(d: Drawing) -> str:
    """SVG of a drawing, one grid unit per 16px, y axis pointing up.

    The root used is drawn as a square; in four-quadrant drawings the gravity
    root of the upper part is drawn as a diamond.
    """
    dims = grid_dims(d)
    min_x = min(x for x, _ in d.coords)
    max_y = max(y for _, y in d.coords)
    width = (dims.width_points - 1) * UNIT + 2 * MARGIN
    height = (dims.height_points - 1) * UNIT + 2 * MARGIN

    def sx(x: int) -> int:
        return (x - min_x) * UNIT + MARGIN

    def sy(y: int) -> int:
        return (max_y - y) * UNIT + MARGIN

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        '<g stroke="#dddddd" stroke-width="1">',
    ]
    for i in range(dims.width_points):
        x = MARGIN + i * UNIT
        out.append(f'<line x1="{x}" y1="{MARGIN}" x2="{x}" y2="{height - MARGIN}"/>')
    for j in range(dims.height_points):
        y = MARGIN + j * UNIT
        out.append(f'<line x1="{MARGIN}" y1="{y}" x2="{width - MARGIN}" y2="{y}"/>')
    out.append("</g>")
    out.append('<g stroke="black" stroke-width="2">')
    for u, v in sorted(d.tree.edges()):
        (x1, y1), (x2, y2) = d.coords[u], d.coords[v]
        out.append(f'<line x1="{sx(x1)}" y1="{sy(y1)}" x2="{sx(x2)}" y2="{sy(y2)}"/>')
    out.append("</g>")
    out.append('<g fill="black">')
    for v, (x, y) in enumerate(d.coords):
        cx, cy = sx(x), sy(y)
        if v == d.root_used:
            out.append(f'<rect x="{cx - 5}" y="{cy - 5}" width="10" height="10"/>')
        elif v == d.secondary_root:
            out.append(f'<polygon points="{cx},{cy - 6} {cx + 6},{cy} {cx},{cy + 6} {cx - 6},{cy}"/>')
        else:
            out.append(f'<circle cx="{cx}" cy="{cy}" r="4"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
