"""
Plain-text drawing of a trapezoid in the figures' layout.

Row 1 sits above row 2 and both start at column 1, so the longer row sticks
out on the right (row 2 for Magog, row 1 for Gog). Every cell is padded to
the widest entry. A marked bug or pivot k is drawn as a ``\\`` on a line of
its own between the rows, in the gap after column k:

    1 1 2 4 4 5 7
         \\
    1 2 2 4 4 6 7 7
    bug: 3
"""
from dataclasses import dataclass
from trapezoids.bijection import compute_pivot, find_smallest_bug
from trapezoids.core import Kind, Trapezoid

MARKER = '\\'


@dataclass(frozen=True)
class RenderSpec:
    instance: Trapezoid
    mark_bug: bool = False
    mark_pivot: bool = False
    show_bounds: bool = False


def _line(values, width: int) -> str:
    return ' '.join(str(value).ljust(width) for value in values).rstrip()


def _marker_line(k: int, width: int) -> str:
    return ' ' * (k * (width + 1) - 1) + MARKER


def render_ascii(spec: RenderSpec) -> str:
    trapezoid = spec.instance.ensure_valid()
    rows = (trapezoid.row1, trapezoid.row2)
    bounds = tuple(
        tuple(trapezoid.upper_bound(i, j) for j in range(1, len(row) + 1))
        for i, row in enumerate(rows, start=1)
    )
    shown = rows + bounds if spec.show_bounds else rows
    width = max(len(str(value)) for row in shown for value in row)

    caption = None
    marker = None
    if spec.mark_bug and trapezoid.kind is Kind.MAGOG:
        bug = find_smallest_bug(trapezoid, check=False)
        caption = f'bug: {bug if bug is not None else "none"}'
        if bug is not None:
            marker = _marker_line(bug, width)
    elif spec.mark_pivot and trapezoid.kind is Kind.GOG:
        pivot = compute_pivot(trapezoid, check=False)
        caption = f'pivot: {pivot}'
        marker = _marker_line(pivot, width)

    lines = [_line(rows[0], width)]
    if marker:
        lines.append(marker)
    lines.append(_line(rows[1], width))
    if caption:
        lines.append(caption)
    if spec.show_bounds:
        lines.append('bounds:')
        lines.extend(_line(row, width) for row in bounds)
    return '\n'.join(lines) + '\n'
