"""Bargraph polyominoes of binary words: column i has height w_i + 1.

Coordinates: column i (1-based) occupies x in [i-1, i]; a column of
height h covers the unit cells with y in [0, h).  This fixes the vertex
labels used by the graph module.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .words import Word

Cell = tuple[int, int]
Edge = tuple[tuple[int, int], tuple[int, int]]


@dataclass(frozen=True)
class Polyomino:
    """Column heights (each 1 or 2), left to right, with the source word's k."""

    heights: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        if not self.heights:
            raise ValueError("a polyomino needs at least one column")
        if any(h not in (1, 2) for h in self.heights):
            raise ValueError("column heights must be 1 or 2")


def from_word(w: Word) -> Polyomino:
    """The bargraph polyomino of a nonempty word."""
    if len(w) == 0:
        raise ValueError("the empty word has no polyomino")
    return Polyomino(tuple(b + 1 for b in w.bits), w.k)


def word_of(p: Polyomino) -> Word:
    """The word the polyomino was built from (heights minus one)."""
    return Word(tuple(h - 1 for h in p.heights), p.k)


def cells(p: Polyomino) -> list[Cell]:
    """Unit cells as (x, y) of their lower-left corners."""
    out = []
    for x, h in enumerate(p.heights):
        out.append((x, 0))
        if h == 2:
            out.append((x, 1))
    return out


def cell_sides(cell: Cell) -> list[Edge]:
    """The four unit sides of a cell, each as a sorted vertex pair."""
    x, y = cell
    return [
        ((x, y), (x + 1, y)),
        ((x, y + 1), (x + 1, y + 1)),
        ((x, y), (x, y + 1)),
        ((x + 1, y), (x + 1, y + 1)),
    ]


def area(p: Polyomino) -> int:
    """Number of cells."""
    return sum(p.heights)


def semiperimeter(p: Polyomino) -> int:
    """Half the boundary length of the cell union, counted geometrically.

    A unit edge is on the boundary iff it belongs to exactly one cell.
    The perimeter is always even, so the halving is exact.
    """
    counts: Counter[Edge] = Counter()
    for cell in cells(p):
        counts.update(cell_sides(cell))
    boundary = sum(1 for c in counts.values() if c == 1)
    assert boundary % 2 == 0
    return boundary // 2


def semiperimeter_closed(w: Word) -> int:
    """Fast path: n + 1 + (number of maximal runs of 1's in w)."""
    if len(w) == 0:
        raise ValueError("the empty word has no polyomino")
    return len(w) + 1 + len(w.ones_runs())


def render(p: Polyomino) -> str:
    """Two-row block rendering, top row first."""
    top = "".join("█" if h == 2 else " " for h in p.heights).rstrip()
    bottom = "█" * len(p.heights)
    return (top + "\n" if top else "") + bottom


def to_json_dict(p: Polyomino) -> dict:
    return {
        "word": word_of(p).text,
        "heights": list(p.heights),
        "area": area(p),
        "sper": semiperimeter(p),
    }
