"""Cycles with edge lengths 1 and delta only: cell families and tables.

A cell (i, j) stands for every cycle with i edges of length delta and j
edges of length 1.  Whether such cycles are forbidden depends only on
(i, j); the tag says which family bound fires.  Families partition by i:
i = 0 is the K1 bound, i = 1 non-metric, even i >= 2 the K2 bound and odd
i >= 3 the C bound (split into C0/C1 when C' > C + 1, plus the single
special pentagon cell at (5, 0) for delta = 5 in case IIB).

Two parameter tuples form a twisted pair when the cell positions of one
table are exactly the transpose of the other's.
"""

from __future__ import annotations

from dataclasses import dataclass

from .families import FamilyTag
from .params import AdmissibilityCase, ParameterSequence

TAG_SYMBOLS = {
    FamilyTag.K1_CYCLE: "K1",
    FamilyTag.NON_METRIC: "δ",
    FamilyTag.K2_CYCLE: "K2",
    FamilyTag.C_CYCLE: "C",
    FamilyTag.C0_CYCLE: "C0",
    FamilyTag.C1_CYCLE: "C1",
    FamilyTag.SPECIAL_5: "C1^5",
}

STAIRCASE = "·"


def classify_1d(p: ParameterSequence, i: int, j: int) -> FamilyTag | None:
    """Tag of cell (i, j), or None when such cycles are not forbidden.

    Pairs with i + j < 3 are not cycles and give None.
    """
    if not p.is_admissible:
        raise ValueError(f"parameters {p} are not admissible")
    if i < 0 or j < 0 or i + j < 3:
        return None
    d, c = p.delta, p.c
    if i == 0:
        return FamilyTag.K1_CYCLE if j % 2 == 1 and j < 2 * p.k1 else None
    if i == 1:
        return FamilyTag.NON_METRIC if j < d else None
    if i % 2 == 0:
        if j % 2 == 1 and 2 * j < 2 * c - 4 * p.k2 - 2 - (c - 1 - 2 * d) * i:
            return FamilyTag.K2_CYCLE
        return None
    if p.c_prime == p.c + 1:
        return FamilyTag.C_CYCLE if 2 * j < c - 1 - (c - 1 - 2 * d) * i else None
    if i == 3:
        if (d + j) % 2 == 0:
            return FamilyTag.C0_CYCLE if 2 * j < p.c0 - 1 - (p.c0 - 1 - 2 * d) * 3 else None
        return FamilyTag.C1_CYCLE if 2 * j < p.c1 - 1 - (p.c1 - 1 - 2 * d) * 3 else None
    if i == 5 and j == 0 and d == 5 and p.case is AdmissibilityCase.CASE_IIB:
        return FamilyTag.SPECIAL_5
    return None


@dataclass(frozen=True)
class OneDeltaCell:
    i: int
    j: int
    tag: FamilyTag

    @property
    def symbol(self) -> str:
        return TAG_SYMBOLS[self.tag]


@dataclass(frozen=True)
class OneDeltaTable:
    params: ParameterSequence
    cells: tuple[OneDeltaCell, ...]

    @property
    def cell_map(self) -> dict[tuple[int, int], FamilyTag]:
        return {(c.i, c.j): c.tag for c in self.cells}

    @property
    def positions(self) -> frozenset[tuple[int, int]]:
        return frozenset((c.i, c.j) for c in self.cells)

    @property
    def i_max(self) -> int:
        return max([3] + [c.i for c in self.cells])

    @property
    def j_max(self) -> int:
        return max([3] + [c.j for c in self.cells])

    def render(self) -> str:
        """Aligned text grid: rows 0δ..iδ, columns j = 0..j_max, the
        corner with i + j < 3 blanked with a staircase marker."""
        cm = self.cell_map
        grid = [[""] + [str(j) for j in range(self.j_max + 1)]]
        for i in range(self.i_max + 1):
            row = [f"{i}δ"]
            for j in range(self.j_max + 1):
                if i + j < 3:
                    row.append(STAIRCASE)
                else:
                    tag = cm.get((i, j))
                    row.append(TAG_SYMBOLS[tag] if tag is not None else "")
            grid.append(row)
        widths = [max(len(r[k]) for r in grid) for k in range(len(grid[0]))]
        lines = [
            "  ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip()
            for row in grid
        ]
        return "\n".join(lines)

    def to_json_obj(self) -> dict:
        return {
            "params": list(self.params.as_tuple()),
            "cells": [
                {"i": c.i, "j": c.j, "tag": c.symbol}
                for c in self.cells
            ],
        }


def render_table(p: ParameterSequence) -> OneDeltaTable:
    """Sweep the cell grid; the family inequalities cannot fire beyond
    3*delta + 3 in either coordinate."""
    cap = 3 * p.delta + 3
    cells = []
    for i in range(cap + 1):
        for j in range(cap + 1):
            tag = classify_1d(p, i, j)
            if tag is not None:
                cells.append(OneDeltaCell(i, j, tag))
    return OneDeltaTable(p, tuple(cells))


def is_twisted_pair(p1: ParameterSequence, p2: ParameterSequence) -> bool:
    """Cell positions of one table equal the transposed positions of the
    other.  Tags are not compared; the pairing is positional."""
    t1 = render_table(p1).positions
    t2 = render_table(p2).positions
    return t1 == frozenset((j, i) for i, j in t2)
