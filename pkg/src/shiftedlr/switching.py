"""Tableau switching and the symmetry bijections built on it.

A perforated pair is two partial fillings of one skew shape that jointly
cover it.  Switching exchanges adjacent entries across the two sides
while both sides keep the perforated-tableau conditions; run to
exhaustion it moves one whole tableau through the other.  The result is
independent of the order of legal steps, which the tests exercise
directly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .shapes import Shape, partition
from .tableaux import Tableau, _require_unmarked, from_cells, superstandard

from . import lr


class IllegalSwitch(ValueError):
    """Requested swap would break a perforated-tableau condition."""


def _perforated_ok(cells: dict) -> bool:
    """(PT1) columns strictly increase; (PT2) every entry dominates all
    entries weakly northwest of it."""
    by_col: dict = {}
    for (r, c), e in cells.items():
        by_col.setdefault(c, []).append((r, e))
    for col in by_col.values():
        col.sort()
        for (_, e1), (_, e2) in zip(col, col[1:]):
            if e1 >= e2:
                return False
    items = sorted(cells.items())
    for i, ((r1, c1), e1) in enumerate(items):
        for (r2, c2), e2 in items[i + 1:]:
            if r1 <= r2 and c1 <= c2 and e1 > e2:
                return False
    return True


@dataclass(frozen=True)
class PerforatedPair:
    shape: Shape
    s_cells: tuple
    t_cells: tuple

    @classmethod
    def build(cls, shape: Shape, s_cells: dict, t_cells: dict):
        covered = set(s_cells) | set(t_cells)
        if set(s_cells) & set(t_cells) or covered != shape.cell_set():
            raise ValueError("sides must fill the shape without overlap")
        if not _perforated_ok(s_cells) or not _perforated_ok(t_cells):
            raise ValueError("a side violates the perforated conditions")
        return cls(shape, tuple(sorted(s_cells.items())),
                   tuple(sorted(t_cells.items())))

    def s_dict(self) -> dict:
        return dict(self.s_cells)

    def t_dict(self) -> dict:
        return dict(self.t_cells)


def _try_swap(s_cells: dict, t_cells: dict, s_cell, t_cell):
    """Swap one s entry with an adjacent t entry below or to its right;
    returns the new side dicts or None if a condition breaks."""
    dr = t_cell[0] - s_cell[0]
    dc = t_cell[1] - s_cell[1]
    if (dr, dc) not in ((0, 1), (1, 0)):
        return None
    new_s = dict(s_cells)
    new_t = dict(t_cells)
    new_s[t_cell] = new_s.pop(s_cell)
    new_t[s_cell] = new_t.pop(t_cell)
    if _perforated_ok(new_s) and _perforated_ok(new_t):
        return new_s, new_t
    return None


def switch_step(pair: PerforatedPair, s_cell, t_cell) -> PerforatedPair:
    """Perform a single legal switch; raises IllegalSwitch otherwise."""
    s_cells, t_cells = pair.s_dict(), pair.t_dict()
    if s_cell not in s_cells or t_cell not in t_cells:
        raise IllegalSwitch(f"cells {s_cell}, {t_cell} not on opposite sides")
    swapped = _try_swap(s_cells, t_cells, s_cell, t_cell)
    if swapped is None:
        raise IllegalSwitch(f"swap {s_cell} <-> {t_cell} is not legal")
    return PerforatedPair(pair.shape, tuple(sorted(swapped[0].items())),
                          tuple(sorted(swapped[1].items())))


def legal_steps(pair: PerforatedPair) -> list:
    """Every currently legal (s_cell, t_cell) step, row-major with the
    horizontal swap listed before the vertical one."""
    s_cells, t_cells = pair.s_dict(), pair.t_dict()
    steps = []
    for s_cell in sorted(s_cells):
        for t_cell in ((s_cell[0], s_cell[1] + 1), (s_cell[0] + 1, s_cell[1])):
            if t_cell in t_cells and _try_swap(s_cells, t_cells, s_cell,
                                               t_cell) is not None:
                steps.append((s_cell, t_cell))
    return steps


def run_switching(pair: PerforatedPair, choose=None) -> PerforatedPair:
    """Apply legal steps until none remain.  The default picks the first
    step in canonical order; pass `choose` to exercise other orders."""
    while True:
        steps = legal_steps(pair)
        if not steps:
            return pair
        step = steps[0] if choose is None else choose(steps)
        pair = switch_step(pair, *step)


def _side_to_tableau(shape: Shape, own: dict, at_inner: bool) -> Tableau:
    """Read one side of a finished pair off as a skew tableau.

    A row with no cells of this side is a zero-width strip pinned to the
    inner boundary of the union shape (for the side that ended up inside)
    or to the outer one.
    """
    outer, inner = [], []
    for r in range(1, len(shape.outer) + 1):
        lo, hi = shape.col_start(r), shape.col_end(r)
        own_cols = [c for c in range(lo, hi + 1) if (r, c) in own]
        if own_cols:
            if own_cols != list(range(own_cols[0], own_cols[0] + len(own_cols))):
                raise ValueError("side is not a contiguous skew row")
            inner.append(own_cols[0] - 1)
            outer.append(own_cols[-1])
        else:
            edge = shape.inner_part(r) if at_inner else shape.outer[r - 1]
            inner.append(edge)
            outer.append(edge)
    while outer and outer[-1] == 0:
        outer.pop()
        inner.pop()
    return from_cells(Shape(tuple(outer), tuple(inner)), own)


def switch(s: Tableau, t: Tableau):
    """Switch t (which must extend s) through s.

    Returns (tS, sT): the t side pulled to the inside and the s side
    pushed outside; rectifications are preserved and the map is an
    involution.
    """
    _require_unmarked(s)
    _require_unmarked(t)
    if s.shape.shifted or t.shape.shifted:
        raise ValueError("switching runs on classical skew tableaux")
    if partition(t.shape.inner) != partition(s.shape.outer):
        raise ValueError("t does not extend s")
    shape = Shape(t.shape.outer, s.shape.inner)
    pair = PerforatedPair.build(shape, s.cell_dict(), t.cell_dict())
    done = run_switching(pair)
    return (_side_to_tableau(shape, done.t_dict(), at_inner=True),
            _side_to_tableau(shape, done.s_dict(), at_inner=False))


def symmetry_map(s: Tableau, a0: Tableau) -> Tableau:
    """The switching bijection between rectification classes: send a skew
    tableau rectifying to some u0 to the one over a0's class on the
    complementary inner shape."""
    if not a0.is_straight() or a0.shape.outer != partition(s.shape.inner):
        raise ValueError("a0 must be straight of s's inner shape")
    _, s_t = switch(a0, s)
    return s_t


def pair_symmetry_map(pair, u0: Tableau, a0: Tableau, w0: Tableau):
    """Composite bijection between product-pair sets: through the skew
    model (insertion), across rectification classes (switching), and back
    (inverse insertion against w0)."""
    a, u = pair
    skew = lr.insertion_pair_to_skew(a, u, u0)
    swapped = symmetry_map(skew, a0)
    return lr.skew_to_insertion_pair(swapped, w0)
