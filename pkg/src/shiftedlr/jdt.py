"""Row-insertion, products, sliding / jeu de taquin, and the RSK
correspondence.

Sliding is implemented on cell dictionaries so the same engine serves
classical and shifted shapes; only the diagram geometry (in Shape)
differs.
"""

from __future__ import annotations

from bisect import bisect_left

from . import kernels
from .shapes import Shape, partition
from .tableaux import (ClassViolation, Tableau, _require_unmarked,
                       from_cells, tableau)


def _as_row_lists(t: Tableau) -> list:
    return [list(row) for row in t.rows]


def _straight(rows) -> Tableau:
    return tableau([list(r) for r in rows])


def row_insert(t: Tableau, x: int):
    """Row-insert the unmarked letter x into a straight-shape tableau.

    Returns (new tableau, (r, c) of the added box).
    """
    if not t.is_straight() or t.shape.shifted:
        raise ValueError("row insertion needs a straight Young tableau")
    if x <= 0:
        raise ClassViolation("cannot row-insert a marked letter")
    _require_unmarked(t)
    rows = _as_row_lists(t)
    box = kernels.row_insert_cell(rows, x)
    return _straight(rows), box


def product(t: Tableau, u: Tableau) -> Tableau:
    """The product tableau: insert the reading word of u into t."""
    for side in (t, u):
        if not side.is_straight() or side.shape.shifted:
            raise ValueError("product needs straight Young tableaux")
        _require_unmarked(side)
    rows = kernels.insert_word(_as_row_lists(t), list(u.word()))
    return _straight(rows)


def star(t: Tableau, u: Tableau) -> Tableau:
    """The skew tableau with u above-right of t.

    u keeps its rows, shifted right by the width of t; t sits below-left.
    """
    for side in (t, u):
        if not side.is_straight() or side.shape.shifted:
            raise ValueError("star composition needs straight tableaux")
    if not t.rows:
        return u
    if not u.rows:
        return t
    width = t.shape.outer[0]
    rows = tuple(u.rows) + tuple(t.rows)
    outer = tuple(width + p for p in u.shape.outer) + t.shape.outer
    inner = (width,) * len(u.rows)
    return Tableau(Shape(outer, inner), rows)


def inner_corners(shape: Shape) -> list:
    """Inner-corner cells of a skew shape, row-major order."""
    inner_cells = Shape(shape.inner, (), shape.shifted).cell_set()
    return [cell for cell in sorted(inner_cells)
            if (cell[0] + 1, cell[1]) not in inner_cells
            and (cell[0], cell[1] + 1) not in inner_cells]


def _shrink(parts: tuple, row: int) -> tuple:
    out = list(parts)
    out[row - 1] -= 1
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def slide(t: Tableau, corner: tuple) -> Tableau:
    """Execute one full slide path starting from the given inner corner."""
    _require_unmarked(t)
    if corner not in inner_corners(t.shape):
        raise ValueError(f"{corner} is not an inner corner of {t.shape}")
    cells = t.cell_dict()
    hole = corner
    while True:
        right = (hole[0], hole[1] + 1)
        below = (hole[0] + 1, hole[1])
        x = cells.get(right)
        y = cells.get(below)
        if x is None and y is None:
            break
        if y is None or (x is not None and x < y):
            cells[hole] = x
            del cells[right]
            hole = right
        else:
            cells[hole] = y
            del cells[below]
            hole = below
    shape = Shape(_shrink(t.shape.outer, hole[0]),
                  _shrink(t.shape.inner, corner[0]), t.shape.shifted)
    return from_cells(shape, cells)


def rect(t: Tableau, choose=None) -> Tableau:
    """Rectify by repeated sliding.

    Corners are taken in row-major order by default; pass `choose` (a
    function from the corner list to one corner) to exercise other
    orders.  The result is order-independent.
    """
    while True:
        corners = inner_corners(t.shape)
        if not corners:
            return t
        t = slide(t, corners[0] if choose is None else choose(corners))


def validate_lexicographic(pairs) -> list:
    """Check a two-rowed array for lexicographic order; returns it as a
    list of (top, bottom) pairs."""
    pairs = [(u, v) for u, v in pairs]
    for (u1, v1), (u2, v2) in zip(pairs, pairs[1:]):
        if u1 > u2 or (u1 == u2 and v1 > v2):
            raise ValueError("two-rowed array is not in lexicographic order")
    return pairs


def array_to_json(pairs) -> dict:
    return {"top": [u for u, _ in pairs], "bottom": [v for _, v in pairs]}


def array_from_json(data: dict) -> list:
    return list(zip(data["top"], data["bottom"]))


def rsk_forward(pairs):
    """RSK: lexicographic two-rowed array -> (Q, P) of the same shape.

    P is the insertion tableau of the bottom row, Q records the top row.
    """
    pairs = validate_lexicographic(pairs)
    p_rows: list = []
    q_cells: dict = {}
    for u, v in pairs:
        r, c = kernels.row_insert_cell(p_rows, v)
        q_cells[(r, c)] = u
    p = _straight(p_rows)
    return from_cells(p.shape, q_cells), p


def _reverse_insert(rows: list, r: int, c: int) -> int:
    """Undo an insertion whose bumping path ended at box (r, c); removes
    that box (mutating rows) and returns the letter that entered row 1."""
    if c != len(rows[r - 1]):
        raise ValueError("reverse insertion must start at a row end")
    x = rows[r - 1].pop()
    if not rows[r - 1] and r == len(rows):
        rows.pop()
    for i in range(r - 2, -1, -1):
        row = rows[i]
        j = bisect_left(row, x) - 1
        if j < 0:
            raise ValueError("invalid tableau pair for reverse insertion")
        x, row[j] = row[j], x
    return x


def rsk_inverse(q: Tableau, p: Tableau):
    """Invert RSK: recover the two-rowed array from (Q, P).

    Q may have repeated entries (a semistandard recording tableau); the
    box removed at each step is the rightmost one holding the largest
    entry.
    """
    if q.shape.outer != p.shape.outer or q.shape.inner or p.shape.inner:
        raise ValueError("RSK inverse needs two straight tableaux of the "
                         "same shape")
    q_cells = q.cell_dict()
    p_rows = _as_row_lists(p)
    out = []
    while q_cells:
        (r, c) = max(q_cells, key=lambda cell: (q_cells[cell], cell[1]))
        u = q_cells.pop((r, c))
        v = _reverse_insert(p_rows, r, c)
        out.append((u, v))
    out.reverse()
    return out
