"""Tableaux over the marked alphabet 1' < 1 < 2' < 2 < ...

Letters are signed ints: +k is the unmarked letter k, -k is the marked
letter k'.  The alphabet order is given by `akey`, not by the raw int
order (which only agrees on unmarked letters).  Validity is checked by
predicates, never enforced at construction, because sliding and switching
pass through intentionally invalid states.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .shapes import Shape, conjugate, partition


class ClassViolation(ValueError):
    """A tableau was handed to an operation of the wrong class, e.g. a
    marked letter in a Young-tableau computation."""


def marked(value: int) -> int:
    if value <= 0:
        raise ValueError("letter values are positive")
    return -value


def unmarked(value: int) -> int:
    if value <= 0:
        raise ValueError("letter values are positive")
    return value


def letter_value(letter: int) -> int:
    return -letter if letter < 0 else letter


def is_marked(letter: int) -> bool:
    return letter < 0


def akey(letter: int) -> int:
    """Position in the order 1' < 1 < 2' < 2 < ...: k' -> 2k-1, k -> 2k."""
    return -2 * letter - 1 if letter < 0 else 2 * letter


def letter_str(letter: int) -> str:
    return f"{-letter}'" if letter < 0 else str(letter)


def parse_letter(token) -> int:
    """Accept ints (sign = mark) or strings like "3" / "3'"."""
    if isinstance(token, int):
        if token == 0:
            raise ValueError("0 is not a letter")
        return token
    text = str(token).strip()
    if text.endswith("'") or text.endswith("′"):
        return -int(text[:-1])
    return int(text)


@dataclass(frozen=True)
class Tableau:
    """A filling of a (possibly skew, possibly shifted) shape.

    rows[r-1] lists the letters of row r left to right; empty rows are
    kept so row indices always match diagram rows.
    """

    shape: Shape
    rows: tuple

    def __post_init__(self):
        if len(self.rows) != len(self.shape.outer):
            raise ValueError("row count does not match shape")
        for r, row in enumerate(self.rows, start=1):
            if len(row) != self.shape.row_length(r):
                raise ValueError(f"row {r} has {len(row)} entries, "
                                 f"shape wants {self.shape.row_length(r)}")

    @property
    def size(self) -> int:
        return self.shape.size

    def is_straight(self) -> bool:
        return self.shape.is_straight()

    def entry(self, r: int, c: int) -> int:
        """Letter at 1-based cell (r, c)."""
        return self.rows[r - 1][c - self.shape.col_start(r)]

    def cell_dict(self) -> dict:
        return {(r, c): self.entry(r, c) for r, c in self.shape.cells()}

    def cells(self) -> Iterator[tuple]:
        return self.shape.cells()

    def word(self) -> tuple:
        """Reading word: rows left to right, bottom row first."""
        out = []
        for row in reversed(self.rows):
            out.extend(row)
        return tuple(out)

    def content(self) -> tuple:
        """counts[i-1] = number of letters of value i, marked or not."""
        counts = {}
        for row in self.rows:
            for letter in row:
                v = letter_value(letter)
                counts[v] = counts.get(v, 0) + 1
        if not counts:
            return ()
        return tuple(counts.get(i, 0) for i in range(1, max(counts) + 1))

    def to_json(self) -> dict:
        return {
            "shape": self.shape.to_json(),
            "rows": [[{"v": letter_value(e), "m": is_marked(e)} for e in row]
                     for row in self.rows],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Tableau":
        shape = Shape.from_json(data["shape"])
        rows = tuple(tuple(-e["v"] if e.get("m") else e["v"] for e in row)
                     for row in data["rows"])
        return cls(shape, rows)

    def render(self) -> str:
        """Paper-style text diagram; inner cells print as dots."""
        if not self.shape.outer:
            return "(empty)"
        width = max((len(letter_str(e)) for row in self.rows for e in row),
                    default=1)
        width = max(width, 1)
        lines = []
        for r in range(1, len(self.rows) + 1):
            pad = self.shape.col_start(r) - 1
            cells = ["." .rjust(width)] * pad
            cells += [letter_str(e).rjust(width) for e in self.rows[r - 1]]
            lines.append(" ".join(cells).rstrip())
        return "\n".join(lines)

    def __str__(self):
        return self.render()

    def __repr__(self):
        pretty = [[letter_str(e) for e in row] for row in self.rows]
        if self.shape.inner or self.shape.shifted:
            return (f"Tableau({pretty}, inner={self.shape.inner}, "
                    f"shifted={self.shape.shifted})")
        return f"Tableau({pretty})"


def tableau(rows: Iterable, inner: tuple = (), shifted: bool = False) -> Tableau:
    """Build a tableau from pretty rows; outer shape is inferred.

    Entries may be ints (negative = marked) or strings like "2'".
    """
    parsed = tuple(tuple(parse_letter(e) for e in row) for row in rows)
    inner = partition(inner)
    outer = []
    for r, row in enumerate(parsed, start=1):
        pad = inner[r - 1] if r <= len(inner) else 0
        outer.append(pad + len(row))
    shape = Shape(tuple(outer), inner, shifted)
    return Tableau(shape, parsed)


def from_cells(shape: Shape, cells: dict) -> Tableau:
    """Assemble a Tableau from a 1-based cell -> letter mapping."""
    rows = []
    for r in range(1, len(shape.outer) + 1):
        row = []
        for c in range(shape.col_start(r), shape.col_end(r) + 1):
            if (r, c) not in cells:
                raise ValueError(f"cell {(r, c)} missing from filling")
            row.append(cells[(r, c)])
        rows.append(tuple(row))
    return Tableau(shape, tuple(rows))


EMPTY = tableau([])


def _require_unmarked(t: Tableau):
    for row in t.rows:
        for e in row:
            if e < 0:
                raise ClassViolation(f"marked letter {letter_str(e)} in a "
                                     "Young-class tableau")


def is_semistandard_young(t: Tableau) -> bool:
    """Rows weakly increase, columns strictly increase; unmarked only."""
    if t.shape.shifted:
        raise ClassViolation("Young-class check on a shifted shape")
    _require_unmarked(t)
    cells = t.cell_dict()
    for (r, c), e in cells.items():
        left = cells.get((r, c - 1))
        if left is not None and left > e:
            return False
        above = cells.get((r - 1, c))
        if above is not None and above >= e:
            return False
    return True


def is_valid_shifted(t: Tableau) -> bool:
    """Rows and columns weakly increase; marked letters strictly increase
    along rows, unmarked letters strictly increase down columns."""
    cells = t.cell_dict()
    for (r, c), e in cells.items():
        left = cells.get((r, c - 1))
        if left is not None:
            if akey(left) > akey(e):
                return False
            if left == e and is_marked(e):
                return False
        above = cells.get((r - 1, c))
        if above is not None:
            if akey(above) > akey(e):
                return False
            if above == e and not is_marked(e):
                return False
    return True


def is_standard(t: Tableau) -> bool:
    """The word is a permutation of 1..n (all letters unmarked)."""
    letters = sorted(t.word())
    return letters == list(range(1, t.size + 1))


def transpose(t: Tableau) -> Tableau:
    """Reflect a standard skew Young tableau through the main diagonal."""
    if t.shape.shifted:
        raise ClassViolation("cannot transpose a shifted tableau")
    _require_unmarked(t)
    cells = {(c, r): e for (r, c), e in t.cell_dict().items()}
    shape = Shape(conjugate(t.shape.outer), conjugate(t.shape.inner))
    return from_cells(shape, cells)


def superstandard(mu: tuple) -> Tableau:
    """The tableau of shape mu whose row k is filled with k."""
    mu = partition(mu)
    return tableau([[k] * mu[k - 1] for k in range(1, len(mu) + 1)])


def shifted_rowstandard(lam: tuple) -> Tableau:
    """Standard shifted tableau of shape lam filled row-major with 1..n."""
    rows = []
    nxt = 1
    for part in partition(lam):
        rows.append(list(range(nxt, nxt + part)))
        nxt += part
    return tableau(rows, shifted=True)


def standard_fillings(shape: Shape) -> Iterator[Tableau]:
    """All standard fillings of a (skew, possibly shifted) shape: each of
    1..n placed once, rows and columns strictly increasing."""
    cells = sorted(shape.cell_set())
    cellset = set(cells)
    n = len(cells)
    filling: dict = {}

    def rec(k):
        if k > n:
            yield from_cells(shape, dict(filling))
            return
        for cell in cells:
            if cell in filling:
                continue
            r, c = cell
            if (r, c - 1) in cellset and (r, c - 1) not in filling:
                continue
            if (r - 1, c) in cellset and (r - 1, c) not in filling:
                continue
            filling[cell] = k
            yield from rec(k + 1)
            del filling[cell]

    yield from rec(1)
