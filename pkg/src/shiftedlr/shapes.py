"""Integer partitions, strict partitions, and skew/shifted shapes.

Partitions are plain tuples of positive ints, weakly decreasing, stored
without trailing zeros.  All (row, column) coordinates in this package are
1-based, matching the usual diagram conventions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


def partition(parts: Iterable[int]) -> tuple:
    """Canonicalize an iterable into a partition tuple.

    Trailing zeros are stripped; anything not weakly decreasing and
    positive raises ValueError.
    """
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    for i, x in enumerate(p):
        if x <= 0:
            raise ValueError(f"partition parts must be positive: {p}")
        if i > 0 and p[i - 1] < x:
            raise ValueError(f"parts must be weakly decreasing: {p}")
    return p


def is_strict(p: tuple) -> bool:
    return all(p[i] > p[i + 1] for i in range(len(p) - 1))


def strict_partition(parts: Iterable[int]) -> tuple:
    p = partition(parts)
    if not is_strict(p):
        raise ValueError(f"parts must be strictly decreasing: {p}")
    return p


def contains(outer: tuple, inner: tuple) -> bool:
    """Componentwise containment, padding the shorter with zeros."""
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def conjugate(p: tuple) -> tuple:
    """Diagonal reflection: result_j = #{i : p_i >= j}."""
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= j) for j in range(1, p[0] + 1))


def staircase(length: int) -> tuple:
    """(length, length-1, ..., 1)."""
    if length < 0:
        raise ValueError("length must be nonnegative")
    return tuple(range(length, 0, -1))


def add_staircase(mu: tuple) -> tuple:
    """Componentwise sum of mu with the staircase of the same length.

    The result is always strictly decreasing.
    """
    mu = partition(mu)
    l = len(mu)
    return tuple(mu[i] + (l - i) for i in range(l))


def doubled_shape(lam: tuple) -> tuple:
    """Union of the shifted diagram of a strict partition with its diagonal
    reflection, diagonal cells duplicated horizontally.

    Row i of the result holds lam_i + i cells for i <= len(lam); the lower
    rows are the reflected tail.  The total size is 2*|lam|.
    """
    lam = strict_partition(lam)
    if not lam:
        return ()
    rows = []
    for i in range(1, lam[0] + 1):
        upper = lam[i - 1] if i <= len(lam) else 0
        lower = sum(1 for j in range(1, min(i, len(lam)) + 1)
                    if lam[j - 1] >= i - j + 1)
        length = upper + lower
        if length == 0:
            break
        rows.append(length)
    return tuple(rows)


def enumerate_partitions(n: int, max_len: int | None = None) -> list:
    """All partitions of n in lexicographic-descending order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []

    def rec(rest, largest, prefix, room):
        if rest == 0:
            out.append(tuple(prefix))
            return
        if room == 0:
            return
        for part in range(min(rest, largest), 0, -1):
            prefix.append(part)
            rec(rest - part, part, prefix, room - 1)
            prefix.pop()

    rec(n, n, [], n if max_len is None else max_len)
    return out


def enumerate_strict_partitions(n: int) -> list:
    """All strict partitions of n in lexicographic-descending order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []

    def rec(rest, largest, prefix):
        if rest == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(rest, largest), 0, -1):
            prefix.append(part)
            rec(rest - part, part - 1, prefix)
            prefix.pop()

    rec(n, n, [])
    return out


@dataclass(frozen=True)
class Shape:
    """A skew shape outer/inner, classical or shifted.

    Classical row r (1-based) occupies columns inner_r+1 .. outer_r.
    Shifted row r occupies columns r+inner_r .. r+outer_r-1, so strict
    partitions are required in the shifted case.
    """

    outer: tuple
    inner: tuple = ()
    shifted: bool = False

    def __post_init__(self):
        object.__setattr__(self, "outer", partition(self.outer))
        object.__setattr__(self, "inner", partition(self.inner))
        if self.shifted:
            if not is_strict(self.outer) or not is_strict(self.inner):
                raise ValueError("shifted shapes need strict partitions")
        if not contains(self.outer, self.inner):
            raise ValueError(
                f"inner {self.inner} not contained in outer {self.outer}")

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def inner_part(self, r: int) -> int:
        return self.inner[r - 1] if r <= len(self.inner) else 0

    def row_length(self, r: int) -> int:
        return self.outer[r - 1] - self.inner_part(r)

    def col_start(self, r: int) -> int:
        """Column of the first (leftmost) cell of row r."""
        base = self.inner_part(r) + 1
        return base + (r - 1) if self.shifted else base

    def col_end(self, r: int) -> int:
        base = self.outer[r - 1]
        return base + (r - 1) if self.shifted else base

    def cells(self) -> Iterator[tuple]:
        """Row-major iteration over 1-based (row, column) cells."""
        for r in range(1, len(self.outer) + 1):
            for c in range(self.col_start(r), self.col_end(r) + 1):
                yield (r, c)

    def cell_set(self) -> set:
        return set(self.cells())

    def is_straight(self) -> bool:
        return not self.inner

    def to_json(self) -> dict:
        data = {"outer": list(self.outer), "inner": list(self.inner)}
        if self.shifted:
            data["shifted"] = True
        return data

    @classmethod
    def from_json(cls, data: dict) -> "Shape":
        return cls(tuple(data["outer"]), tuple(data.get("inner", ())),
                   bool(data.get("shifted", False)))


def parse_partition(text: str) -> tuple:
    """Parse the CLI syntax '5,2' (empty string = empty partition)."""
    text = text.strip()
    if not text or text == "-":
        return ()
    try:
        return partition(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ValueError(f"malformed partition {text!r}: {exc}") from None


def format_partition(p: tuple) -> str:
    return ",".join(str(x) for x in p)
