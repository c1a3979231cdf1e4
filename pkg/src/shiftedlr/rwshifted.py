"""The shifted analogue of the Remmel-Whitney construction: straight
tableaux over the doubled alphabet 1' < 1 < ... < n' < n built against
the shifted reverse filling of a skew shifted shape.

Candidates are grown letter by letter in a search tree; two placement
conditions come from the reverse filling (consecutive letters sharing a
row, and vertically adjacent cells), and two leaf conditions (row ends
unmarked, and a lattice condition on the rows re-sorted by the rotated
alphabet) cut the tree down to the model set.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .shapes import Shape, add_staircase, partition, staircase, strict_partition
from .tableaux import (Tableau, akey, from_cells, is_marked, letter_str,
                       letter_value, tableau)


def shifted_reverse_filling(shape: Shape) -> dict:
    """Number the cells 1.. top to bottom, right to left in each row."""
    if not shape.shifted:
        raise ValueError("expected a shifted shape")
    numbering = {}
    k = 1
    for r in range(1, len(shape.outer) + 1):
        for c in range(shape.col_end(r), shape.col_start(r) - 1, -1):
            numbering[(r, c)] = k
            k += 1
    return numbering


def _adjacency(shape: Shape):
    """same_row: numbers k with k+1 directly left of k; below: pairs
    (k, h) with h's cell directly below k's cell."""
    numbering = shifted_reverse_filling(shape)
    same_row = set()
    below = {}
    for (r, c), k in numbering.items():
        if numbering.get((r, c - 1)) == k + 1:
            same_row.add(k)
        h = numbering.get((r + 1, c))
        if h is not None:
            below[h] = k
    return same_row, below


def _row_of_letters(t: Tableau) -> dict:
    rows = {}
    for r, row in enumerate(t.rows, start=1):
        for letter in row:
            rows[letter_value(letter)] = (r, is_marked(letter))
    return rows


def consecutive_letter_ok(t: Tableau, shape: Shape) -> bool:
    """When k and k+1 share a row of the reverse filling, k+1 (primed or
    not) must sit weakly above an unmarked k and strictly above a marked
    one."""
    same_row, _ = _adjacency(shape)
    rows = _row_of_letters(t)
    for k in same_row:
        if k not in rows or k + 1 not in rows:
            continue
        rk, marked_k = rows[k]
        rk1, _ = rows[k + 1]
        if marked_k:
            if not rk1 < rk:
                return False
        elif not rk1 <= rk:
            return False
    return True


def below_letter_ok(t: Tableau, shape: Shape) -> bool:
    """When h's cell sits directly below k's in the reverse filling, h
    (primed or not) must sit weakly below a marked k and strictly below
    an unmarked one."""
    _, below = _adjacency(shape)
    rows = _row_of_letters(t)
    for h, k in below.items():
        if k not in rows or h not in rows:
            continue
        rk, marked_k = rows[k]
        rh, _ = rows[h]
        if marked_k:
            if not rh >= rk:
                return False
        elif not rh > rk:
            return False
    return True


def row_ends_unmarked(t: Tableau) -> bool:
    """The rightmost letter of every row is unmarked."""
    return all(not row or row[-1] > 0 for row in t.rows)


def _rotated_key(n: int):
    # alphabet 1 < 2 < ... < n < n' < ... < 2' < 1'
    def key(letter: int) -> int:
        return letter if letter > 0 else 2 * n + 1 + letter
    return key


def reordered_lattice_ok(t: Tableau) -> bool:
    """Re-sort each row by the rotated alphabet and test the three column
    and count conditions of the lattice criterion."""
    n = t.size
    key = _rotated_key(n)
    rows = [sorted(row, key=key) for row in t.rows]
    for r in range(1, len(rows)):
        for c in range(len(rows[r])):
            if key(rows[r - 1][c]) >= key(rows[r][c]):
                return False

    def count_below(row, threshold):
        return sum(1 for x in row if key(x) < threshold)

    for i in range(1, len(rows)):
        for letter in rows[i]:
            if letter < 0:
                thresh = key(-letter)
                if count_below(rows[i - 1], thresh) <= count_below(rows[i], thresh):
                    return False
    for i in range(len(rows)):
        lower = rows[i + 1] if i + 1 < len(rows) else ()
        for letter in rows[i]:
            if letter > 0:
                thresh = key(-letter)
                if count_below(rows[i], thresh) <= count_below(lower, thresh):
                    return False
    return True


@dataclass
class SearchNode:
    """One node of the candidate search tree (for dumping/inspection)."""

    rows: tuple
    children: list = field(default_factory=list)
    status: str = "internal"

    def pretty_rows(self) -> list:
        return [[letter_str(e) for e in row] for row in self.rows]

    def to_json(self) -> dict:
        return {"rows": self.pretty_rows(), "status": self.status,
                "children": [c.to_json() for c in self.children]}

    def render(self, indent: int = 0) -> str:
        label = " ".join("".join(letter_str(e) for e in row) + "|"
                         for row in self.rows).rstrip("|") or "(root)"
        lines = ["  " * indent + label +
                 ("" if self.status == "internal" else f"  [{self.status}]")]
        for child in self.children:
            lines.append(child.render(indent + 1))
        return "\n".join(lines)


def candidate_search(shape: Shape, shape_filter=None):
    """Grow all candidates for the given skew shifted shape.

    Returns (members, root): the surviving straight tableaux and the full
    search tree, with every leaf labelled member or rejected.
    """
    n = shape.size
    same_row, below = _adjacency(shape)
    if shape_filter is not None:
        shape_filter = partition(shape_filter)
        if sum(shape_filter) != n:
            return [], SearchNode((), [], "dead")

    members: list = []
    root = SearchNode((), [], "root")

    def leaf_status(t: Tableau) -> str:
        if not row_ends_unmarked(t):
            return "rejected: marked row end"
        if not reordered_lattice_ok(t):
            return "rejected: lattice reorder"
        return "member"

    def grow(rows: tuple, row_letters: dict, node: SearchNode, m: int):
        if m > n:
            t = tableau([list(r) for r in rows])
            node.status = leaf_status(t)
            if node.status == "member":
                members.append(t)
            return
        limit = len(rows) + 1
        if shape_filter is not None:
            limit = min(limit, len(shape_filter))
        for r in range(1, limit + 1):
            cur = len(rows[r - 1]) if r <= len(rows) else 0
            if r > 1 and len(rows[r - 2]) <= cur:
                continue
            if shape_filter is not None and cur >= shape_filter[r - 1]:
                continue
            if m - 1 in same_row and m - 1 in row_letters:
                rk, marked_k = row_letters[m - 1]
                if (marked_k and r >= rk) or (not marked_k and r > rk):
                    continue
            vertical = below.get(m)
            if vertical is not None:
                rk, marked_k = row_letters[vertical]
                if (marked_k and r < rk) or (not marked_k and r <= rk):
                    continue
            if r <= len(rows):
                base = rows[:r - 1]
                tail = rows[r:]
                grown = rows[r - 1]
            else:
                base, tail, grown = rows, (), ()
            for letter in (m, -m):
                new_rows = base + (grown + (letter,),) + tail
                child = SearchNode(new_rows)
                node.children.append(child)
                row_letters[m] = (r, letter < 0)
                grow(new_rows, row_letters, child, m + 1)
                del row_letters[m]

    if n > 0:
        grow((), {}, root, 1)
    else:
        root.status = "member"
        members.append(tableau([]))
    return members, root


def prune_tree(node: SearchNode):
    """Copy of the tree keeping only branches that reach a member."""
    kept = [prune_tree(c) for c in node.children]
    kept = [c for c in kept if c is not None]
    if not kept and node.status != "member":
        return None
    return SearchNode(node.rows, kept, node.status)


def candidate_tableaux(shape: Shape, shape_filter=None) -> list:
    """The model set for a skew shifted shape, optionally restricted to
    candidates of a given straight shape."""
    members, _ = candidate_search(shape, shape_filter)
    return members


def f_via_candidates(lam, mu, nu) -> int:
    """Shifted LR coefficient by counting shape-lam candidates."""
    lam = strict_partition(lam)
    mu, nu = strict_partition(mu), strict_partition(nu)
    from .shapes import contains
    if sum(mu) + sum(lam) != sum(nu) or not contains(nu, mu):
        return 0
    return len(candidate_tableaux(Shape(nu, mu, shifted=True), lam))


def g_via_candidates(lam, mu) -> int:
    """g through the staircase specialization of the candidate model."""
    lam, mu = strict_partition(lam), partition(mu)
    if sum(lam) != sum(mu):
        return 0
    delta = staircase(len(mu))
    return f_via_candidates(lam, delta, add_staircase(mu))


def from_skew_tableau(t: Tableau) -> Tableau:
    """Rewrite a lattice skew shifted tableau as a candidate: letter i of
    the word sends n+1-i (with i's mark) into the row named by its value."""
    word = t.word()
    n = len(word)
    rows: dict = {}
    for i, letter in enumerate(word, start=1):
        v = letter_value(letter)
        out = n + 1 - i
        rows.setdefault(v, []).append(-out if is_marked(letter) else out)
    if sorted(rows) != list(range(1, len(rows) + 1)):
        raise ValueError("word values must fill an initial of rows")
    ordered = [sorted(rows[v], key=akey) for v in range(1, len(rows) + 1)]
    return tableau(ordered)


def to_skew_tableau(candidate: Tableau, shape: Shape) -> Tableau:
    """Inverse rewrite: rebuild the skew shifted tableau of the given
    shape whose word the candidate encodes."""
    n = candidate.size
    if shape.size != n:
        raise ValueError("shape size does not match the candidate")
    word = [0] * n
    for r, row in enumerate(candidate.rows, start=1):
        for letter in row:
            j = letter_value(letter)
            word[n - j] = -r if is_marked(letter) else r
    cells = []
    for r in range(1, len(shape.outer) + 1):
        for c in range(shape.col_start(r), shape.col_end(r) + 1):
            cells.append((r, c))
    # the word reads rows bottom-to-top; cells are row-major top-to-bottom
    filling = {}
    pos = 0
    for r in range(len(shape.outer), 0, -1):
        length = shape.row_length(r)
        row_cells = [cell for cell in cells if cell[0] == r]
        for cell, letter in zip(row_cells, word[pos:pos + length]):
            filling[cell] = letter
        pos += length
    return from_cells(shape, filling)
