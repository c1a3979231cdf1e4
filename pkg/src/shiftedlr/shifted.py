"""Shifted tableaux: jeu de taquin, lattice words, Stembridge's rules for
the shifted structure constants f and the Schur-expansion coefficients g,
and the Schur Q polynomial oracle.

The lattice statistics follow the two displayed defining lines exactly:
one pass over the reversed word, one pass over the word, no
normalization.  Enumeration of marked fillings walks the cells top to
bottom and right to left within each row, which builds the reading word
from its last letter backwards and lets the first-pass lattice condition
and the unmarked-first-occurrence condition prune as early as possible.
"""

from __future__ import annotations

from . import jdt
from .shapes import Shape, contains, partition, strict_partition
from .tableaux import (Tableau, akey, from_cells, is_marked, letter_value,
                       shifted_rowstandard, standard_fillings)


def shifted_slide(t: Tableau, corner) -> Tableau:
    if not t.shape.shifted:
        raise ValueError("shifted_slide needs a shifted shape")
    return jdt.slide(t, corner)


def srect(t: Tableau, choose=None) -> Tableau:
    """Shifted rectification; slide-order independence is tested, not
    assumed."""
    if not t.shape.shifted:
        raise ValueError("srect needs a shifted shape")
    return jdt.rect(t, choose=choose)


def is_shifted_lattice_word(word) -> bool:
    """Stembridge's lattice condition on a word over the marked alphabet."""
    w = [int(x) for x in word]
    n = len(w)
    if n == 0:
        return True
    maxval = max(letter_value(x) for x in w)
    vals = range(2, maxval + 2)
    # first pass: walk the word from its last letter towards the first;
    # m[i] counts unmarked i among the letters already passed.
    m = [0] * (maxval + 3)
    for j in range(n):
        letter = w[n - 1 - j]
        v = letter_value(letter)
        if 2 <= v and m[v] == m[v - 1]:
            return False
        if letter > 0:
            m[letter] += 1
    # second pass: m[i] = total unmarked i plus marked i seen so far in a
    # left-to-right walk; the letter inspected sits one step ahead.
    for j in range(n):
        letter = w[j]
        for i in vals:
            if m[i] == m[i - 1] and (letter == i - 1 or letter == -i):
                return False
        if letter < 0:
            m[-letter] += 1
    return True


def _unmarked_first_ok(letter: int, remaining: int) -> bool:
    # placing the last copy of a value plants the leftmost letter of the
    # word; it must be unmarked
    return not (remaining == 0 and letter < 0)


def _marked_fillings(shape: Shape, content):
    """All fillings of the shape over the marked alphabet with the given
    content, valid as (skew) shifted tableaux, whose reading word has
    every value's leftmost letter unmarked and is a shifted lattice word.

    Yields cell dictionaries.
    """
    content = partition(content)
    if shape.size != sum(content):
        return
    cells = []
    for r in range(1, len(shape.outer) + 1):
        for c in range(shape.col_end(r), shape.col_start(r) - 1, -1):
            cells.append((r, c))
    n = len(cells)
    quota = list(content)
    nvals = len(content)
    filling: dict = {}
    m = [0] * (nvals + 2)

    def letter_fits(cell, letter) -> bool:
        r, c = cell
        right = filling.get((r, c + 1))
        if right is not None:
            if akey(letter) > akey(right):
                return False
            if letter == right and letter < 0:
                return False
        above = filling.get((r - 1, c))
        if above is not None:
            if akey(above) > akey(letter):
                return False
            if above == letter and letter > 0:
                return False
        return True

    def place(idx):
        if idx == n:
            word = [filling[cell] for cell in reversed(cells)]
            if is_shifted_lattice_word(word):
                yield dict(filling)
            return
        cell = cells[idx]
        for v in range(1, nvals + 1):
            if not quota[v - 1]:
                continue
            if v >= 2 and m[v] == m[v - 1]:
                continue
            for letter in (v, -v):
                if not _unmarked_first_ok(letter, quota[v - 1] - 1):
                    continue
                if not letter_fits(cell, letter):
                    continue
                filling[cell] = letter
                quota[v - 1] -= 1
                if letter > 0:
                    m[v] += 1
                yield from place(idx + 1)
                if letter > 0:
                    m[v] -= 1
                quota[v - 1] += 1
                del filling[cell]

    yield from place(0)


def stembridge_f_set(lam, mu, nu) -> list:
    """The skew shifted tableaux of shape nu/mu and content lam counted by
    the shifted Littlewood-Richardson rule."""
    lam = strict_partition(lam)
    mu, nu = strict_partition(mu), strict_partition(nu)
    if sum(mu) + sum(lam) != sum(nu) or not contains(nu, mu):
        return []
    shape = Shape(nu, mu, shifted=True)
    return [from_cells(shape, cells) for cells in _marked_fillings(shape, lam)]


def f_coefficient(lam, mu, nu) -> int:
    """The shifted Littlewood-Richardson coefficient f_{lam,mu}^{nu}."""
    return len(stembridge_f_set(lam, mu, nu))


def f_via_standard(lam, mu, nu) -> int:
    """f via standard fillings: count the standard skew shifted tableaux
    of shape nu/mu whose shifted rectification is the row-major standard
    tableau of shape lam."""
    lam = strict_partition(lam)
    mu, nu = strict_partition(mu), strict_partition(nu)
    if sum(mu) + sum(lam) != sum(nu) or not contains(nu, mu):
        return 0
    target = shifted_rowstandard(lam)
    shape = Shape(nu, mu, shifted=True)
    return sum(1 for t in standard_fillings(shape) if srect(t) == target)


def g_via_shape_tableaux(lam, mu) -> int:
    """g_{lam,mu}: marked fillings of the ordinary diagram of mu with
    content lam, under the same row/column and lattice conditions."""
    lam, mu = strict_partition(lam), partition(mu)
    if sum(lam) != sum(mu):
        return 0
    shape = Shape(mu)
    return sum(1 for _ in _marked_fillings(shape, lam))


# ---------------------------------------------------------------------------
# polynomial oracle

_Q_CACHE: dict = {}


def schur_q_polynomial(lam, n: int) -> dict:
    """Q_lam in n variables: sum of x^T over shifted tableaux of shape lam
    with values at most n, as a sparse map exponent-vector -> coefficient."""
    lam = strict_partition(lam)
    key = (lam, n)
    if key in _Q_CACHE:
        return _Q_CACHE[key]
    shape = Shape(lam, shifted=True)
    cells = list(shape.cells())
    filling: dict = {}
    poly: dict = {}
    counts = [0] * n

    def fits(cell, letter) -> bool:
        r, c = cell
        left = filling.get((r, c - 1))
        if left is not None:
            if akey(left) > akey(letter):
                return False
            if left == letter and letter < 0:
                return False
        above = filling.get((r - 1, c))
        if above is not None:
            if akey(above) > akey(letter):
                return False
            if above == letter and letter > 0:
                return False
        return True

    def place(idx):
        if idx == len(cells):
            e = tuple(counts)
            poly[e] = poly.get(e, 0) + 1
            return
        cell = cells[idx]
        for v in range(1, n + 1):
            for letter in (-v, v):
                if fits(cell, letter):
                    filling[cell] = letter
                    counts[v - 1] += 1
                    place(idx + 1)
                    counts[v - 1] -= 1
                    del filling[cell]

    place(0)
    _Q_CACHE[key] = poly
    return poly


def schur_p_expansion(lam) -> dict:
    """The Schur-basis row of the P function for lam: {mu: g_{lam,mu}},
    zero coefficients omitted."""
    lam = strict_partition(lam)
    from .shapes import enumerate_partitions
    out = {}
    for mu in enumerate_partitions(sum(lam)):
        g = g_via_shape_tableaux(lam, mu)
        if g:
            out[mu] = g
    return out


def p_expansion_to_json(expansion: dict) -> dict:
    return {",".join(str(x) for x in mu): g for mu, g in expansion.items()}
