"""Classical Littlewood-Richardson machinery.

Three mutually verifying routes to the coefficients: the Remmel-Whitney
enumeration of standard tableaux against the reverse filling of a skew
shape, the insertion bijection between skew tableaux and product pairs,
and a polynomial oracle that multiplies Schur polynomials and reads the
expansion greedily.
"""

from __future__ import annotations

from . import kernels
from .jdt import rsk_forward, rsk_inverse
from .shapes import Shape, contains, partition
from .tableaux import Tableau, from_cells, superstandard, tableau

_EXPANSION_GUARD = 10 ** 6


def reverse_filling(shape: Shape) -> dict:
    """Number the cells 1.. top to bottom, right to left in each row."""
    numbering = {}
    k = 1
    for r in range(1, len(shape.outer) + 1):
        for c in range(shape.col_end(r), shape.col_start(r) - 1, -1):
            numbering[(r, c)] = k
            k += 1
    return numbering


def _adjacency(shape: Shape):
    """Constraint tables read off the reverse filling.

    same_row: numbers k such that k and k+1 share a row (k+1 directly
    left of k).  below: pairs (k, h) with h's cell directly below k's.
    """
    numbering = reverse_filling(shape)
    cell_of = {k: cell for cell, k in numbering.items()}
    same_row = set()
    below = []
    for k, (r, c) in cell_of.items():
        if numbering.get((r, c - 1)) == k + 1:
            same_row.add(k)
        h = numbering.get((r + 1, c))
        if h is not None:
            below.append((k, h))
    return same_row, sorted(below, key=lambda kh: kh[1])


def remmel_whitney_tableaux(shape: Shape, shape_filter=None) -> list:
    """All standard Young tableaux built from the reverse filling of the
    given skew shape under the two Remmel-Whitney placement rules,
    optionally restricted to a target shape."""
    if shape.shifted:
        raise ValueError("Remmel-Whitney runs on classical skew shapes")
    n = shape.size
    same_row, below = _adjacency(shape)
    below_of = {}
    for k, h in below:
        below_of[h] = k
    if shape_filter is not None:
        shape_filter = partition(shape_filter)
        if sum(shape_filter) != n:
            return []
    lens: list = []
    row_of = [0] * (n + 1)
    col_of = [0] * (n + 1)
    out = []

    def emit():
        rows = [[] for _ in range(len(lens))]
        for m in range(1, n + 1):
            rows[row_of[m] - 1].append(m)
        out.append(tableau(rows))

    def rec(m):
        if m > n:
            emit()
            return
        limit = len(lens) + 1
        if shape_filter is not None:
            limit = min(limit, len(shape_filter))
        for r in range(1, limit + 1):
            cur = lens[r - 1] if r <= len(lens) else 0
            if r > 1 and lens[r - 2] <= cur:
                continue
            if shape_filter is not None and cur >= shape_filter[r - 1]:
                continue
            if m - 1 in same_row and r > row_of[m - 1]:
                continue
            k = below_of.get(m)
            if k is not None and not (r > row_of[k] and cur + 1 <= col_of[k]):
                continue
            if r > len(lens):
                lens.append(0)
            lens[r - 1] += 1
            row_of[m], col_of[m] = r, lens[r - 1]
            rec(m + 1)
            lens[r - 1] -= 1
            if lens and lens[-1] == 0:
                lens.pop()
        return

    if n == 0:
        return [tableau([])]
    rec(1)
    return out


def lr_coefficient(lam, mu, nu) -> int:
    """c_{lam,mu}^{nu} by Remmel-Whitney enumeration."""
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if sum(lam) + sum(mu) != sum(nu) or not contains(nu, lam):
        return 0
    return len(remmel_whitney_tableaux(Shape(nu, lam), shape_filter=mu))


def _skew_from_row_word(shape: Shape, standard: Tableau) -> Tableau:
    """Rebuild the skew tableau whose reading word lists, from the last
    letter down, the row index of each letter in the standard tableau."""
    n = shape.size
    row_in = {}
    for r, row in enumerate(standard.rows, start=1):
        for m in row:
            row_in[m] = r
    word = [row_in[k] for k in range(n, 0, -1)]
    rows = []
    pos = 0
    for r in range(len(shape.outer), 0, -1):
        length = shape.row_length(r)
        rows.append(tuple(word[pos:pos + length]))
        pos += length
    rows.reverse()
    return Tableau(shape, tuple(rows))


def rectifying_tableaux(shape: Shape, u0: Tableau) -> list:
    """All skew tableaux of the given shape that rectify to u0.

    For a superstandard u0 this is the Remmel-Whitney set with the rows
    rewritten as a reading word; any other u0 is reached through the
    switching bijection from the superstandard case.
    """
    if not u0.is_straight() or u0.shape.shifted:
        raise ValueError("the rectification target must be straight")
    alpha = u0.shape.outer
    if shape.size != sum(alpha):
        return []
    if u0 == superstandard(alpha):
        return [_skew_from_row_word(shape, t)
                for t in remmel_whitney_tableaux(shape, shape_filter=alpha)]
    from . import switching
    base_shape = Shape(shape.outer, alpha)
    mu_inner = shape.inner
    base = rectifying_tableaux(base_shape, superstandard(mu_inner))
    return [switching.symmetry_map(s, u0) for s in base]


def insertion_pair_to_skew(a: Tableau, u: Tableau, u0: Tableau) -> Tableau:
    """Send a product pair (a, u) with a.u = v0 to the skew tableau over
    a's shape that rectifies to u0: row-insert the letters coming out of
    the RSK array of (u0, u) into a, recording into the new boxes."""
    arr = rsk_inverse(u0, u)
    rows = [list(r) for r in a.rows]
    cells = {}
    for top, bottom in arr:
        r, c = kernels.row_insert_cell(rows, bottom)
        cells[(r, c)] = top
    outer = partition(len(row) for row in rows)
    return from_cells(Shape(outer, a.shape.outer), cells)


def skew_to_insertion_pair(s: Tableau, v0: Tableau, a_prime: Tableau | None = None):
    """Inverse of insertion_pair_to_skew.

    An auxiliary straight tableau on the inner shape is united with s,
    its letters ordered below every letter of s; inverse RSK against v0
    then splits into the two halves that rebuild (a, u).
    """
    lam = s.shape.inner
    if a_prime is None:
        a_prime = superstandard(lam)
    if a_prime.shape.outer != partition(lam):
        raise ValueError("auxiliary tableau must fill the inner shape")
    offset = max((v for row in a_prime.rows for v in row), default=0)
    q_cells = {cell: v for cell, v in a_prime.cell_dict().items()}
    for cell, v in s.cell_dict().items():
        if v <= 0:
            raise ValueError("skew tableau letters must be unmarked")
        q_cells[cell] = offset + v
    q = from_cells(Shape(s.shape.outer), q_cells)
    arr = rsk_inverse(q, v0)
    n = sum(lam)
    first, rest = arr[:n], arr[n:]
    if any(t > offset for t, _ in first) or any(t <= offset for t, _ in rest):
        raise ValueError("inner letters did not come first; invalid input")
    _, a = rsk_forward(first)
    _, u = rsk_forward([(t - offset, v) for t, v in rest])
    return a, u


def product_pairs(lam, mu, v0: Tableau) -> list:
    """All pairs (a, u) of shapes (lam, mu) whose product is v0."""
    lam, mu = partition(lam), partition(mu)
    if not v0.is_straight() or v0.shape.shifted:
        raise ValueError("the product target must be straight")
    nu = v0.shape.outer
    if sum(lam) + sum(mu) != sum(nu) or not contains(nu, lam):
        return []
    skews = rectifying_tableaux(Shape(nu, lam), superstandard(mu))
    return [skew_to_insertion_pair(s, v0) for s in skews]


# ---------------------------------------------------------------------------
# polynomial oracle

_SCHUR_CACHE: dict = {}


def _fillings_content(lam, n):
    """Yield the content vector of every semistandard filling of lam with
    entries at most n."""
    lam = partition(lam)
    if not lam:
        yield (0,) * n
        return
    if len(lam) > n:
        return

    rows_done = []

    def fill_row(r, prev_row, counts):
        if r == len(lam):
            yield tuple(counts)
            return
        length = lam[r]
        row = [0] * length

        def fill_cell(i, minval):
            if i == length:
                yield from fill_row(r + 1, row[:], counts)
                return
            lo = max(minval, prev_row[i] + 1 if prev_row else 1)
            for v in range(lo, n + 1):
                row[i] = v
                counts[v - 1] += 1
                yield from fill_cell(i + 1, v)
                counts[v - 1] -= 1

        yield from fill_cell(0, 1)

    yield from fill_row(0, None, [0] * n)


def schur_polynomial(lam, n: int) -> dict:
    """s_lam in n variables as a sparse map exponent-vector -> coefficient."""
    lam = partition(lam)
    key = (lam, n)
    if key in _SCHUR_CACHE:
        return _SCHUR_CACHE[key]
    poly: dict = {}
    for content in _fillings_content(lam, n):
        poly[content] = poly.get(content, 0) + 1
    _SCHUR_CACHE[key] = poly
    return poly


def poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return out


def schur_expand(poly: dict, n: int) -> dict:
    """Greedy expansion of a symmetric polynomial in the Schur basis:
    repeatedly subtract off the lexicographically largest term."""
    poly = {e: c for e, c in poly.items() if c}
    out = {}
    for _ in range(_EXPANSION_GUARD):
        if not poly:
            return out
        exp = max(poly)
        if any(exp[i] < exp[i + 1] for i in range(n - 1)):
            raise RuntimeError(f"leading exponent {exp} is not a partition; "
                               "input was not symmetric")
        coeff = poly[exp]
        tau = partition(exp)
        out[tau] = coeff
        for e, c in schur_polynomial(tau, n).items():
            new = poly.get(e, 0) - coeff * c
            if new:
                poly[e] = new
            else:
                poly.pop(e, None)
    raise RuntimeError("Schur expansion failed to terminate")


def schur_product_expansion(lam, mu, n: int | None = None) -> dict:
    """Expansion of s_lam * s_mu as {nu: coefficient}."""
    lam, mu = partition(lam), partition(mu)
    if n is None:
        n = max(len(lam) + len(mu), 1)
    prod = poly_mul(schur_polynomial(lam, n), schur_polynomial(mu, n))
    return schur_expand(prod, n)


def lr_oracle(lam, mu, nu, n: int | None = None) -> int:
    """c_{lam,mu}^{nu} through polynomial multiplication, fully
    independent of the tableau enumerations."""
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if sum(lam) + sum(mu) != sum(nu):
        return 0
    if n is None:
        n = max(len(nu), len(lam) + len(mu), 1)
    if n < len(nu):
        raise ValueError(f"need at least {len(nu)} variables for {nu}")
    return schur_product_expansion(lam, mu, n).get(nu, 0)
