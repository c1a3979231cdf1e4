"""Pure-Python reference implementation of the hot insertion kernels.

The compiled module in _kernels.pyx implements the same three functions;
`shiftedlr.kernels` picks whichever is available.  Rows are lists of
plain positive ints (classical unmarked tableaux of straight shape).
"""

from bisect import bisect_right


def row_insert_cell(rows, x):
    """Insert x into rows (mutating), returning the (r, c) of the new box,
    1-based."""
    r = 0
    while r < len(rows):
        row = rows[r]
        i = bisect_right(row, x)
        if i == len(row):
            row.append(x)
            return (r + 1, len(row))
        x, row[i] = row[i], x
        r += 1
    rows.append([x])
    return (len(rows), 1)


def insert_word(rows, word):
    """Insert every letter of word into a copy of rows; returns new rows."""
    out = [list(r) for r in rows]
    for x in word:
        row_insert_cell(out, x)
    return out


def insert_word_within(rows, word, bound):
    """Like insert_word, but give up (return None) as soon as the shape
    leaves the partition `bound`."""
    out = [list(r) for r in rows]
    nb = len(bound)
    if len(out) > nb:
        return None
    for r, row in enumerate(out):
        if len(row) > bound[r]:
            return None
    for x in word:
        r, c = row_insert_cell(out, x)
        if r > nb or c > bound[r - 1]:
            return None
    return out
