# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled insertion kernels; mirrors _kernels_py exactly.

Rows are lists of plain positive ints (classical unmarked tableaux of
straight shape).
"""

from libc.stdlib cimport malloc, free


cdef struct Buf:
    int* cells
    int* lens
    int R
    int C


cdef int _buf_init(Buf* b, rows, int extra) except -1:
    cdef int width = 0
    cdef int r, i, n
    for row in rows:
        if len(row) > width:
            width = len(row)
    b.R = len(rows) + extra + 1
    b.C = width + extra + 1
    b.cells = <int*> malloc(b.R * b.C * sizeof(int))
    b.lens = <int*> malloc(b.R * sizeof(int))
    if b.cells == NULL or b.lens == NULL:
        if b.cells != NULL:
            free(b.cells)
        if b.lens != NULL:
            free(b.lens)
        raise MemoryError()
    for r in range(b.R):
        b.lens[r] = 0
    for r, row in enumerate(rows):
        n = len(row)
        b.lens[r] = n
        for i in range(n):
            b.cells[r * b.C + i] = row[i]
    return 0


cdef void _buf_free(Buf* b) noexcept:
    free(b.cells)
    free(b.lens)


cdef list _buf_rows(Buf* b):
    cdef int r, i
    out = []
    for r in range(b.R):
        if b.lens[r] == 0:
            break
        out.append([b.cells[r * b.C + i] for i in range(b.lens[r])])
    return out


cdef (int, int) _bump(Buf* b, int x) noexcept nogil:
    """Row-insert x; returns the 1-based (row, col) of the new box."""
    cdef int r = 0
    cdef int i, n, tmp, base
    while True:
        n = b.lens[r]
        base = r * b.C
        i = 0
        while i < n and b.cells[base + i] <= x:
            i += 1
        if i == n:
            b.cells[base + n] = x
            b.lens[r] = n + 1
            return (r + 1, n + 1)
        tmp = b.cells[base + i]
        b.cells[base + i] = x
        x = tmp
        r += 1


def row_insert_cell(rows, x):
    """Insert x into rows (mutating), returning the 1-based (r, c) of the
    new box."""
    cdef Buf b
    _buf_init(&b, rows, 1)
    try:
        r, c = _bump(&b, x)
        new_rows = _buf_rows(&b)
    finally:
        _buf_free(&b)
    for i in range(len(rows)):
        rows[i][:] = new_rows[i]
    for i in range(len(rows), len(new_rows)):
        rows.append(new_rows[i])
    return (r, c)


def insert_word(rows, word):
    """Insert every letter of word into a copy of rows; returns new rows."""
    cdef Buf b
    cdef int x
    _buf_init(&b, rows, len(word))
    try:
        for x in word:
            _bump(&b, x)
        return _buf_rows(&b)
    finally:
        _buf_free(&b)


def insert_word_within(rows, word, bound):
    """Like insert_word, but give up (return None) as soon as the shape
    leaves the partition `bound`."""
    cdef Buf b
    cdef int x, r, c
    cdef int nb = len(bound)
    cdef int i
    if len(rows) > nb:
        return None
    for i, row in enumerate(rows):
        if len(row) > bound[i]:
            return None
    _buf_init(&b, rows, len(word))
    try:
        for x in word:
            r, c = _bump(&b, x)
            if r > nb or c > <int> bound[r - 1]:
                return None
        return _buf_rows(&b)
    finally:
        _buf_free(&b)
