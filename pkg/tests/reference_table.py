"""Frozen reference rows for the g/c table: (size, lam, mu, g, c).

Filtered to the cells with g > 1; order is size descending, lam lex
descending, mu lex ascending.
"""

ROWS = [
    (11, (9, 2), (3, 2, 1, 1, 1, 1, 1, 1), 2, 4),
    (11, (9, 2), (4, 2, 1, 1, 1, 1, 1), 2, 4),
    (11, (9, 2), (5, 2, 1, 1, 1, 1), 2, 4),
    (11, (9, 2), (6, 2, 1, 1, 1), 2, 4),
    (11, (9, 2), (7, 2, 1, 1), 2, 4),
    (11, (9, 2), (8, 2, 1), 2, 4),
    (11, (8, 3), (3, 2, 2, 1, 1, 1, 1), 2, 4),
    (11, (8, 3), (4, 2, 1, 1, 1, 1, 1), 2, 4),
    (11, (8, 3), (4, 2, 2, 1, 1, 1), 2, 4),
    (11, (8, 3), (4, 3, 1, 1, 1, 1), 2, 4),
    (11, (8, 3), (5, 2, 1, 1, 1, 1), 2, 4),
    (11, (8, 3), (5, 2, 2, 1, 1), 2, 4),
    (11, (8, 3), (5, 3, 1, 1, 1), 2, 4),
    (11, (8, 3), (6, 2, 1, 1, 1), 2, 4),
    (11, (8, 3), (6, 2, 2, 1), 2, 4),
    (11, (8, 3), (6, 3, 1, 1), 2, 4),
    (11, (8, 3), (7, 2, 1, 1), 2, 4),
    (11, (8, 3), (7, 3, 1), 2, 4),
    (11, (7, 4), (3, 2, 2, 2, 1, 1), 2, 4),
    (11, (7, 4), (4, 2, 2, 1, 1, 1), 2, 4),
    (11, (7, 4), (4, 2, 2, 2, 1), 2, 4),
    (11, (7, 4), (4, 3, 2, 1, 1), 2, 4),
    (11, (7, 4), (5, 2, 1, 1, 1, 1), 2, 4),
    (11, (7, 4), (5, 2, 2, 1, 1), 2, 4),
    (11, (7, 4), (5, 3, 1, 1, 1), 2, 4),
    (11, (7, 4), (5, 3, 2, 1), 2, 4),
    (11, (7, 4), (5, 4, 1, 1), 2, 4),
    (11, (7, 4), (6, 2, 1, 1, 1), 2, 4),
    (11, (7, 4), (6, 3, 1, 1), 2, 4),
    (11, (7, 4), (6, 4, 1), 2, 4),
    (11, (7, 3, 1), (3, 3, 2, 1, 1, 1), 2, 6),
    (11, (7, 3, 1), (4, 2, 2, 1, 1, 1), 2, 5),
    (11, (7, 3, 1), (4, 3, 1, 1, 1, 1), 2, 5),
    (11, (7, 3, 1), (4, 3, 2, 1, 1), 3, 13),
    (11, (7, 3, 1), (5, 2, 2, 1, 1), 2, 5),
    (11, (7, 3, 1), (5, 3, 1, 1, 1), 2, 5),
    (11, (7, 3, 1), (5, 3, 2, 1), 3, 13),
    (11, (7, 3, 1), (6, 2, 2, 1), 2, 5),
    (11, (7, 3, 1), (6, 3, 1, 1), 2, 5),
    (11, (7, 3, 1), (6, 3, 2), 2, 6),
    (11, (6, 4, 1), (3, 3, 2, 2, 1), 2, 6),
    (11, (6, 4, 1), (4, 2, 2, 2, 1), 2, 5),
    (11, (6, 4, 1), (4, 3, 2, 1, 1), 3, 14),
    (11, (6, 4, 1), (4, 3, 2, 2), 2, 7),
    (11, (6, 4, 1), (4, 3, 3, 1), 2, 4),
    (11, (6, 4, 1), (4, 4, 2, 1), 2, 7),
    (11, (6, 4, 1), (5, 2, 2, 1, 1), 2, 5),
    (11, (6, 4, 1), (5, 3, 1, 1, 1), 2, 5),
    (11, (6, 4, 1), (5, 3, 2, 1), 3, 14),
    (11, (6, 4, 1), (5, 4, 1, 1), 2, 5),
    (11, (6, 4, 1), (5, 4, 2), 2, 6),
    (11, (6, 3, 2), (4, 3, 2, 1, 1), 3, 10),
    (11, (6, 3, 2), (4, 3, 2, 2), 2, 4),
    (11, (6, 3, 2), (4, 3, 3, 1), 2, 5),
    (11, (6, 3, 2), (4, 4, 2, 1), 2, 4),
    (11, (6, 3, 2), (5, 3, 2, 1), 3, 10),
    (11, (5, 4, 2), (4, 3, 2, 1, 1), 2, 4),
    (11, (5, 4, 2), (4, 3, 2, 2), 2, 5),
    (11, (5, 4, 2), (4, 3, 3, 1), 2, 5),
    (11, (5, 4, 2), (4, 4, 2, 1), 2, 5),
    (11, (5, 4, 2), (5, 3, 2, 1), 2, 4),
    (10, (8, 2), (3, 2, 1, 1, 1, 1, 1), 2, 4),
    (10, (8, 2), (4, 2, 1, 1, 1, 1), 2, 4),
    (10, (8, 2), (5, 2, 1, 1, 1), 2, 4),
    (10, (8, 2), (6, 2, 1, 1), 2, 4),
    (10, (8, 2), (7, 2, 1), 2, 4),
    (10, (7, 3), (3, 2, 2, 1, 1, 1), 2, 4),
    (10, (7, 3), (4, 2, 1, 1, 1, 1), 2, 4),
    (10, (7, 3), (4, 2, 2, 1, 1), 2, 4),
    (10, (7, 3), (4, 3, 1, 1, 1), 2, 4),
    (10, (7, 3), (5, 2, 1, 1, 1), 2, 4),
    (10, (7, 3), (5, 2, 2, 1), 2, 4),
    (10, (7, 3), (5, 3, 1, 1), 2, 4),
    (10, (7, 3), (6, 2, 1, 1), 2, 4),
    (10, (7, 3), (6, 3, 1), 2, 4),
    (10, (6, 4), (3, 2, 2, 2, 1), 2, 4),
    (10, (6, 4), (4, 2, 2, 1, 1), 2, 4),
    (10, (6, 4), (4, 3, 2, 1), 2, 4),
    (10, (6, 4), (5, 2, 1, 1, 1), 2, 4),
    (10, (6, 4), (5, 3, 1, 1), 2, 4),
    (10, (6, 4), (5, 4, 1), 2, 4),
    (10, (6, 3, 1), (3, 3, 2, 1, 1), 2, 6),
    (10, (6, 3, 1), (4, 2, 2, 1, 1), 2, 5),
    (10, (6, 3, 1), (4, 3, 1, 1, 1), 2, 5),
    (10, (6, 3, 1), (4, 3, 2, 1), 3, 13),
    (10, (6, 3, 1), (5, 2, 2, 1), 2, 5),
    (10, (6, 3, 1), (5, 3, 1, 1), 2, 5),
    (10, (6, 3, 1), (5, 3, 2), 2, 6),
    (10, (5, 4, 1), (4, 3, 2, 1), 2, 7),
    (10, (5, 3, 2), (4, 3, 2, 1), 3, 9),
    (9, (7, 2), (3, 2, 1, 1, 1, 1), 2, 4),
    (9, (7, 2), (4, 2, 1, 1, 1), 2, 4),
    (9, (7, 2), (5, 2, 1, 1), 2, 4),
    (9, (7, 2), (6, 2, 1), 2, 4),
    (9, (6, 3), (3, 2, 2, 1, 1), 2, 4),
    (9, (6, 3), (4, 2, 1, 1, 1), 2, 4),
    (9, (6, 3), (4, 2, 2, 1), 2, 4),
    (9, (6, 3), (4, 3, 1, 1), 2, 4),
    (9, (6, 3), (5, 2, 1, 1), 2, 4),
    (9, (6, 3), (5, 3, 1), 2, 4),
    (9, (5, 3, 1), (3, 3, 2, 1), 2, 6),
    (9, (5, 3, 1), (4, 2, 2, 1), 2, 5),
    (9, (5, 3, 1), (4, 3, 1, 1), 2, 5),
    (9, (5, 3, 1), (4, 3, 2), 2, 6),
    (8, (6, 2), (3, 2, 1, 1, 1), 2, 4),
    (8, (6, 2), (4, 2, 1, 1), 2, 4),
    (8, (6, 2), (5, 2, 1), 2, 4),
    (8, (5, 3), (3, 2, 2, 1), 2, 4),
    (8, (5, 3), (4, 2, 1, 1), 2, 4),
    (8, (5, 3), (4, 3, 1), 2, 4),
    (7, (5, 2), (3, 2, 1, 1), 2, 4),
    (7, (5, 2), (4, 2, 1), 2, 4),
    (6, (4, 2), (3, 2, 1), 2, 4),
]
