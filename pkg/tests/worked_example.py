"""The fully worked 3-index instance used across the LR, switching, and
pair-model tests: lam=(3,2,1,1), mu=(4,2,1), nu=(6,4,2,1,1), with all
four members of each model set and the product target V0."""

from shiftedlr.tableaux import tableau

LAM = (3, 2, 1, 1)
MU = (4, 2, 1)
NU = (6, 4, 2, 1, 1)

O_SET = [
    tableau([[1, 2, 3, 7], [4, 5], [6]]),
    tableau([[1, 2, 3, 6], [4, 5], [7]]),
    tableau([[1, 2, 3, 5], [4, 6], [7]]),
    tableau([[1, 2, 3, 5], [4, 7], [6]]),
]

S_SET = [
    tableau([[1, 1, 1], [2, 2], [3], [], [1]], inner=LAM),
    tableau([[1, 1, 1], [2, 2], [1], [], [3]], inner=LAM),
    tableau([[1, 1, 1], [1, 2], [2], [], [3]], inner=LAM),
    tableau([[1, 1, 1], [1, 2], [3], [], [2]], inner=LAM),
]

V0 = tableau([[1, 1, 2, 3, 4, 5], [2, 6, 6, 7], [3, 7], [4], [5]])

PAIRS = [
    (tableau([[1, 2, 2], [3, 6], [4], [5]]),
     tableau([[1, 3, 4, 5], [6, 7], [7]])),
    (tableau([[1, 2, 6], [3, 7], [4], [5]]),
     tableau([[1, 3, 4, 5], [2, 7], [6]])),
    (tableau([[1, 2, 7], [3, 6], [4], [5]]),
     tableau([[1, 3, 4, 5], [2, 7], [6]])),
    (tableau([[1, 2, 7], [3, 6], [4], [5]]),
     tableau([[1, 3, 4, 5], [2, 6], [7]])),
]
