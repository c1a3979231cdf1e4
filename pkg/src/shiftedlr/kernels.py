"""Kernel selection: compiled extension when available, else pure Python.

Set SHIFTEDLR_KERNEL=python to force the fallback (used by the benchmark
and the backend-equivalence tests).
"""

import os

from . import _kernels_py

if os.environ.get("SHIFTEDLR_KERNEL", "").lower() == "python":
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

row_insert_cell = _impl.row_insert_cell
insert_word = _impl.insert_word
insert_word_within = _impl.insert_word_within


def backend() -> str:
    return BACKEND
