"""Backend selection for the list-coloring search kernel.

The compiled extension is used when it was built and the instance fits in
64-bit masks; otherwise the pure-Python search runs.  Setting
``LFEC_PURE_PYTHON=1`` forces the fallback.
"""

from __future__ import annotations

import os
from typing import Sequence

from . import _kernel_py

FOUND = _kernel_py.FOUND
INFEASIBLE = _kernel_py.INFEASIBLE
BUDGET = _kernel_py.BUDGET

_compiled = None
if os.environ.get("LFEC_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernel as _compiled  # type: ignore[no-redef]
    except ImportError:
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"


def search(
    adj: Sequence[int], allowed: Sequence[int], budget: int = -1, backend: str | None = None
) -> tuple[int, list[int], int]:
    """Find a list coloring: ``(status, colors, nodes)``.

    ``status`` is ``FOUND``, ``INFEASIBLE`` or ``BUDGET`` (node budget hit).
    """
    use = backend or BACKEND
    if use == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernel is not available")
        if len(adj) <= 64 and all(a >> 64 == 0 for a in allowed):
            return _compiled.search(list(adj), list(allowed), budget)
    return _kernel_py.search(adj, allowed, budget)
