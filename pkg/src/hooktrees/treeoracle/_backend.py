"""Select the enumeration kernel at import time.

The compiled Cython kernel is preferred when its extension module built;
otherwise the pure-Python twin takes over transparently.  Set
``HOOKTREES_BACKEND=python`` (or ``compiled``) to force a choice; forcing
the compiled kernel raises if the extension is missing.
"""

from __future__ import annotations

import os
from functools import lru_cache

_requested = os.environ.get("HOOKTREES_BACKEND", "auto").strip().lower()

if _requested in ("auto", ""):
    try:
        from . import _kernel as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _impl
elif _requested in ("compiled", "c", "ext"):
    from . import _kernel as _impl  # type: ignore[attr-defined]
elif _requested in ("python", "py", "pure"):
    from . import _kernel_py as _impl
else:
    raise RuntimeError(
        f"HOOKTREES_BACKEND={_requested!r} not recognized; "
        "use 'auto', 'compiled' or 'python'"
    )

BACKEND = _impl.BACKEND_NAME
MAX_SIZE = _impl.MAX_SIZE

signature_counts = _impl.signature_counts

# Weighted sums hit the same sizes repeatedly across families and weight
# tables; the dicts are treated as read-only by all callers.
signature_counts_cached = lru_cache(maxsize=32)(_impl.signature_counts)


def backend_name() -> str:
    """Which kernel is active: "compiled" or "python"."""
    return BACKEND
