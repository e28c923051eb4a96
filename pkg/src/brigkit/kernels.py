"""Kernel backend selection, resolved once at import.

Prefers the compiled extension (_kernels_c) and falls back to the pure
Python twin (_kernels_py) when the extension was not built.  Set
BRIGKIT_PURE=1 to force the pure backend regardless.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("BRIGKIT_PURE"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels_c as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

BACKEND: str = "compiled" if _impl is not _kernels_py else "pure"

lucas_u_pair = _impl.lucas_u_pair
lucas_uv = _impl.lucas_uv
term_at = _impl.term_at
term_window = _impl.term_window
term_iter = _impl.term_iter
zero_scan = _impl.zero_scan
real_growth_scan = _impl.real_growth_scan
nonreal_growth_scan = _impl.nonreal_growth_scan
lucas_growth_scan = _impl.lucas_growth_scan


def backend_name() -> str:
    return BACKEND
