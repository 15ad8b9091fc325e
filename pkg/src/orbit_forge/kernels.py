"""Backend selection for the ascent kernels.

Prefers the compiled extension; falls back to the numpy implementation when
the extension is missing or when ORBIT_FORGE_PURE_PYTHON=1 is set.  Both
backends share one contract, so callers only import from here.
"""

from __future__ import annotations

import os

from . import _ascent_py

if os.environ.get("ORBIT_FORGE_PURE_PYTHON") == "1":
    _impl = _ascent_py
else:
    try:
        from . import _ascent as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _ascent_py

BACKEND: str = _impl.BACKEND

so_ascent = _impl.so_ascent
sp_ascent = _impl.sp_ascent

# projection/value helpers are only defined in the reference implementation
so_value = _ascent_py.so_value
sp_value = _ascent_py.sp_value
so_project = _ascent_py.so_project
sp_project = _ascent_py.sp_project


def available_backends() -> dict:
    """Map of importable backend name -> module, for the benchmark."""
    out = {"python": _ascent_py}
    try:
        from . import _ascent  # noqa: PLC0415

        out["cython"] = _ascent
    except ImportError:
        pass
    return out
