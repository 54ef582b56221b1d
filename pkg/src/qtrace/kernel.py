"""Kernel selection: compiled extension when built, pure Python otherwise.

Set QTRACE_PURE=1 to force the pure-Python kernels (used by the benchmark and
by tests that assert both implementations agree).
"""

import os

if os.environ.get("QTRACE_PURE") == "1":
    from qtrace import _kernel_py as _impl

    BACKEND = "python"
else:
    try:
        from qtrace import _kernel as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from qtrace import _kernel_py as _impl

        BACKEND = "python"

BIG = _impl.BIG
convolve = _impl.convolve
add_scaled = _impl.add_scaled
clip_terms = _impl.clip_terms
