"""Kernel dispatch: compiled extension if available, pure Python otherwise.

Set PLETHYSM_PURE_PYTHON=1 to force the fallback (used by the benchmark and
for debugging).
"""

import os

if os.environ.get("PLETHYSM_PURE_PYTHON"):
    from . import _fill_py as _impl
else:
    try:
        from . import _fill_cy as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _fill_py as _impl

IMPL = _impl.IMPL
fill_all_count = _impl.fill_all_count
fill_all_list = _impl.fill_all_list
fill_weight_histogram = _impl.fill_weight_histogram
fill_weighted = _impl.fill_weighted
