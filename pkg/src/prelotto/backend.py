"""Select the grid-scan kernel implementation at import time.

The compiled extension is preferred when it imported cleanly; the numpy
fallback is bit-identical and is used otherwise.  Set ``PRELOTTO_PURE=1`` to
force the fallback (the benchmark suite uses this to compare both).
"""

from __future__ import annotations

import os

from . import _reference

_FORCE_PURE = os.environ.get("PRELOTTO_PURE", "").strip().lower() in {"1", "true", "yes"}

if not _FORCE_PURE:
    try:
        from . import _speedups as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _reference
        BACKEND = "python"
else:
    _impl = _reference
    BACKEND = "python"

split_scan = _impl.split_scan
precommit_gain_scan = _impl.precommit_gain_scan
lotto_payoff_kernel = _impl.lotto_payoff
