"""Backend selection for the F_p elimination kernels.

Prefers the compiled extension; falls back to the pure-Python twin.
Set EPWCALC_NO_EXT=1 to force the pure backend (used by the benchmark
and by tests that compare the two).
"""

import os

if os.environ.get("EPWCALC_NO_EXT"):
    from . import _fp_pure as impl
else:
    try:
        from . import _fp_cy as impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _fp_pure as impl

BACKEND = impl.BACKEND

fp_rank = impl.rank
fp_rref = impl.rref
fp_det = impl.det
