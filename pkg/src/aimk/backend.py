"""Kernel backend selection.

The compiled extension is preferred when importable; set ``AIMK_PURE_PYTHON=1``
to force the NumPy fallback (both produce bit-identical results).
"""

import os

if os.environ.get("AIMK_PURE_PYTHON"):
    from aimk import _pykernels as _impl
else:
    try:
        from aimk import _ckernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from aimk import _pykernels as _impl

BACKEND = _impl.BACKEND
HAVE_COMPILED = BACKEND == "cython"

pairwise_dists = _impl.pairwise_dists
prim_mst = _impl.prim_mst
assign_nearest = _impl.assign_nearest
