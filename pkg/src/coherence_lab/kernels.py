"""Backend selection for the hot loops.

The compiled Cython module is used when it was built; otherwise the numpy
fallback is imported. Set ``COHERENCE_LAB_PURE_PYTHON=1`` to force the
fallback.
"""

import os

from . import _kernels_py

BACKENDS = {"python": _kernels_py}

try:
    from . import _kernels as _kernels_c
except ImportError:  # extension not built
    _kernels_c = None
else:
    BACKENDS["cython"] = _kernels_c

if _kernels_c is not None and os.environ.get("COHERENCE_LAB_PURE_PYTHON", "") in ("", "0"):
    BACKEND = "cython"
    _impl = _kernels_c
else:
    BACKEND = "python"
    _impl = _kernels_py

liouville_rhs = _impl.liouville_rhs
rk4_liouville = _impl.rk4_liouville
pdd_pair_sums = _impl.pdd_pair_sums
