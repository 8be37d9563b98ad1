"""Kernel selection.

The compiled extension ``pinlab._kernels`` is used when it imports; otherwise
the pure-Python ``pinlab._kernels_py`` provides the same functions.  Setting
``PINLAB_PURE=1`` forces the Python path.
"""

import os

from . import _kernels_py

if os.environ.get("PINLAB_PURE"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _kernels_py

IMPLEMENTATION = _impl.IMPLEMENTATION
MAX_PACKED_N = 8

# augmentation kinds
LINEAR = _kernels_py.LINEAR
STRICT_LINEAR = _kernels_py.STRICT_LINEAR
STRICTIVE = _kernels_py.STRICTIVE
CORRECTIVE = _kernels_py.CORRECTIVE
NEG_STRICTIVE = _kernels_py.NEG_STRICTIVE

# property codes
P_LINEAR = _kernels_py.P_LINEAR
P_STRICT_LINEAR = _kernels_py.P_STRICT_LINEAR
P_STRICT = _kernels_py.P_STRICT
P_CORRECT = _kernels_py.P_CORRECT
P_NEG_STRICT = _kernels_py.P_NEG_STRICT
P_TRANSITIVE = _kernels_py.P_TRANSITIVE

closure = _impl.closure
is_transitive = _impl.is_transitive
augment = _impl.augment
prop_failure = _impl.prop_failure
brute_min = _impl.brute_min
endo_mask = _impl.endo_mask


def implementations():
    """Every importable implementation, keyed by name (for parity tests and benchmarks)."""
    out = {"python": _kernels_py}
    try:
        from . import _kernels as compiled  # type: ignore[attr-defined]
    except ImportError:
        pass
    else:
        out["cython"] = compiled
    return out
