"""Pick the kernel implementation at import time.

The compiled module is used when it was built; set
``RSWEIGHT_PURE_PYTHON=1`` to force the pure-Python kernels.
"""

import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels
if os.environ.get("RSWEIGHT_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels


def available_backends():
    out = {"python": _pykernels}
    try:
        from . import _ckernels
        out["cython"] = _ckernels
    except ImportError:
        pass
    return out


def kernels(name=None):
    if name is None:
        return _impl
    return available_backends()[name]
