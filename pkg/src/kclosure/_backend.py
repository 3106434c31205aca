"""Select the kernel implementation at import time.

The compiled extension is used when it was built; setting
``KCLOSURE_PURE_PYTHON=1`` forces the pure-Python kernels.
"""

import os

from . import _pykernels

if os.environ.get("KCLOSURE_PURE_PYTHON", "") not in ("", "0"):
    kernels = _pykernels
else:
    try:
        from . import _ckernels as kernels
    except ImportError:
        kernels = _pykernels


def available():
    """Every importable kernel module, compiled first."""
    out = []
    try:
        from . import _ckernels
        out.append(_ckernels)
    except ImportError:
        pass
    out.append(_pykernels)
    return out
