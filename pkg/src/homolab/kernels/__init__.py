"""Hot kernels: a compiled extension when available, pure Python otherwise.

Set HOMOLAB_PURE=1 to force the fallback.
"""
import os

from . import _pure

BACKEND = "pure"
reduce_packed = _pure.reduce_packed

if not os.environ.get("HOMOLAB_PURE"):
    try:
        from . import _ckernels
    except ImportError:  # extension not built
        pass
    else:
        reduce_packed = _ckernels.reduce_packed
        BACKEND = "compiled"

__all__ = ["BACKEND", "reduce_packed"]
