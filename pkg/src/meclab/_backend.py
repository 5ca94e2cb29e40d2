"""Select the kernel implementation at import time.

The compiled extension is used when it was built and ``MECLAB_PURE`` is not
set to a true value; otherwise the pure-Python kernels are used.
"""
import os

from . import _kernels as python_kernels

compiled_kernels = None
try:
    from . import _ckernels as compiled_kernels
except ImportError:  # extension not built
    compiled_kernels = None

if os.environ.get("MECLAB_PURE", "").lower() in ("1", "true", "yes") or compiled_kernels is None:
    kernels = python_kernels
else:
    kernels = compiled_kernels

available = {"python": python_kernels}
if compiled_kernels is not None:
    available["compiled"] = compiled_kernels


def get(name=None):
    """Return the active kernel module, or the one called ``name``."""
    if name is None:
        return kernels
    try:
        return available[name]
    except KeyError:
        raise ValueError(f"unknown or unavailable backend {name!r}; have {sorted(available)}") from None
