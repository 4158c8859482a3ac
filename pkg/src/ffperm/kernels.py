"""Backend selection for the table kernels.

The compiled ``_kernels`` extension is used when it was built; otherwise the
numpy implementation in ``_kernels_py`` is used.  Setting the environment
variable ``FFPERM_PURE_PYTHON=1`` forces the fallback.
"""

import os

from . import _kernels_py

if os.environ.get("FFPERM_PURE_PYTHON"):
    compiled = None
else:
    try:
        from . import _kernels as compiled
    except ImportError:  # extension not built
        compiled = None

impl = compiled if compiled is not None else _kernels_py
BACKEND = "cython" if compiled is not None else "python"

add = impl.add
neg = impl.neg
mul = impl.mul
scale = impl.scale
power = impl.power
poly_eval = impl.poly_eval
sum_all = impl.sum_all
interpolate = impl.interpolate
invert_permutation = impl.invert_permutation
fibers_injective = impl.fibers_injective
exp_table = impl.exp_table


def backends():
    """Mapping name -> kernel module for every backend available here."""
    out = {"python": _kernels_py}
    if compiled is not None:
        out["cython"] = compiled
    return out
