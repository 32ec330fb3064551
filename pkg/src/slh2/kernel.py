"""Select the scalar kernel: compiled extension if built, else pure Python.

Set SLH2_PURE=1 to force the pure kernel even when the extension exists.
"""

import os

if os.environ.get("SLH2_PURE"):
    from . import _kernel_py as _impl

    KERNEL_BACKEND = "pure"
else:
    try:
        from . import _kernel_cy as _impl  # type: ignore[attr-defined]

        KERNEL_BACKEND = "cython"
    except ImportError:
        from . import _kernel_py as _impl

        KERNEL_BACKEND = "pure"

poly_add = _impl.poly_add
poly_sub = _impl.poly_sub
poly_neg = _impl.poly_neg
poly_mul = _impl.poly_mul
poly_scale = _impl.poly_scale
rad_add = _impl.rad_add
rad_sub = _impl.rad_sub
rad_neg = _impl.rad_neg
rad_mul = _impl.rad_mul
rad_scale = _impl.rad_scale
sqrt_split = _impl.sqrt_split
issquarefree = _impl.issquarefree
