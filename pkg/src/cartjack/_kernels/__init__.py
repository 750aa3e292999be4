"""Hot numeric kernels: bilinear image resize and its adjoint.

A compiled Cython implementation is preferred when available; a pure numpy
fallback with identical arithmetic (bit-exact, same accumulation order) is
selected otherwise. Set CARTJACK_PURE_PYTHON=1 to force the fallback.

Both backends expose:
    resize_bilinear(img, out_h, out_w)      -> (out_h, out_w, C) float64
    resize_bilinear_grad(grad, in_h, in_w)  -> (in_h, in_w, C) float64
"""

import os

from . import numpy_impl

_native = None
if not os.environ.get("CARTJACK_PURE_PYTHON"):
    try:
        from . import _native
    except ImportError:
        _native = None

if _native is not None:
    BACKEND = "native"
    resize_bilinear = _native.resize_bilinear
    resize_bilinear_grad = _native.resize_bilinear_grad
else:
    BACKEND = "numpy"
    resize_bilinear = numpy_impl.resize_bilinear
    resize_bilinear_grad = numpy_impl.resize_bilinear_grad

__all__ = ["BACKEND", "resize_bilinear", "resize_bilinear_grad", "numpy_impl"]
