"""Pure numpy reference implementation of the resize kernels.

The native Cython backend mirrors this arithmetic exactly: same sample-point
convention (half-pixel centers, edge clamp), same tap order in the adjoint
scatter, so both backends produce bit-identical float64 results.
"""

import numpy as np


def _sample_grid(n_out: int, n_in: int):
    """Source coordinates for half-pixel-center bilinear sampling.

    Returns (i0, i1, w1) where the interpolated value along one axis is
    (1 - w1) * src[i0] + w1 * src[i1], with indices clamped to the edge.
    """
    x = (np.arange(n_out, dtype=np.float64) + 0.5) * (n_in / n_out) - 0.5
    x = np.clip(x, 0.0, n_in - 1.0)
    i0 = np.floor(x).astype(np.intp)
    i0 = np.minimum(i0, n_in - 1)
    i1 = np.minimum(i0 + 1, n_in - 1)
    w1 = x - i0
    return i0, i1, w1


def resize_bilinear(img: np.ndarray, out_h: int, out_w: int) -> np.ndarray:
    """Bilinear resize of an (H, W, C) float64 image."""
    img = np.ascontiguousarray(img, dtype=np.float64)
    in_h, in_w = img.shape[0], img.shape[1]
    if (out_h, out_w) == (in_h, in_w):
        return img.copy()
    y0, y1, wy = _sample_grid(out_h, in_h)
    x0, x1, wx = _sample_grid(out_w, in_w)
    wy = wy[:, None, None]
    wx = wx[None, :, None]
    top = img[y0][:, x0] * (1.0 - wx) + img[y0][:, x1] * wx
    bot = img[y1][:, x0] * (1.0 - wx) + img[y1][:, x1] * wx
    return top * (1.0 - wy) + bot * wy


def resize_bilinear_grad(grad: np.ndarray, in_h: int, in_w: int) -> np.ndarray:
    """Adjoint of resize_bilinear: scatter (out_h, out_w, C) grads back to (in_h, in_w, C).

    Accumulation runs tap by tap (four full passes over the output grid in
    row-major order), which the native backend replicates for bit-exactness.
    """
    grad = np.ascontiguousarray(grad, dtype=np.float64)
    out_h, out_w = grad.shape[0], grad.shape[1]
    if (out_h, out_w) == (in_h, in_w):
        return grad.copy()
    y0, y1, wy = _sample_grid(out_h, in_h)
    x0, x1, wx = _sample_grid(out_w, in_w)
    out = np.zeros((in_h, in_w, grad.shape[2]), dtype=np.float64)
    yy0, xx0 = np.meshgrid(y0, x0, indexing="ij")
    yy1, xx1 = np.meshgrid(y1, x1, indexing="ij")
    wyc = wy[:, None, None]
    wxc = wx[None, :, None]
    np.add.at(out, (yy0, xx0), grad * (1.0 - wyc) * (1.0 - wxc))
    np.add.at(out, (yy0, xx1), grad * (1.0 - wyc) * wxc)
    np.add.at(out, (yy1, xx0), grad * wyc * (1.0 - wxc))
    np.add.at(out, (yy1, xx1), grad * wyc * wxc)
    return out
