# cython: boundscheck=False, wraparound=False, cdivision=True
"""Native bilinear resize kernels, arithmetic-identical to numpy_impl."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


cdef void _fill_grid(Py_ssize_t n_out, Py_ssize_t n_in,
                     Py_ssize_t* i0, Py_ssize_t* i1, double* w1):
    cdef Py_ssize_t i
    cdef double x
    for i in range(n_out):
        x = (i + 0.5) * (<double>n_in / <double>n_out) - 0.5
        if x < 0.0:
            x = 0.0
        elif x > n_in - 1.0:
            x = n_in - 1.0
        i0[i] = <Py_ssize_t>x
        if i0[i] > n_in - 1:
            i0[i] = n_in - 1
        i1[i] = i0[i] + 1
        if i1[i] > n_in - 1:
            i1[i] = n_in - 1
        w1[i] = x - <double>i0[i]


def resize_bilinear(img, Py_ssize_t out_h, Py_ssize_t out_w):
    """Bilinear resize of an (H, W, C) float64 image."""
    cdef cnp.ndarray[cnp.float64_t, ndim=3] src = \
        np.ascontiguousarray(img, dtype=np.float64)
    cdef Py_ssize_t in_h = src.shape[0]
    cdef Py_ssize_t in_w = src.shape[1]
    cdef Py_ssize_t nc = src.shape[2]
    if out_h == in_h and out_w == in_w:
        return src.copy()

    cdef cnp.ndarray[cnp.float64_t, ndim=3] out = \
        np.empty((out_h, out_w, nc), dtype=np.float64)
    cdef cnp.ndarray[cnp.intp_t, ndim=1] y0 = np.empty(out_h, dtype=np.intp)
    cdef cnp.ndarray[cnp.intp_t, ndim=1] y1 = np.empty(out_h, dtype=np.intp)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] wy = np.empty(out_h, dtype=np.float64)
    cdef cnp.ndarray[cnp.intp_t, ndim=1] x0 = np.empty(out_w, dtype=np.intp)
    cdef cnp.ndarray[cnp.intp_t, ndim=1] x1 = np.empty(out_w, dtype=np.intp)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] wx = np.empty(out_w, dtype=np.float64)
    _fill_grid(out_h, in_h, <Py_ssize_t*>y0.data, <Py_ssize_t*>y1.data,
               <double*>wy.data)
    _fill_grid(out_w, in_w, <Py_ssize_t*>x0.data, <Py_ssize_t*>x1.data,
               <double*>wx.data)

    cdef Py_ssize_t oy, ox, c
    cdef double top, bot
    for oy in range(out_h):
        for ox in range(out_w):
            for c in range(nc):
                # match numpy_impl: horizontal lerp first, vertical second
                top = src[y0[oy], x0[ox], c] * (1.0 - wx[ox]) + \
                      src[y0[oy], x1[ox], c] * wx[ox]
                bot = src[y1[oy], x0[ox], c] * (1.0 - wx[ox]) + \
                      src[y1[oy], x1[ox], c] * wx[ox]
                out[oy, ox, c] = top * (1.0 - wy[oy]) + bot * wy[oy]
    return out


def resize_bilinear_grad(grad, Py_ssize_t in_h, Py_ssize_t in_w):
    """Adjoint of resize_bilinear; tap order matches numpy_impl exactly."""
    cdef cnp.ndarray[cnp.float64_t, ndim=3] g = \
        np.ascontiguousarray(grad, dtype=np.float64)
    cdef Py_ssize_t out_h = g.shape[0]
    cdef Py_ssize_t out_w = g.shape[1]
    cdef Py_ssize_t nc = g.shape[2]
    if out_h == in_h and out_w == in_w:
        return g.copy()

    cdef cnp.ndarray[cnp.float64_t, ndim=3] out = \
        np.zeros((in_h, in_w, nc), dtype=np.float64)
    cdef cnp.ndarray[cnp.intp_t, ndim=1] y0 = np.empty(out_h, dtype=np.intp)
    cdef cnp.ndarray[cnp.intp_t, ndim=1] y1 = np.empty(out_h, dtype=np.intp)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] wy = np.empty(out_h, dtype=np.float64)
    cdef cnp.ndarray[cnp.intp_t, ndim=1] x0 = np.empty(out_w, dtype=np.intp)
    cdef cnp.ndarray[cnp.intp_t, ndim=1] x1 = np.empty(out_w, dtype=np.intp)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] wx = np.empty(out_w, dtype=np.float64)
    _fill_grid(out_h, in_h, <Py_ssize_t*>y0.data, <Py_ssize_t*>y1.data,
               <double*>wy.data)
    _fill_grid(out_w, in_w, <Py_ssize_t*>x0.data, <Py_ssize_t*>x1.data,
               <double*>wx.data)

    cdef Py_ssize_t oy, ox, c
    # four tap passes in the same order as the fallback's np.add.at calls
    for oy in range(out_h):
        for ox in range(out_w):
            for c in range(nc):
                out[y0[oy], x0[ox], c] += g[oy, ox, c] * (1.0 - wy[oy]) * (1.0 - wx[ox])
    for oy in range(out_h):
        for ox in range(out_w):
            for c in range(nc):
                out[y0[oy], x1[ox], c] += g[oy, ox, c] * (1.0 - wy[oy]) * wx[ox]
    for oy in range(out_h):
        for ox in range(out_w):
            for c in range(nc):
                out[y1[oy], x0[ox], c] += g[oy, ox, c] * wy[oy] * (1.0 - wx[ox])
    for oy in range(out_h):
        for ox in range(out_w):
            for c in range(nc):
                out[y1[oy], x1[ox], c] += g[oy, ox, c] * wy[oy] * wx[ox]
    return out
