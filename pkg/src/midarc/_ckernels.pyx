# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled batch kernels for arc and angular iteration."""

import numpy as np
from libc.math cimport fmod, fabs, M_PI

cdef double TAU = 2.0 * M_PI


cdef inline double _mod_tau(double x) nogil:
    cdef double r = fmod(x, TAU)
    if r < 0.0:
        r += TAU
    if r >= TAU:
        r = 0.0
    return r


cdef inline double _mid(double tp, double tq, double tx) nogil:
    cdef double d = _mod_tau(tq - tp)
    if _mod_tau(tx - tp) < d:
        return _mod_tau(tq + 0.5 * (TAU - d))
    return _mod_tau(tp + 0.5 * d)


cdef inline double _sweep(double tp, double tq, double tx) nogil:
    cdef double d = _mod_tau(tq - tp)
    if _mod_tau(tx - tp) < d:
        return TAU - d
    return d


def arc_trajectories(arcs, Py_ssize_t n_steps):
    cdef double[:, ::1] src = np.ascontiguousarray(arcs, dtype=np.float64)
    cdef Py_ssize_t n = src.shape[0]
    out_arr = np.empty((n, n_steps + 1, 3))
    cdef double[:, :, ::1] out = out_arr
    cdef Py_ssize_t i, k
    cdef double a, b, c, na, nb, nc
    with nogil:
        for i in range(n):
            a = src[i, 0]
            b = src[i, 1]
            c = src[i, 2]
            out[i, 0, 0] = a
            out[i, 0, 1] = b
            out[i, 0, 2] = c
            for k in range(1, n_steps + 1):
                na = 0.5 * (b + c)
                nb = 0.5 * (a + c)
                nc = 0.5 * (a + b)
                a = na
                b = nb
                c = nc
                out[i, k, 0] = a
                out[i, k, 1] = b
                out[i, k, 2] = c
    return out_arr


def angular_trajectories(thetas, Py_ssize_t n_steps):
    cdef double[:, ::1] src = np.ascontiguousarray(thetas, dtype=np.float64)
    cdef Py_ssize_t n = src.shape[0]
    out_arr = np.empty((n, n_steps + 1, 3))
    cdef double[:, :, ::1] out = out_arr
    cdef Py_ssize_t i, k
    cdef double ta, tb, tc, na, nb, nc
    with nogil:
        for i in range(n):
            ta = src[i, 0]
            tb = src[i, 1]
            tc = src[i, 2]
            out[i, 0, 0] = ta
            out[i, 0, 1] = tb
            out[i, 0, 2] = tc
            for k in range(1, n_steps + 1):
                na = _mid(tb, tc, ta)
                nb = _mid(tc, ta, tb)
                nc = _mid(ta, tb, tc)
                ta = na
                tb = nb
                tc = nc
                out[i, k, 0] = ta
                out[i, k, 1] = tb
                out[i, k, 2] = tc
    return out_arr


def arcs_from_positions(traj, radius):
    cdef double[:, :, ::1] src = np.ascontiguousarray(traj, dtype=np.float64)
    cdef double[::1] rad = np.ascontiguousarray(radius, dtype=np.float64)
    cdef Py_ssize_t n = src.shape[0], m = src.shape[1]
    out_arr = np.empty((n, m, 3))
    cdef double[:, :, ::1] out = out_arr
    cdef Py_ssize_t i, k
    cdef double r, ta, tb, tc
    with nogil:
        for i in range(n):
            r = rad[i]
            for k in range(m):
                ta = src[i, k, 0]
                tb = src[i, k, 1]
                tc = src[i, k, 2]
                out[i, k, 0] = r * _sweep(tb, tc, ta)
                out[i, k, 1] = r * _sweep(tc, ta, tb)
                out[i, k, 2] = r * _sweep(ta, tb, tc)
    return out_arr


def deviations(traj, circumference):
    cdef double[:, :, ::1] src = np.ascontiguousarray(traj, dtype=np.float64)
    cdef double[::1] circ = np.ascontiguousarray(circumference, dtype=np.float64)
    cdef Py_ssize_t n = src.shape[0], m = src.shape[1]
    out_arr = np.empty((n, m))
    cdef double[:, ::1] out = out_arr
    cdef Py_ssize_t i, k
    cdef double third, d, e
    with nogil:
        for i in range(n):
            third = circ[i] / 3.0
            for k in range(m):
                d = fabs(src[i, k, 0] - third)
                e = fabs(src[i, k, 1] - third)
                if e > d:
                    d = e
                e = fabs(src[i, k, 2] - third)
                if e > d:
                    d = e
                out[i, k] = d
    return out_arr
