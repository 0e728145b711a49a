"""Pure-Python batch kernels. Same contract as the compiled ``_ckernels``."""

import math

import numpy as np

TAU = 2.0 * math.pi


def _mod_tau(x):
    r = math.fmod(x, TAU)
    if r < 0.0:
        r += TAU
    if r >= TAU:
        r = 0.0
    return r


def _mid(tp, tq, tx):
    d = _mod_tau(tq - tp)
    if _mod_tau(tx - tp) < d:
        return _mod_tau(tq + 0.5 * (TAU - d))
    return _mod_tau(tp + 0.5 * d)


def arc_trajectories(arcs, n_steps):
    arcs = np.ascontiguousarray(arcs, dtype=np.float64)
    n = arcs.shape[0]
    out = np.empty((n, n_steps + 1, 3))
    for i in range(n):
        a, b, c = float(arcs[i, 0]), float(arcs[i, 1]), float(arcs[i, 2])
        row = out[i]
        row[0, 0] = a
        row[0, 1] = b
        row[0, 2] = c
        for k in range(1, n_steps + 1):
            a, b, c = 0.5 * (b + c), 0.5 * (a + c), 0.5 * (a + b)
            row[k, 0] = a
            row[k, 1] = b
            row[k, 2] = c
    return out


def angular_trajectories(thetas, n_steps):
    thetas = np.ascontiguousarray(thetas, dtype=np.float64)
    n = thetas.shape[0]
    out = np.empty((n, n_steps + 1, 3))
    for i in range(n):
        ta, tb, tc = float(thetas[i, 0]), float(thetas[i, 1]), float(thetas[i, 2])
        row = out[i]
        row[0, 0] = ta
        row[0, 1] = tb
        row[0, 2] = tc
        for k in range(1, n_steps + 1):
            ta, tb, tc = _mid(tb, tc, ta), _mid(tc, ta, tb), _mid(ta, tb, tc)
            row[k, 0] = ta
            row[k, 1] = tb
            row[k, 2] = tc
    return out


def arcs_from_positions(traj, radius):
    """Opposite-arc lengths for every row of an angular trajectory."""
    traj = np.ascontiguousarray(traj, dtype=np.float64)
    radius = np.ascontiguousarray(radius, dtype=np.float64)
    n, m = traj.shape[0], traj.shape[1]
    out = np.empty((n, m, 3))
    for i in range(n):
        r = float(radius[i])
        for k in range(m):
            ta, tb, tc = float(traj[i, k, 0]), float(traj[i, k, 1]), float(traj[i, k, 2])
            out[i, k, 0] = r * _sweep(tb, tc, ta)
            out[i, k, 1] = r * _sweep(tc, ta, tb)
            out[i, k, 2] = r * _sweep(ta, tb, tc)
    return out


def _sweep(tp, tq, tx):
    d = _mod_tau(tq - tp)
    if _mod_tau(tx - tp) < d:
        return TAU - d
    return d


def deviations(traj, circumference):
    traj = np.ascontiguousarray(traj, dtype=np.float64)
    circumference = np.ascontiguousarray(circumference, dtype=np.float64)
    n, m = traj.shape[0], traj.shape[1]
    out = np.empty((n, m))
    for i in range(n):
        third = float(circumference[i]) / 3.0
        for k in range(m):
            out[i, k] = max(
                abs(float(traj[i, k, 0]) - third),
                abs(float(traj[i, k, 1]) - third),
                abs(float(traj[i, k, 2]) - third),
            )
    return out
