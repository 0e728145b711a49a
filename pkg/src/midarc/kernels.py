"""Batch iteration kernels, compiled when available.

The Cython build (``midarc._ckernels``) is used unless it is missing or
the environment sets ``MIDARC_PURE_PYTHON=1``. ``BACKEND`` names the one
in use.
"""

import os

from midarc import _pykernels

if os.environ.get("MIDARC_PURE_PYTHON") == "1":
    _impl = _pykernels
else:
    try:
        from midarc import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "python" if _impl is _pykernels else "cython"

arc_trajectories = _impl.arc_trajectories
angular_trajectories = _impl.angular_trajectories
arcs_from_positions = _impl.arcs_from_positions
deviations = _impl.deviations
