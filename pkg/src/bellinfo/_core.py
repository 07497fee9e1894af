"""Select the grid kernel implementation at import time.

The compiled :mod:`bellinfo._kernels` is used when it was built; otherwise
the pure-Python :mod:`bellinfo._fallback`.  ``BACKEND`` names the choice.
"""
try:
    from . import _kernels as _impl

    BACKEND = "cython"
except ImportError:  # extension not built
    from . import _fallback as _impl

    BACKEND = "python"

theta_table = _impl.theta_table
flow_table = _impl.flow_table
triple_scan = _impl.triple_scan
independent_multisets = _impl.independent_multisets

__all__ = ["BACKEND", "theta_table", "flow_table", "triple_scan", "independent_multisets"]
