"""Spanning-surface invariants of knot diagrams."""

try:
    from ._crossgeo import *  # noqa: F401,F403  (installed wheel layout)
except ImportError:  # in-tree runs point PYTHONPATH at the cmake build dir
    from _crossgeo import *  # noqa: F401,F403
