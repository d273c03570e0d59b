"""Annihilating-ideal graphs of finite commutative rings.

Rings are named by spec strings such as ``zn:12``, ``gf:2:[1,1,1]``,
``prod:(zn:2,zn:4)`` or ``cat:f2xy_x2y2``; catalog graphs (``cat:k5``,
``cat:km:3:3``, ``cat:petersen``) are accepted wherever a graph is expected.
"""

from ._annigraph import (
    AnnigraphError,
    canonical_spec,
    catalog,
    corpus,
    dot,
    genus,
    graph,
    graph_genus,
    ideals,
    is_planar,
    ring_info,
    verify,
)

__all__ = [
    "AnnigraphError",
    "canonical_spec",
    "catalog",
    "corpus",
    "dot",
    "genus",
    "graph",
    "graph_genus",
    "ideals",
    "is_planar",
    "ring_info",
    "verify",
]
