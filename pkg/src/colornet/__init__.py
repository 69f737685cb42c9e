"""Colored edge graphs for networks that must survive homogeneous link failures."""

from colornet.graph import (
    ColoredEdge,
    ColoredEdgeGraph,
    color_classes,
    is_onto,
    new_graph,
    parse_graph,
    serialize_graph,
    to_dot,
)

__version__ = "0.1.0"

__all__ = [
    "ColoredEdge",
    "ColoredEdgeGraph",
    "color_classes",
    "is_onto",
    "new_graph",
    "parse_graph",
    "serialize_graph",
    "to_dot",
]
