"""Search toolkit for k-vertex-critical H-free graphs."""

from .graph import Graph, named_graph, parse_graph6, to_graph6

__version__ = "0.1.0"

__all__ = ["Graph", "named_graph", "parse_graph6", "to_graph6", "__version__"]
