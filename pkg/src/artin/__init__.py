"""Decision procedures for Artin groups given by labeled simplicial graphs."""

from artin.graph import LabeledGraph, emit_graph, parse_graph

__all__ = ["LabeledGraph", "emit_graph", "parse_graph"]
__version__ = "0.1.0"
