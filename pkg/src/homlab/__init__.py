"""Desk-scale workbench for axiomatic homology of simplicial pairs."""

__version__ = "0.1.0"
