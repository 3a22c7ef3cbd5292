"""Finite groups, formations and non-F-graphs."""

__version__ = "0.1.0"
