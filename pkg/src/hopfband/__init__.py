"""Exact knot invariants and annulus-presentation obstructions."""

__version__ = "0.1.0"
