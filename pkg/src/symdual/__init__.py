"""Exact combinatorics of symplectic dual pairs."""

__version__ = "0.1.0"
