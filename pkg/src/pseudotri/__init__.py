"""Exact counting and enumeration of pseudo-triangulations."""

__version__ = "0.1.0"
