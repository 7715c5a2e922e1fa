"""Exact tools for pure cubic fields, cubic residue symbols and 3-class groups."""

__version__ = "0.1.0"
