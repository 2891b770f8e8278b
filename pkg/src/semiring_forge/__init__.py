"""Finite simple additively idempotent semirings: construction,
classification, enumeration, and the supporting order theory."""

__version__ = "0.1.0"
