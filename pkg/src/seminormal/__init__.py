"""Seminormalization of reduced affine rings over QQ and GF(p)."""

__version__ = "0.1.0"
