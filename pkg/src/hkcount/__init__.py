"""Exact generating series and intersection numbers for elliptic curves on hyper-Kaehler varieties."""

__version__ = "0.1.0"
