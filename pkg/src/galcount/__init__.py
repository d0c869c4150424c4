"""Galois-group statistics of integer polynomials in coefficient boxes."""

__version__ = "0.1.0"
